"""Triangular p-integral bases and their self-check."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

from quartic_basis.integrality import QuarticElement, is_p_integral
from quartic_basis.polyring import IntPoly

logger = logging.getLogger(__name__)


class TableMismatchError(RuntimeError):
    pass


@dataclass(frozen=True)
class TriangularPBasis:
    """(1, L1(alpha)/p^r1, L2(alpha)/p^r2, L3(alpha)/p^r3) with L_i monic of degree i."""

    p: int
    numerators: tuple[IntPoly, IntPoly, IntPoly]
    exponents: tuple[int, int, int]
    case: str
    vp_disc: int
    vp_dk: int
    ambient: IntPoly
    shift: int | None = None
    shift_iterations: int = 0
    scale: int = 0

    @property
    def vp_index(self) -> int:
        return sum(self.exponents)

    def rows(self) -> list[tuple[IntPoly, int]]:
        """All four basis rows, the constant 1 included."""
        return [(IntPoly.constant(1), 0)] + list(zip(self.numerators, self.exponents))

    def to_elements(self) -> list[QuarticElement]:
        return [
            QuarticElement.from_numerator(num, r, self.p, self.ambient)
            for num, r in zip(self.numerators, self.exponents)
        ]

    def to_dict(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "case": self.case,
            "vp_disc": self.vp_disc,
            "vp_index": self.vp_index,
            "vp_dk": self.vp_dk,
            "basis": [{"numerator": list(num.coeffs), "denom_exp": r} for num, r in self.rows()],
            "shift": self.shift,
        }


def certify(basis: TriangularPBasis) -> TriangularPBasis:
    """Raise TableMismatchError unless the basis passes every local check."""
    label = f"case={basis.case} p={basis.p}"
    for i, num in enumerate(basis.numerators, start=1):
        if num.degree != i or not num.is_monic():
            raise TableMismatchError(f"{label}: numerator {num} is not monic of degree {i}")
    r1, r2, r3 = basis.exponents
    if not 0 <= r1 <= r2 <= r3:
        raise TableMismatchError(f"{label}: exponents {basis.exponents} are not increasing")
    if basis.vp_dk < 0 or basis.vp_disc != 2 * basis.vp_index + basis.vp_dk:
        raise TableMismatchError(
            f"{label}: v(disc)={basis.vp_disc} != 2*{basis.vp_index} + {basis.vp_dk}"
        )
    for element in basis.to_elements():
        if not is_p_integral(element):
            raise TableMismatchError(f"{label}: {element.numerator}/{basis.p}^{element.i} is not integral")
    return basis


class UnnormalizedInputError(ValueError):
    pass


X = IntPoly.x()
POWER_NUMERATORS = (X, IntPoly.monomial(2), IntPoly.monomial(3))


@dataclass(frozen=True)
class TableRow:
    """One table row instantiated for concrete (a, b): what p_basis emits before the checks."""

    case: str
    numerators: tuple[IntPoly, IntPoly, IntPoly]
    exponents: tuple[int, int, int]
    vp_dk: int
    shift: int | None = None
    shift_iterations: int = 0

    @classmethod
    def power(cls, case: str, vp_dk: int) -> "TableRow":
        return cls(case, POWER_NUMERATORS, (0, 0, 0), vp_dk)

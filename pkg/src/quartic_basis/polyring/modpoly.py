"""Polynomials over the prime field F_p, backed by sympy's dense GF(p) routines."""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_diff,
    gf_div,
    gf_eval,
    gf_gcd,
    gf_monic,
    gf_mul,
    gf_mul_ground,
    gf_neg,
    gf_pow_mod,
    gf_rem,
    gf_sqf_p,
    gf_sub,
)

if TYPE_CHECKING:
    from quartic_basis.polyring.intpoly import IntPoly


def _strip(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class ModPoly:
    """Polynomial over F_p, coefficients ascending and reduced to [0, p).

    galoistools works on descending lists; dense() and from_dense() convert.
    """

    coeffs: tuple[int, ...]
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip([int(c) % self.p for c in self.coeffs]))

    @classmethod
    def from_ints(cls, coeffs: Iterable[int], p: int) -> "ModPoly":
        return cls(tuple(coeffs), p)

    @classmethod
    def from_dense(cls, dense: Iterable[int], p: int) -> "ModPoly":
        return cls(tuple(reversed(list(dense))), p)

    @classmethod
    def zero(cls, p: int) -> "ModPoly":
        return cls((), p)

    @classmethod
    def one(cls, p: int) -> "ModPoly":
        return cls((1,), p)

    @classmethod
    def x(cls, p: int) -> "ModPoly":
        return cls((0, 1), p)

    def dense(self) -> list[int]:
        return list(reversed(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def _same_field(self, other: "ModPoly") -> None:
        if other.p != self.p:
            raise ValueError(f"mixed moduli {self.p} and {other.p}")

    def __add__(self, other: "ModPoly") -> "ModPoly":
        self._same_field(other)
        return ModPoly.from_dense(gf_add(self.dense(), other.dense(), self.p, ZZ), self.p)

    def __neg__(self) -> "ModPoly":
        return ModPoly.from_dense(gf_neg(self.dense(), self.p, ZZ), self.p)

    def __sub__(self, other: "ModPoly") -> "ModPoly":
        self._same_field(other)
        return ModPoly.from_dense(gf_sub(self.dense(), other.dense(), self.p, ZZ), self.p)

    def __mul__(self, other: "ModPoly | int") -> "ModPoly":
        if isinstance(other, int):
            return ModPoly.from_dense(gf_mul_ground(self.dense(), other % self.p, self.p, ZZ), self.p)
        self._same_field(other)
        return ModPoly.from_dense(gf_mul(self.dense(), other.dense(), self.p, ZZ), self.p)

    __rmul__ = __mul__

    def monic(self) -> "ModPoly":
        return ModPoly.from_dense(gf_monic(self.dense(), self.p, ZZ)[1], self.p)

    def __divmod__(self, other: "ModPoly") -> tuple["ModPoly", "ModPoly"]:
        self._same_field(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q, r = gf_div(self.dense(), other.dense(), self.p, ZZ)
        return ModPoly.from_dense(q, self.p), ModPoly.from_dense(r, self.p)

    def __floordiv__(self, other: "ModPoly") -> "ModPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "ModPoly") -> "ModPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "ModPoly":
        return ModPoly.from_dense(gf_diff(self.dense(), self.p, ZZ), self.p)

    def evaluate(self, x: int) -> int:
        return int(gf_eval(self.dense(), x % self.p, self.p, ZZ))

    def is_squarefree(self) -> bool:
        return bool(gf_sqf_p(self.dense(), self.p, ZZ))

    def pow_mod(self, n: int, modulus: "ModPoly") -> "ModPoly":
        """self^n mod modulus."""
        self._same_field(modulus)
        dense = gf_pow_mod(self.dense(), n, modulus.dense(), self.p, ZZ)
        # n = 0 returns 1 unreduced
        return ModPoly.from_dense(gf_rem(dense, modulus.dense(), self.p, ZZ), self.p)

    def lift(self) -> "IntPoly":
        """Canonical integer lift with coefficients in [0, p)."""
        from quartic_basis.polyring.intpoly import IntPoly

        return IntPoly(self.coeffs)

    def format(self, var: str = "X") -> str:
        return self.lift().format(var)

    def __str__(self) -> str:
        return self.format()


def gcd(f: ModPoly, g: ModPoly) -> ModPoly:
    """Monic gcd (zero only when both inputs are zero)."""
    f._same_field(g)
    return ModPoly.from_dense(gf_gcd(f.dense(), g.dense(), f.p, ZZ), f.p)


def lift(f: ModPoly) -> "IntPoly":
    return f.lift()

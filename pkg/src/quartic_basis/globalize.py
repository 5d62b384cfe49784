"""Recombine per-prime triangular bases into one global integral basis."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

from sympy.ntheory.modular import crt

from quartic_basis.integrality import QuarticElement, is_p_integral
from quartic_basis.polyring import IntPoly, bareiss_determinant, discriminant, vp_int
from quartic_basis.trinomial import (
    POWER_NUMERATORS,
    FactorizationIncompleteError,
    TriangularPBasis,
    TrinomialField,
    p_basis_all,
)

logger = logging.getLogger(__name__)


class InconsistentFieldsError(ValueError):
    pass


@dataclass(frozen=True)
class GlobalTriangularBasis:
    """(1, L1(alpha)/d1, L2(alpha)/d2, L3(alpha)/d3) with d1 | d2 | d3."""

    numerators: tuple[IntPoly, IntPoly, IntPoly]
    divisors: tuple[int, int, int]
    dk: int
    discriminant: int
    ambient: IntPoly
    conditional: bool = False
    cofactor: int = 1
    local: Mapping[int, TriangularPBasis] = field(default_factory=dict, repr=False)

    @property
    def index(self) -> int:
        d1, d2, d3 = self.divisors
        return d1 * d2 * d3

    def rows(self) -> list[tuple[IntPoly, int]]:
        return [(IntPoly.constant(1), 1)] + list(zip(self.numerators, self.divisors))

    def to_dict(self) -> dict[str, Any]:
        d1, d2, d3 = self.divisors
        return {
            "d1": d1,
            "d2": d2,
            "d3": d3,
            "ind": self.index,
            "dK": self.dk,
            "basis": [{"numerator": list(num.coeffs), "denominator": d} for num, d in self.rows()],
            "conditional": self.conditional,
        }


def elementary_divisors(bases: Mapping[int, TriangularPBasis]) -> tuple[int, int, int]:
    divisors = [1, 1, 1]
    for p, basis in bases.items():
        for i, r in enumerate(basis.exponents):
            divisors[i] *= p**r
    return divisors[0], divisors[1], divisors[2]


def _crt_numerator(degree: int, bases: Mapping[int, TriangularPBasis], modulus: int) -> IntPoly:
    moduli: list[int] = []
    locals_: list[IntPoly] = []
    for p, basis in bases.items():
        r = basis.exponents[degree - 1]
        if r > 0:
            moduli.append(p**r)
            locals_.append(basis.numerators[degree - 1])
    if not moduli:
        return POWER_NUMERATORS[degree - 1]
    coeffs = []
    for k in range(degree):
        residues = [num.coeff(k) % m for num, m in zip(locals_, moduli)]
        solution, _ = crt(moduli, residues)
        coeffs.append(int(solution) % modulus)
    return IntPoly(tuple(coeffs) + (1,))


def combine(bases: Mapping[int, TriangularPBasis], ambient: IntPoly | None = None) -> GlobalTriangularBasis:
    """Coefficientwise CRT of the local numerators modulo p^r_i, least residues mod d_i."""
    ambients = {basis.ambient for basis in bases.values()}
    if ambient is not None:
        ambients.add(ambient)
    if len(ambients) != 1:
        raise InconsistentFieldsError(f"local bases disagree on the defining polynomial: {sorted(map(str, ambients))}")
    (poly,) = ambients
    divisors = elementary_divisors(bases)
    numerators = tuple(_crt_numerator(i, bases, d) for i, d in enumerate(divisors, start=1))
    disc = discriminant(poly)
    ind = divisors[0] * divisors[1] * divisors[2]
    dk, rest = divmod(disc, ind * ind)
    if rest:
        raise InconsistentFieldsError(f"ind^2 = {ind * ind} does not divide disc = {disc}")
    logger.info("global basis poly=%s divisors=%s dK=%s", poly, divisors, dk)
    return GlobalTriangularBasis(
        numerators=numerators,  # type: ignore[arg-type]
        divisors=divisors,
        dk=dk,
        discriminant=disc,
        ambient=poly,
        local=dict(bases),
    )


def integral_basis(a: int, b: int, *, max_trial_division: int | None = None) -> GlobalTriangularBasis:
    """Global integral basis of Q(alpha), alpha^4 + a*alpha + b = 0.

    An unfactored cofactor of the discriminant gives a result flagged conditional:
    it is exact if the cofactor is squarefree.
    """
    field_ = TrinomialField(a, b)
    try:
        bases = p_basis_all(field_, max_trial_division=max_trial_division)
    except FactorizationIncompleteError as exc:
        logger.warning(
            "conditional basis a=%s b=%s cofactor=%s: assumed squarefree", a, b, exc.cofactor
        )
        partial = combine(exc.partial, field_.polynomial)
        return GlobalTriangularBasis(
            numerators=partial.numerators,
            divisors=partial.divisors,
            dk=partial.dk,
            discriminant=partial.discriminant,
            ambient=partial.ambient,
            conditional=True,
            cofactor=exc.cofactor,
            local=partial.local,
        )
    return combine(bases, field_.polynomial)


def change_of_basis_determinant(basis: GlobalTriangularBasis) -> Fraction:
    """Determinant of the rational matrix taking (1, alpha, alpha^2, alpha^3) to the basis."""
    numerators = [row.padded(4) for row, _ in basis.rows()]
    return Fraction(bareiss_determinant(numerators), basis.index)


def local_elements(basis: GlobalTriangularBasis, p: int) -> list[QuarticElement]:
    """w_i viewed at p: L_i / p^v_p(d_i), the cofactor of d_i being a unit at p."""
    return [
        QuarticElement.from_numerator(num, vp_int(d, p), p, basis.ambient)
        for num, d in zip(basis.numerators, basis.divisors)
    ]


def is_integral(basis: GlobalTriangularBasis) -> bool:
    primes = sorted(basis.local)
    return all(is_p_integral(w) for p in primes for w in local_elements(basis, p))


def multiplicative_alternates(basis: TriangularPBasis) -> list[tuple[int, QuarticElement]]:
    """alpha * w_i, offered as w_(i+1) wherever r_i == r_(i+1)."""
    elements = [QuarticElement.from_numerator(IntPoly.constant(1), 0, basis.p, basis.ambient)]
    elements += basis.to_elements()
    exponents = (0,) + tuple(basis.exponents)
    return [
        (i + 1, elements[i].times_alpha())
        for i in range(3)
        if exponents[i] == exponents[i + 1]
    ]

"""Characteristic polynomials of quartic elements and the p-integrality test.

An element is w = (t*alpha^3 + z*alpha^2 + y*alpha + x) / p^i. For the
trinomial X^4 + aX + b the characteristic polynomial of multiplication by
the numerator has closed-form coefficients; for any other monic quartic it
comes from the 4x4 multiplication matrix.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from sympy import Matrix

from quartic_basis.polyring import IntPoly

logger = logging.getLogger(__name__)


class NotTrinomialError(ValueError):
    pass


@dataclass(frozen=True)
class QuarticElement:
    """(t*alpha^3 + z*alpha^2 + y*alpha + x) / p^i; not auto-normalized."""

    x: int
    y: int
    z: int
    t: int
    i: int
    p: int
    ambient: IntPoly

    @classmethod
    def from_numerator(cls, numerator: IntPoly, exponent: int, p: int, ambient: IntPoly) -> "QuarticElement":
        if numerator.degree > 3:
            numerator = numerator.divmod_monic(ambient)[1]
        x, y, z, t = numerator.padded(4)
        return cls(x=x, y=y, z=z, t=t, i=exponent, p=p, ambient=ambient)

    @property
    def numerator(self) -> IntPoly:
        return IntPoly((self.x, self.y, self.z, self.t))

    def coordinates(self) -> tuple[Fraction, ...]:
        """Coordinates over the power basis (1, alpha, alpha^2, alpha^3)."""
        d = self.p**self.i
        return tuple(Fraction(c, d) for c in (self.x, self.y, self.z, self.t))

    def times_alpha(self) -> "QuarticElement":
        """alpha * w, reduced through alpha^4 = -(lower terms of the ambient)."""
        shifted = self.numerator * IntPoly.x()
        return QuarticElement.from_numerator(shifted, self.i, self.p, self.ambient)


def _trinomial_coefficients(poly: IntPoly) -> tuple[int, int]:
    if poly.degree != 4 or not poly.is_monic() or poly.coeff(2) or poly.coeff(3):
        raise NotTrinomialError(f"{poly} is not of the form X^4 + aX + b")
    return poly.coeff(1), poly.coeff(0)


def char_poly_lemma(w: QuarticElement) -> tuple[int, int, int, int]:
    """(A3, A2, A1, A0) for the numerator of w over X^4 + aX + b."""
    a, b = _trinomial_coefficients(w.ambient)
    x, y, z, t = w.x, w.y, w.z, w.t
    a3 = -4 * x + 3 * a * t
    a2 = (
        6 * x**2 - 9 * a * x * t + 3 * a * y * z + 4 * b * y * t
        + 2 * b * z**2 + 3 * a**2 * t**2
    )
    a1 = -(
        4 * x**3 - 9 * a * x**2 * t + 4 * b * x * z**2 + 8 * b * x * y * t
        + 6 * a * x * y * z + 6 * a**2 * x * t**2 - a * y**3 - 4 * b * y**2 * z
        - 3 * a**2 * y * z * t + a**2 * z**3 - 5 * a * b * y * t**2
        + a * b * z**2 * t + 4 * b**2 * z * t**2 - a**3 * t**3
    )
    a0 = (
        x**4 + 3 * a * x**2 * y * z + 2 * b * x**2 * z**2 - a * x * y**3
        - 4 * b * x * y**2 * z - 3 * a * x**3 * t + b * y**4 + b**2 * z**4
        + b**3 * t**4 + 3 * a**2 * x**2 * t**2 - 3 * a**2 * x * y * z * t
        + a**2 * x * z**3 - 5 * a * b * x * y * t**2 + a * b * x * z**2 * t
        + 4 * b**2 * x * z * t**2 - a**3 * x * t**3 + 4 * b * x**2 * y * t
        + 3 * a * b * y**2 * z * t + 2 * b**2 * y**2 * t**2 - a * b * y * z**3
        - 4 * b**2 * y * z**2 * t + a**2 * b * y * t**3 - a * b**2 * z * t**3
    )
    return a3, a2, a1, a0


def multiplication_matrix(numerator: IntPoly, ambient: IntPoly) -> list[list[int]]:
    """Column k holds the power-basis coordinates of numerator * alpha^k."""
    columns = []
    for k in range(4):
        _, r = (numerator * IntPoly.monomial(k)).divmod_monic(ambient)
        columns.append(r.padded(4))
    return [[columns[k][r] for k in range(4)] for r in range(4)]


def _char_poly(matrix: Sequence[Sequence[int]]) -> list[Fraction]:
    """det(X*I - M) ascending."""
    coeffs = Matrix(matrix).charpoly().all_coeffs()
    return [Fraction(int(c)) for c in reversed(coeffs)]


def char_poly_generic(w: QuarticElement, ambient: IntPoly | None = None) -> tuple[Fraction, ...]:
    """Monic characteristic polynomial of multiplication by w, ascending."""
    poly = ambient if ambient is not None else w.ambient
    if poly.degree != 4 or not poly.is_monic():
        raise ValueError(f"{poly} is not a monic quartic")
    coeffs = _char_poly(multiplication_matrix(w.numerator, poly))
    scale = w.p**w.i
    return tuple(c / scale ** (4 - k) for k, c in enumerate(coeffs))


def _numerator_coefficients(w: QuarticElement) -> tuple[int, int, int, int]:
    """(A3, A2, A1, A0) of the numerator, by closed form when available."""
    try:
        return char_poly_lemma(w)
    except NotTrinomialError:
        c0, c1, c2, c3, _ = _char_poly(multiplication_matrix(w.numerator, w.ambient))
        return int(c3), int(c2), int(c1), int(c0)


def divisibility_profile(w: QuarticElement) -> tuple[bool, bool, bool, bool]:
    """Whether p^{ji} divides A_j, for j = 3, 2, 1, 0."""
    coeffs = _numerator_coefficients(w)
    q = w.p**w.i
    return tuple(c % q**k == 0 for k, c in zip(range(1, 5), coeffs))  # type: ignore[return-value]


def is_p_integral(w: QuarticElement) -> bool:
    """All four coefficients A_j / p^{ji} are integers, A_0 included."""
    profile = divisibility_profile(w)
    if all(profile[:3]) and not profile[3]:
        logger.debug("A0 alone rejects p=%s i=%s numerator=%s", w.p, w.i, w.numerator)
    return all(profile)

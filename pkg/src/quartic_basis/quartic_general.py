"""p-integral bases for p-regular monic quartics X^4 + mX^3 + nX^2 + aX + b.

The shape of P mod p picks the construction:

    squarefree               power basis
    linear^4, linear^3,      (1, a, (t^2 + a3 t)/p^h2, (t^3 + a3 t^2 + a2 t)/p^h3)
    linear^2 * squarefree    with t = alpha - x0 and a_i the Taylor digits at x0
    linear^2 * linear^2      difference of the two linear^2 elements
    quadratic^2              (1, alpha, phi(alpha)/p^h, alpha*phi(alpha)/p^h)
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from quartic_basis.newton import index_lower_bound, ind_N, is_p_regular, phi_polygon
from quartic_basis.polyring import (
    INFINITY,
    IntPoly,
    ModPoly,
    discriminant,
    factor_shape_mod_p,
    is_irreducible_quartic,
    taylor_shift,
    vp_int,
    vp_poly,
)
from quartic_basis.trinomial import (
    POWER_NUMERATORS,
    ReducibleError,
    TableMismatchError,
    TriangularPBasis,
    certify,
)

logger = logging.getLogger(__name__)


class NotRegularError(RuntimeError):
    pass


class HypothesisViolatedError(ValueError):
    pass


@dataclass(frozen=True)
class QuarticField:
    m: int
    n: int
    a: int
    b: int
    discriminant: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        poly = self.polynomial
        disc = discriminant(poly)
        if disc == 0 or not is_irreducible_quartic(poly):
            raise ReducibleError(f"{poly} is reducible over Q")
        object.__setattr__(self, "discriminant", disc)

    @property
    def polynomial(self) -> IntPoly:
        return IntPoly((self.b, self.a, self.n, self.m, 1))

    def check_normalized(self, p: int) -> None:
        if (
            vp_int(self.m, p) == 0
            or vp_int(self.n, p) <= 1
            or vp_int(self.a, p) <= 2
            or vp_int(self.b, p) <= 3
        ):
            return
        raise HypothesisViolatedError(f"{self.polynomial} is not normalized at p={p}")


def _root_of_lift(factor: ModPoly) -> int:
    """x0 with X - x0 the canonical lift of a linear factor, the phi used by is_p_regular."""
    return -factor.lift().coeff(0)


def _shifted_numerators(poly: IntPoly, x0: int) -> tuple[IntPoly, IntPoly]:
    """(t^2 + a3 t, t^3 + a3 t^2 + a2 t) with t = X - x0, written in X."""
    taylor = taylor_shift(poly, x0)
    a3, a2 = taylor.coeff(3), taylor.coeff(2)
    middle = taylor_shift(IntPoly((0, a3, 1)), -x0)
    top = taylor_shift(IntPoly((0, a2, a3, 1)), -x0)
    return middle, top


def _linear_heights(poly: IntPoly, x0: int, p: int) -> tuple[int, int]:
    index = ind_N(poly, IntPoly((-x0, 1)), p)
    return index.h(2), index.h(3)


def case5_difference(poly: IntPoly, p: int, first: int, second: int) -> tuple[IntPoly, int, int]:
    """Raw numerator N_i - N_j of w_i - p^(h_j - h_i) w_j for roots x_i, x_j of P mod p.

    Returns the numerator with the two exponents; its X^2 coefficient is x_i - x_j.
    """
    _, top_i = _shifted_numerators(poly, first)
    _, top_j = _shifted_numerators(poly, second)
    _, h_i = _linear_heights(poly, first, p)
    _, h_j = _linear_heights(poly, second, p)
    return top_i - top_j, h_i, h_j


def _make_monic_quadratic(numerator: IntPoly, exponent: int, p: int) -> IntPoly:
    """Scale by the inverse of the unit X^2 coefficient and drop a multiple of p^exponent X^2."""
    modulus = p**exponent
    inv = pow(numerator.coeff(2), -1, modulus)
    scaled = numerator * inv
    excess = scaled.coeff(2) - 1
    return scaled - IntPoly.monomial(2, excess)


def _basis(poly: IntPoly, p: int, case: str, numerators, exponents) -> TriangularPBasis:
    vp_disc = vp_int(discriminant(poly), p)
    basis = TriangularPBasis(
        p=p,
        numerators=tuple(numerators),
        exponents=tuple(exponents),
        case=case,
        vp_disc=vp_disc,
        vp_dk=vp_disc - 2 * sum(exponents),
        ambient=poly,
    )
    bound = index_lower_bound(poly, p)
    if basis.vp_index != bound:
        raise TableMismatchError(f"case={case} p={p}: index {basis.vp_index} != bound {bound}")
    return certify(basis)


def p_basis_regular(quartic: QuarticField, p: int) -> TriangularPBasis:
    quartic.check_normalized(p)
    poly = quartic.polynomial
    regular, _ = is_p_regular(poly, p)
    if not regular:
        raise NotRegularError(f"{poly} is not {p}-regular")
    factors = factor_shape_mod_p(poly, p)
    repeated = [(g, e) for g, e in factors if e >= 2]
    logger.info("regular p-basis poly=%s p=%s shape=%s", poly, p, [(str(g), e) for g, e in factors])
    if not repeated:
        return _basis(poly, p, "squarefree", POWER_NUMERATORS, (0, 0, 0))
    if len(repeated) == 2:
        (g1, _), (g2, _) = repeated
        x1, x2 = _root_of_lift(g1), _root_of_lift(g2)
        _, h1 = _linear_heights(poly, x1, p)
        _, h2 = _linear_heights(poly, x2, p)
        if h1 > h2:
            x1, x2, h1, h2 = x2, x1, h2, h1
        _, top_j = _shifted_numerators(poly, x2)
        if h1 == 0:
            return _basis(poly, p, "linear^2*linear^2", (POWER_NUMERATORS[0], POWER_NUMERATORS[1], top_j), (0, 0, h2))
        raw, _, _ = case5_difference(poly, p, x1, x2)
        middle = _make_monic_quadratic(raw, h1, p)
        return _basis(poly, p, "linear^2*linear^2", (POWER_NUMERATORS[0], middle, top_j), (0, h1, h2))
    g, e = repeated[0]
    if g.degree == 2:
        phi = g.lift()
        _, expansion = phi_polygon(poly, phi, p)
        v_a = vp_poly(expansion.digit(1), p)
        v_b = vp_poly(expansion.digit(0), p)
        half_b = INFINITY if v_b is INFINITY else v_b // 2
        h = min(v_a, half_b)
        if h is INFINITY:
            raise TableMismatchError(f"{poly} is divisible by {phi}")
        return _basis(poly, p, "quadratic^2", (POWER_NUMERATORS[0], phi, phi * IntPoly.x()), (0, h, h))
    x0 = _root_of_lift(g)
    h2, h3 = _linear_heights(poly, x0, p)
    middle, top = _shifted_numerators(poly, x0)
    return _basis(poly, p, f"linear^{e}", (POWER_NUMERATORS[0], middle, top), (0, h2, h3))

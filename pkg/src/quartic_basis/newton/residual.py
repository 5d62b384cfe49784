"""Residual polynomials over F_p[X]/(phi) and the p-regularity certificate."""
from __future__ import annotations

import logging
from dataclasses import dataclass

from sympy import Expr, Integer, Poly, Symbol, diff
from sympy.polys.subresultants_qq_zz import sylvester

from quartic_basis.newton.polygon import (
    NewtonPolygonError,
    Side,
    phi_polygon,
    polygon_index,
    principal_part,
)
from quartic_basis.polyring import (
    IntPoly,
    ModPoly,
    factor_shape_mod_p,
    vp_poly,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResidueField:
    """F_p[X]/(phi_bar) with elements kept as reduced ModPolys."""

    modulus: ModPoly

    @property
    def p(self) -> int:
        return self.modulus.p

    def reduce(self, x: ModPoly) -> ModPoly:
        return x % self.modulus

    def zero(self) -> ModPoly:
        return ModPoly.zero(self.p)


_X = Symbol("x")
_Y = Symbol("Y")


def _as_expr(f: ModPoly) -> Expr:
    return sum((c * _X**k for k, c in enumerate(f.coeffs)), Integer(0))


@dataclass(frozen=True)
class ResidualPoly:
    """P_S(Y) stored ascending in Y; coeffs[d] comes from the left end of the side."""

    side: Side
    coeffs: tuple[ModPoly, ...]
    field: ResidueField

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_squarefree(self) -> bool:
        """Res(P_S, P_S') is nonzero in F_p[x]/(phi_bar).

        The end coefficients of a side never vanish, so the formal degrees of
        the integer lifts agree with those over the residue field.
        """
        if self.degree <= 1:
            return True
        lifted = sum((_as_expr(c) * _Y**k for k, c in enumerate(self.coeffs)), Integer(0))
        det = sylvester(lifted, diff(lifted, _Y), _Y).det(method="bareiss")
        p = self.field.p
        reduced = Poly(det, _X, modulus=p).rem(Poly(_as_expr(self.field.modulus), _X, modulus=p))
        return not reduced.is_zero

    def describe(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            mono = "" if k == 0 else ("Y" if k == 1 else f"Y^{k}")
            coef = f"({c.format('x')})" if c.degree > 0 else str(c.leading)
            if mono and coef == "1":
                terms.append(mono)
            else:
                terms.append(coef + ("*" + mono if mono else ""))
        return " + ".join(terms)


def residual_poly(poly: IntPoly, phi: IntPoly, p: int, side: Side) -> ResidualPoly:
    polygon, expansion = phi_polygon(poly, phi, p)
    if side not in principal_part(polygon).sides:
        raise NewtonPolygonError(f"{side.describe()} is not a side of the principal polygon")
    field = ResidueField(phi.to_mod(p))
    e = side.ramification
    step = side.height // side.degree
    d = side.degree
    coeffs = [field.zero()] * (d + 1)
    for k in range(d + 1):
        j = side.start.abscissa + k * e
        y = side.start.ordinate + k * step
        term = expansion.terms[j]
        if vp_poly(term, p) == y:
            coeffs[d - k] = field.reduce(term.exact_div(p**y).to_mod(p))
    return ResidualPoly(side=side, coeffs=tuple(coeffs), field=field)


@dataclass(frozen=True)
class RegularityEntry:
    phi: IntPoly
    multiplicity: int
    side: Side
    residual: ResidualPoly
    squarefree: bool


def is_p_regular(poly: IntPoly, p: int) -> tuple[bool, tuple[RegularityEntry, ...]]:
    """Check every residual polynomial of every principal side for squarefreeness."""
    entries: list[RegularityEntry] = []
    for factor, multiplicity in factor_shape_mod_p(poly, p):
        phi = factor.lift()
        polygon, _ = phi_polygon(poly, phi, p)
        for side in principal_part(polygon).sides:
            residual = residual_poly(poly, phi, p, side)
            entries.append(
                RegularityEntry(
                    phi=phi,
                    multiplicity=multiplicity,
                    side=side,
                    residual=residual,
                    squarefree=residual.is_squarefree(),
                )
            )
    regular = all(entry.squarefree for entry in entries)
    logger.debug("regularity p=%s regular=%s sides=%d", p, regular, len(entries))
    return regular, tuple(entries)


def index_lower_bound(poly: IntPoly, p: int) -> int:
    """Sum over the factors phi_i of P mod p of deg(phi_i) * ind_N_i(P)."""
    total = 0
    for factor, _ in factor_shape_mod_p(poly, p):
        phi = factor.lift()
        polygon, expansion = phi_polygon(poly, phi, p)
        total += phi.degree * polygon_index(principal_part(polygon), expansion.length).total
    return total

"""p-maximal orders by radical and ring of multipliers, iterated to a fixed point.

Everything is done in coordinates over the power basis (1, alpha, alpha^2, alpha^3)
with exact rationals; no table or polygon result is consulted.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from quartic_basis.integrality import QuarticElement
from quartic_basis.oracle.lattice import (
    Vector,
    hermite_basis,
    is_p_integral_vector,
    left_kernel_mod_p,
    reduce_mod_p,
    triangular_coordinates,
)
from quartic_basis.polyring import IntPoly, discriminant, vp_int
from quartic_basis.trinomial import TriangularPBasis

logger = logging.getLogger(__name__)

DEGREE = 4


def _multiply(u: Sequence[Fraction], v: Sequence[Fraction], ambient: IntPoly) -> Vector:
    prod = [Fraction(0)] * (2 * DEGREE - 1)
    for i, x in enumerate(u):
        if x:
            for j, y in enumerate(v):
                prod[i + j] += x * y
    for k in reversed(range(DEGREE, 2 * DEGREE - 1)):
        c = prod[k]
        if c:
            prod[k] = Fraction(0)
            for m in range(DEGREE):
                prod[k - DEGREE + m] -= c * ambient.coeff(m)
    return tuple(prod[:DEGREE])


def _power(u: Vector, n: int, ambient: IntPoly) -> Vector:
    result: Vector = (Fraction(1),) + (Fraction(0),) * (DEGREE - 1)
    base = u
    while n:
        if n & 1:
            result = _multiply(result, base, ambient)
        base = _multiply(base, base, ambient)
        n >>= 1
    return result


def _combination(coeffs: Sequence[int], rows: Sequence[Vector], scale: Fraction = Fraction(1)) -> Vector:
    out = [Fraction(0)] * DEGREE
    for c, row in zip(coeffs, rows):
        if c:
            out = [o + c * w for o, w in zip(out, row)]
    return tuple(o * scale for o in out)


@dataclass(frozen=True)
class OrderBasis:
    """Z_(p)-order in K given by lower-triangular rows with diagonal 1/p^r_i."""

    p: int
    ambient: IntPoly
    rows: tuple[Vector, ...]

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(
            vp_int(row[i].denominator, self.p) - vp_int(row[i].numerator, self.p)
            for i, row in enumerate(self.rows)
        )

    @property
    def index_exponent(self) -> int:
        return sum(self.exponents)

    @property
    def denominators(self) -> tuple[int, ...]:
        return tuple(self.p**r for r in self.exponents)

    def scaled_rows(self) -> list[tuple[Vector, int]]:
        """(p^r_i * row_i, r_i): the numerator of each row over its p-power denominator."""
        return [
            (tuple(c * self.p**r for c in row), r) for row, r in zip(self.rows, self.exponents)
        ]

    def coordinates(self, vec: Sequence[Fraction]) -> Vector:
        return triangular_coordinates(self.rows, vec)

    def contains_vector(self, vec: Sequence[Fraction]) -> bool:
        return is_p_integral_vector(self.coordinates(vec), self.p)


def power_order(ambient: IntPoly, p: int) -> OrderBasis:
    rows = tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(DEGREE)) for i in range(DEGREE)
    )
    return OrderBasis(p=p, ambient=ambient, rows=rows)


def order_from_triangular(basis: TriangularPBasis) -> OrderBasis:
    """The Z_(p)-span of a triangular p-basis together with Z[alpha]."""
    generators = list(power_order(basis.ambient, basis.p).rows)
    generators += [w.coordinates() for w in basis.to_elements()]
    return OrderBasis(basis.p, basis.ambient, hermite_basis(generators, basis.p))


def _mod_p_coordinates(order: OrderBasis, vec: Sequence[Fraction]) -> list[int]:
    return [reduce_mod_p(c, order.p) for c in order.coordinates(vec)]


def radical(order: OrderBasis) -> tuple[Vector, ...]:
    """p-radical: pO plus the lifts of the kernel of x -> x^(p^k) on O/pO, p^k >= 4."""
    p = order.p
    q = p
    while q < DEGREE:
        q *= p
    images = [_mod_p_coordinates(order, _power(w, q, order.ambient)) for w in order.rows]
    kernel = left_kernel_mod_p(images, p)
    logger.debug("radical p=%s frobenius=%s kernel_dim=%s", p, q, len(kernel))
    generators = [tuple(p * c for c in w) for w in order.rows]
    generators += [_combination(c, order.rows) for c in kernel]
    return hermite_basis(generators, p, floor=1)


def multiplier_ring(order: OrderBasis, ideal: Sequence[Vector]) -> OrderBasis:
    """{x : x*I in I} = (1/p) {y in O : y*I in p*I}."""
    p = order.p
    matrix = []
    for w in order.rows:
        row: list[int] = []
        for g in ideal:
            coords = triangular_coordinates(ideal, _multiply(w, g, order.ambient))
            row.extend(reduce_mod_p(c, p) for c in coords)
        matrix.append(row)
    kernel = left_kernel_mod_p(matrix, p)
    generators = list(order.rows)
    generators += [_combination(c, order.rows, Fraction(1, p)) for c in kernel]
    return OrderBasis(p, order.ambient, hermite_basis(generators, p))


def p_maximalize(ambient: IntPoly, p: int, start: OrderBasis | None = None) -> OrderBasis:
    order = start if start is not None else power_order(ambient, p)
    if order.ambient != ambient or order.p != p:
        raise ValueError(f"start order belongs to {order.ambient} at p={order.p}")
    vp_disc = vp_int(discriminant(ambient), p)
    for iteration in range(vp_disc // 2 + 1):
        if vp_disc - 2 * order.index_exponent <= 1:
            break
        enlarged = multiplier_ring(order, radical(order))
        logger.info(
            "round iteration=%s p=%s index=%s -> %s",
            iteration,
            p,
            order.index_exponent,
            enlarged.index_exponent,
        )
        if enlarged.index_exponent == order.index_exponent:
            break
        order = enlarged
    return order


def p_maximal_order(ambient: IntPoly, p: int) -> tuple[OrderBasis, int]:
    order = p_maximalize(ambient, p)
    return order, order.index_exponent


def contains(order: OrderBasis, w: QuarticElement) -> bool:
    if w.ambient != order.ambient:
        raise ValueError(f"element of {w.ambient} tested against an order of {order.ambient}")
    return order.contains_vector(w.coordinates())


def is_closed_under_multiplication(order: OrderBasis) -> bool:
    one = (Fraction(1),) + (Fraction(0),) * (DEGREE - 1)
    if not order.contains_vector(one):
        return False
    return all(
        order.contains_vector(_multiply(u, v, order.ambient))
        for i, u in enumerate(order.rows)
        for v in order.rows[i:]
    )

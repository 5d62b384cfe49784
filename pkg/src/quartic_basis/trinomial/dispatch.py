"""Per-prime dispatch onto the table rows, normalization, and the all-primes driver."""
from __future__ import annotations

import logging
from typing import Iterable

from quartic_basis.config import get_settings
from quartic_basis.polyring import factor_integer, rescale_numerator, vp_int
from quartic_basis.trinomial.basis import TriangularPBasis, UnnormalizedInputError, certify
from quartic_basis.trinomial.field import TrinomialField
from quartic_basis.trinomial.table_a import table_a_row
from quartic_basis.trinomial.table_b import table_b_row
from quartic_basis.trinomial.table_c import table_c_row

logger = logging.getLogger(__name__)


class FactorizationIncompleteError(RuntimeError):
    """Raised when |disc| keeps an unfactored cofactor; carries what was computed."""

    def __init__(self, message: str, partial: dict[int, TriangularPBasis], cofactor: int):
        super().__init__(message)
        self.partial = partial
        self.cofactor = cofactor


def _reducible_by_scaling(a: int, b: int, p: int) -> bool:
    return vp_int(a, p) >= 3 and vp_int(b, p) >= 4


def normalize(a: int, b: int, p: int) -> tuple[int, int, int]:
    """Strip alpha = p*alpha' while v_p(a) >= 3 and v_p(b) >= 4."""
    k = 0
    while _reducible_by_scaling(a, b, p):
        a //= p**3
        b //= p**4
        k += 1
    return a, b, k


def p_basis(field: TrinomialField, p: int, *, max_shift_iterations: int | None = None) -> TriangularPBasis:
    """Table row for (a, b) at p, checked before it is returned."""
    a, b = field.a, field.b
    if _reducible_by_scaling(a, b, p):
        raise UnnormalizedInputError(f"a={a} b={b} is not normalized at p={p}")
    vp_disc = vp_int(field.discriminant, p)
    if p == 2:
        if max_shift_iterations is None:
            max_shift_iterations = get_settings().max_shift_iterations
        row = table_b_row(a, b, max_shift_iterations)
    elif p == 3:
        row = table_c_row(a, b, vp_disc)
    else:
        row = table_a_row(a, b, p, vp_disc)
    basis = TriangularPBasis(
        p=p,
        numerators=row.numerators,
        exponents=row.exponents,
        case=row.case,
        vp_disc=vp_disc,
        vp_dk=row.vp_dk,
        ambient=field.polynomial,
        shift=row.shift,
        shift_iterations=row.shift_iterations,
    )
    logger.info("p-basis a=%s b=%s p=%s case=%s vp_index=%s", a, b, p, basis.case, basis.vp_index)
    return certify(basis)


def local_basis(field: TrinomialField, p: int, *, max_shift_iterations: int | None = None) -> TriangularPBasis:
    """p_basis for any (a, b): normalize, compute, and rescale back to the original alpha."""
    a, b, k = normalize(field.a, field.b, p)
    if k == 0:
        return p_basis(field, p, max_shift_iterations=max_shift_iterations)
    reduced = p_basis(TrinomialField(a, b), p, max_shift_iterations=max_shift_iterations)
    scale = p**k
    logger.info("rescaling p-basis p=%s k=%s case=%s", p, k, reduced.case)
    rescaled = TriangularPBasis(
        p=p,
        numerators=tuple(rescale_numerator(num, scale) for num in reduced.numerators),  # type: ignore[arg-type]
        exponents=tuple(r + k * i for i, r in enumerate(reduced.exponents, start=1)),  # type: ignore[arg-type]
        case=reduced.case,
        vp_disc=reduced.vp_disc + 12 * k,
        vp_dk=reduced.vp_dk,
        ambient=field.polynomial,
        shift=None if reduced.shift is None else reduced.shift * scale,
        shift_iterations=reduced.shift_iterations,
        scale=k,
    )
    return certify(rescaled)


def p_basis_all(
    field: TrinomialField,
    *,
    max_trial_division: int | None = None,
    primes: Iterable[int] | None = None,
    max_shift_iterations: int | None = None,
) -> dict[int, TriangularPBasis]:
    """Local bases for every prime p with p^2 | disc, keyed in increasing prime order.

    primes overrides the factorization of the discriminant.
    """
    cofactor = 1
    if primes is None:
        limit = max_trial_division if max_trial_division is not None else get_settings().max_trial_division
        found, cofactor = factor_integer(field.discriminant, limit)
        candidates = [q for q, e in found.items() if e >= 2]
    else:
        candidates = sorted(q for q in set(primes) if vp_int(field.discriminant, q) >= 2)
    bases = {
        q: local_basis(field, q, max_shift_iterations=max_shift_iterations) for q in sorted(candidates)
    }
    if cofactor != 1:
        raise FactorizationIncompleteError(
            f"discriminant of a={field.a} b={field.b} has an unfactored cofactor {cofactor}",
            partial=bases,
            cofactor=cofactor,
        )
    return bases

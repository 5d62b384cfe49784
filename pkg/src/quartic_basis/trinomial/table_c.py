"""Rows C1-C19: the prime 3."""
from __future__ import annotations

import logging

from quartic_basis.polyring import IntPoly, taylor_shift, vp_int
from quartic_basis.trinomial.basis import POWER_NUMERATORS, TableRow, UnnormalizedInputError, X

logger = logging.getLogger(__name__)

_X2, _X3 = POWER_NUMERATORS[1], POWER_NUMERATORS[2]


def _cubic_row(case: str, a: int, vp_dk: int) -> TableRow:
    """(1, alpha, alpha^2, (alpha^3 - a*alpha^2 + alpha)/3)."""
    return TableRow(case, (X, _X2, IntPoly((0, 1, -a, 1))), (0, 0, 1), vp_dk)


def _shifted_row(a: int, b: int, vp_disc: int) -> TableRow:
    """theta = alpha - s with a*s = -4*b/3 mod 3^(v+1)."""
    modulus = 3 ** (vp_disc + 1)
    s = (-4 * (b // 3)) * pow(a, -1, modulus) % modulus
    m = (vp_disc - 2) // 2
    theta_middle = IntPoly((0, 4 * s, 1))
    theta_top = IntPoly((0, 6 * s * s, 4 * s, 1))
    logger.warning(
        "table C17 resolution: middle element (theta^2 + 4s*theta)/3, top exponent m=%s s=%s", m, s
    )
    return TableRow(
        "C17",
        (IntPoly((-s, 1)), taylor_shift(theta_middle, -s), taylor_shift(theta_top, -s)),
        (0, 1, m),
        vp_disc % 2,
        shift=s,
    )


def table_c_row(a: int, b: int, vp_disc: int) -> TableRow:
    u3, u4 = vp_int(a, 3), vp_int(b, 3)
    square = a * a % 9
    if u4 == 0:
        return TableRow.power("C19", 0)
    if u4 == 1:
        if u3 >= 1:
            return TableRow.power("C13", 3)
        if b % 9 == 6:
            return _cubic_row("C15", a, 1) if square == 4 else TableRow.power("C14", 3)
        if square != 7:
            return TableRow.power("C16", 4)
        if vp_int(a**4 - a**2 + b, 3) == 2:
            return _cubic_row("C18", a, 3)
        return _shifted_row(a, b, vp_disc)
    if u4 == 2:
        if u3 >= 2:
            return TableRow("C9", POWER_NUMERATORS, (0, 1, 1), 2)
        if u3 == 1:
            return TableRow("C10", POWER_NUMERATORS, (0, 0, 1), 4)
        return _cubic_row("C11", a, 1) if square == 1 else TableRow.power("C12", 3)
    if u4 == 3:
        if u3 >= 2:
            return TableRow("C5", POWER_NUMERATORS, (0, 1, 2), 3)
        if u3 == 1:
            return TableRow("C6", POWER_NUMERATORS, (0, 0, 1), 5)
        return _cubic_row("C7", a, 1) if square == 1 else TableRow.power("C8", 3)
    if u3 == 2:
        return TableRow("C1", POWER_NUMERATORS, (0, 1, 2), 5)
    if u3 == 1:
        return TableRow("C2", POWER_NUMERATORS, (0, 0, 1), 5)
    if u3 == 0:
        return _cubic_row("C4", a, 1) if square == 1 else TableRow.power("C3", 3)
    raise UnnormalizedInputError(f"v_3(a)={u3} and v_3(b)={u4}: normalize first")

"""Rows B1-B21 and the shifted B* rows: the prime 2."""
from __future__ import annotations

import logging

from quartic_basis.polyring import INFINITY, IntPoly, taylor_shift, vp_int
from quartic_basis.trinomial.basis import (
    POWER_NUMERATORS,
    TableMismatchError,
    TableRow,
    UnnormalizedInputError,
    X,
)

logger = logging.getLogger(__name__)

_X2, _X3 = POWER_NUMERATORS[1], POWER_NUMERATORS[2]
_HALF_SQUARE = IntPoly((1, 0, 1))  # alpha^2 + 1
_ALT_CUBIC = IntPoly((-1, 1, -1, 1))  # alpha^3 - alpha^2 + alpha - 1


def _regularizing_shift(a: int, b: int, max_iterations: int) -> TableRow:
    """Search s with P(X + s) 2-regular, starting at s = 1 and stepping by 2^k."""
    s = 1
    for iteration in range(max_iterations + 1):
        u3 = vp_int(4 * s**3 + a, 2)
        u4 = vp_int(s**4 + a * s + b, 2)
        if u4 is INFINITY:
            raise TableMismatchError(f"P({s}) = 0 for a={a} b={b}")
        if u3 is not INFINITY and u4 >= 2 * u3 - 1:
            r, case, vp_dk = u3, "B*1", 3
        elif u4 % 2 == 0:
            r = u4 // 2
            case, vp_dk = ("B*2", 5) if u3 == r + 1 else ("B*3", 6)
        else:
            k = (u4 - 1) // 2
            logger.info("shift search a=%s b=%s s=%s v(A)=%s v(B)=%s step=2^%s", a, b, s, u3, u4, k)
            s += 2**k
            continue
        theta_top = IntPoly((0, 6 * s * s, 4 * s, 1))
        return TableRow(
            case,
            (IntPoly((-s, 1)), taylor_shift(_X2, -s), taylor_shift(theta_top, -s)),
            (0, 1, r),
            vp_dk,
            shift=s,
            shift_iterations=iteration,
        )
    raise TableMismatchError(f"no 2-regularizing shift for a={a} b={b} within {max_iterations} steps")


def table_b_row(a: int, b: int, max_shift_iterations: int = 64) -> TableRow:
    u3, u4 = vp_int(a, 2), vp_int(b, 2)
    if u3 == 0:
        return TableRow.power("B14", 0)
    if u4 == 0:
        if u3 == 1:
            if b % 4 == 3:
                return TableRow.power("B20", 4)
            return TableRow("B21", (X, _X2, _ALT_CUBIC), (0, 0, 1), 2)
        if u3 == 2:
            if b % 4 == 1:
                return TableRow.power("B18", 9)
            if b % 8 == 7:
                return TableRow("B19", (X, _HALF_SQUARE, IntPoly((0, 1, 0, 1))), (0, 1, 1), 6)
            return _regularizing_shift(a, b, max_shift_iterations)
        if b % 4 == 1:
            return TableRow.power("B15", 8)
        if b % 8 == 3:
            return TableRow("B16", (X, _HALF_SQUARE, _ALT_CUBIC), (0, 1, 1), 4)
        logger.warning("table B17 resolution: top numerator theta^3 + 4theta^2 + 6theta with theta = alpha - 1")
        return TableRow("B17", (X, _HALF_SQUARE, IntPoly((-3, 1, 1, 1))), (0, 1, 2), 2)
    if u4 == 1:
        if u3 == 1:
            return TableRow.power("B13", 4)
        if u3 == 2:
            return TableRow.power("B12", 8)
        return TableRow.power("B11", 11)
    if u3 == 1:
        return TableRow("B10", POWER_NUMERATORS, (0, 0, 1), 2)
    if u4 == 2:
        if u3 == 2:
            return TableRow("B9", POWER_NUMERATORS, (0, 1, 1), 4)
        if u3 == 3:
            return TableRow("B8", (X, _X2, IntPoly((0, 2, 0, 1))), (0, 1, 2), 6)
        if b % 16 == 12:
            return TableRow("B7", (X, IntPoly((2, 0, 1)), IntPoly((0, 2, 0, 1))), (0, 2, 2), 6)
        big_a, big_b = a // 16, (b - 4) // 16
        if (big_a - big_b) % 2 == 0:
            top = IntPoly((0, 2 + 4 * big_b, 2, 1))
            return TableRow("B5", (X, IntPoly((2, 2, 1)), top), (0, 2, 3), 4)
        return TableRow("B6", (X, IntPoly((2, 2, 1)), IntPoly((0, 2, 2, 1))), (0, 2, 2), 6)
    if u3 == 2:
        return TableRow("B1", POWER_NUMERATORS, (0, 1, 2), 2)
    if u4 == 3:
        if u3 == 3:
            return TableRow("B4", POWER_NUMERATORS, (0, 1, 2), 6)
        if u3 == 4:
            return TableRow("B3", POWER_NUMERATORS, (0, 1, 2), 10)
        return TableRow("B2", POWER_NUMERATORS, (0, 1, 2), 11)
    raise UnnormalizedInputError(f"v_2(a)={u3} and v_2(b)={u4}: normalize first")

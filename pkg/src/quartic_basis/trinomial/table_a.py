"""Rows A1-A8: primes p >= 5."""
from __future__ import annotations

import logging

from quartic_basis.polyring import IntPoly, vp_int
from quartic_basis.trinomial.basis import POWER_NUMERATORS, TableRow, UnnormalizedInputError, X

logger = logging.getLogger(__name__)

_X2, _X3 = POWER_NUMERATORS[1], POWER_NUMERATORS[2]


def _unramified_row(a: int, b: int, p: int, vp_disc: int) -> TableRow:
    m = vp_disc // 2
    if m == 0:
        return TableRow.power("A8", vp_disc % 2)
    modulus = p ** (m + 1)
    # 3at + 4b = 0 mod p^(m+1)
    t = (-4 * b) * pow(3 * a, -1, modulus) % modulus
    numerator = IntPoly((-3 * t**3, t**2, t, 1))
    logger.info("table A8 p=%s m=%s t=%s", p, m, t)
    return TableRow("A8", (X, _X2, numerator), (0, 0, m), vp_disc % 2)


def table_a_row(a: int, b: int, p: int, vp_disc: int) -> TableRow:
    u3, u4 = vp_int(a, p), vp_int(b, p)
    if u4 == 0:
        if u3 == 0:
            return _unramified_row(a, b, p, vp_disc)
        return TableRow.power("A7", 0)
    if u3 == 0:
        return TableRow.power("A3", 0)
    if u4 == 1:
        return TableRow.power("A5", 3)
    if u3 == 1:
        return TableRow("A6", POWER_NUMERATORS, (0, 0, 1), 2)
    if u4 == 2:
        return TableRow("A4", POWER_NUMERATORS, (0, 1, 1), 2)
    if u3 == 2:
        return TableRow("A2", POWER_NUMERATORS, (0, 1, 2), 2)
    if u4 == 3:
        return TableRow("A1", POWER_NUMERATORS, (0, 1, 2), 3)
    raise UnnormalizedInputError(f"v_{p}(a)={u3} and v_{p}(b)={u4}: normalize first")

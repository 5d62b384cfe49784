"""p-adic valuations of integers and integer polynomials."""
from __future__ import annotations

from typing import TYPE_CHECKING, Union

if TYPE_CHECKING:
    from quartic_basis.polyring.intpoly import IntPoly


class _Infinity:
    """Valuation of zero. Compares above every integer."""

    _instance: "_Infinity | None" = None

    def __new__(cls) -> "_Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __str__(self) -> str:
        return "inf"

    def __hash__(self) -> int:
        return hash("quartic_basis.INFINITY")

    def __eq__(self, other: object) -> bool:
        return other is self

    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return other is self

    def __gt__(self, other: object) -> bool:
        return other is not self

    def __ge__(self, other: object) -> bool:
        return True

    def __add__(self, other: object) -> "_Infinity":
        return self

    __radd__ = __add__


INFINITY = _Infinity()

Valuation = Union[int, _Infinity]


def is_finite(v: Valuation) -> bool:
    return v is not INFINITY


def vp_int(x: int, p: int) -> Valuation:
    """Return v_p(x); v_p(0) is INFINITY."""
    if x == 0:
        return INFINITY
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def unit_part(x: int, p: int) -> int:
    """Return x / p^{v_p(x)}, keeping the sign of x."""
    if x == 0:
        raise ValueError("zero has no unit part")
    while x % p == 0:
        x //= p
    return x


def vp_poly(poly: "IntPoly", p: int) -> Valuation:
    """Minimum valuation over the coefficients; INFINITY for the zero polynomial."""
    return min((vp_int(c, p) for c in poly.coeffs if c), default=INFINITY)

"""Dense univariate polynomials with integer coefficients.

Coefficients are stored in ascending degree order and every operation is
exact; there is no floating point anywhere in the package.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Iterable, Sequence

from sympy import Matrix, Poly, Symbol
from sympy.polys.domains import ZZ

if TYPE_CHECKING:
    from quartic_basis.polyring.modpoly import ModPoly

_SYMBOL = Symbol("X")


class NotMonicError(ValueError):
    pass


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPoly:
    """Polynomial c_0 + c_1 X + ... + c_n X^n over the integers."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip(int(c) for c in self.coeffs))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls((0,) * k + (c,))

    @classmethod
    def trinomial(cls, a: int, b: int) -> "IntPoly":
        """X^4 + aX + b."""
        return cls((b, a, 0, 0, 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        return self.coeffs + (0,) * (length - len(self.coeffs))

    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(x + y for x, y in zip(self.padded(n), other.padded(n))))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "IntPoly":
        return _coerce(other) - self

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        result = IntPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: Any) -> Any:
        return self.evaluate(x)

    def evaluate(self, x: Any) -> Any:
        """Horner evaluation; works for ints, Fractions and anything with + and *."""
        acc: Any = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def exact_div(self, d: int) -> "IntPoly":
        """Divide every coefficient by d, which must divide all of them."""
        if any(c % d for c in self.coeffs):
            raise ValueError(f"{d} does not divide {self.format()}")
        return IntPoly(tuple(c // d for c in self.coeffs))

    def divmod_monic(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Euclidean division by a monic divisor; exact over the integers."""
        if not divisor.is_monic():
            raise NotMonicError(f"divisor {divisor.format()} is not monic")
        rem = list(self.coeffs)
        n = divisor.degree
        if len(rem) - 1 < n:
            return IntPoly(), self
        quot = [0] * (len(rem) - n)
        for k in range(len(rem) - 1, n - 1, -1):
            c = rem[k]
            if c:
                quot[k - n] = c
                for j, d in enumerate(divisor.coeffs):
                    rem[k - n + j] -= c * d
        return IntPoly(tuple(quot)), IntPoly(tuple(rem[:n]))

    def to_mod(self, p: int) -> "ModPoly":
        from quartic_basis.polyring.modpoly import ModPoly

        return ModPoly.from_ints(self.coeffs, p)

    def format(self, var: str = "X") -> str:
        """Human readable form, highest degree first."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __str__(self) -> str:
        return self.format()


def _coerce(value: "IntPoly | int") -> IntPoly:
    return value if isinstance(value, IntPoly) else IntPoly.constant(value)


def taylor_shift(poly: IntPoly, t: int) -> IntPoly:
    """Return Q with Q(X) = P(X + t)."""
    shifted = IntPoly()
    step = IntPoly((t, 1))
    for c in reversed(poly.coeffs):
        shifted = shifted * step + c
    return shifted


def rescale_numerator(poly: IntPoly, scale: int) -> IntPoly:
    """Return scale^n * P(X / scale) for P of degree n."""
    n = poly.degree
    return IntPoly(tuple(c * scale ** (n - k) for k, c in enumerate(poly.coeffs)))


@dataclass(frozen=True)
class PhiExpansion:
    """phi-adic development P = sum_{i=0..t} terms[i] * phi^(t-i).

    terms[0] multiplies the highest power of phi. Use digit(i) for the
    coefficient of phi^i.
    """

    phi: IntPoly
    terms: tuple[IntPoly, ...]

    @property
    def length(self) -> int:
        """t, the highest power of phi present."""
        return len(self.terms) - 1

    def digit(self, i: int) -> IntPoly:
        t = self.length
        if 0 <= i <= t:
            return self.terms[t - i]
        return IntPoly()

    def reconstruct(self) -> IntPoly:
        acc = IntPoly()
        for term in self.terms:
            acc = acc * self.phi + term
        return acc


def phi_expand(poly: IntPoly, phi: IntPoly) -> PhiExpansion:
    if phi.degree < 1:
        raise ValueError("phi must have degree at least 1")
    if not phi.is_monic():
        raise NotMonicError(f"phi {phi.format()} is not monic")
    digits: list[IntPoly] = []
    rest = poly
    while not rest.is_zero():
        rest, r = rest.divmod_monic(phi)
        digits.append(r)
    if not digits:
        digits.append(IntPoly())
    return PhiExpansion(phi=phi, terms=tuple(reversed(digits)))


def to_sympy(poly: IntPoly) -> Poly:
    return Poly(list(reversed(poly.coeffs)) or [0], _SYMBOL, domain=ZZ)


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    if not matrix:
        return 1
    return int(Matrix(matrix).det(method="bareiss"))


def resultant(f: IntPoly, g: IntPoly) -> int:
    if f.is_zero() or g.is_zero():
        return 0
    if f.degree == 0 and g.degree == 0:
        return 1
    return int(to_sympy(f).resultant(to_sympy(g)))


def discriminant(poly: IntPoly) -> int:
    """(-1)^{n(n-1)/2} Res(P, P') / lc(P); for X^4+aX+b this is 256b^3 - 27a^4."""
    n = poly.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    return int(to_sympy(poly).discriminant())

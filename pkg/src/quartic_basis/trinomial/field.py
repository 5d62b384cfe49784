from __future__ import annotations

from dataclasses import dataclass, field

from quartic_basis.polyring import IntPoly, is_irreducible_quartic


class ReducibleError(ValueError):
    pass


def trinomial_discriminant(a: int, b: int) -> int:
    return 256 * b**3 - 27 * a**4


@dataclass(frozen=True)
class TrinomialField:
    """Q(alpha) with alpha a root of the irreducible trinomial X^4 + aX + b."""

    a: int
    b: int
    discriminant: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        disc = trinomial_discriminant(self.a, self.b)
        if disc == 0:
            raise ReducibleError(f"X^4 + {self.a}X + {self.b} has zero discriminant")
        if not is_irreducible_quartic(self.polynomial):
            raise ReducibleError(f"X^4 + {self.a}X + {self.b} is reducible over Q")
        object.__setattr__(self, "discriminant", disc)

    @property
    def polynomial(self) -> IntPoly:
        return IntPoly.trinomial(self.a, self.b)

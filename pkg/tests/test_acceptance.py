"""Randomized agreement between the closed-form tables and the p-maximal order."""
from __future__ import annotations

import pytest

from quartic_basis.cli import check_instance
from quartic_basis.trinomial import ReducibleError, TrinomialField

PRIMES = (2, 3, 5, 7, 11, 13)


class TestRandomTrinomials:
    """Tables against the oracle on seeded random coefficients."""

    @pytest.mark.parametrize("bound, count", [(30, 150), (500, 500)])
    def test_no_mismatches(self, rng, bound, count):
        checked = 0
        while checked < count:
            a, b = rng.randint(-bound, bound), rng.randint(-bound, bound)
            try:
                TrinomialField(a, b)
            except ReducibleError:
                continue
            assert check_instance(a, b, PRIMES, 64) == []
            checked += 1

    def test_high_valuations(self, rng):
        for _ in range(100):
            p = rng.choice((2, 3, 5))
            a = p ** rng.randint(0, 6) * rng.choice((1, -1, 7, -7, 11))
            b = p ** rng.randint(0, 7) * rng.choice((1, -1, 13, -13, 17))
            try:
                TrinomialField(a, b)
            except ReducibleError:
                continue
            assert check_instance(a, b, (p,), 64) == []

"""Pytest configuration and shared fixtures."""
from __future__ import annotations

import random
from typing import Callable

import pytest

from quartic_basis.trinomial import ReducibleError, TriangularPBasis, TrinomialField, p_basis

# small units tried as cofactors when building table instances
UNITS = (1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6, 7, -7, 8, -8, 9, -9, 10, -10, 11, -11, 13, -13)

RowFinder = Callable[[str, int, int, int], tuple[TrinomialField, TriangularPBasis]]


@pytest.fixture
def rng() -> random.Random:
    """Seeded generator so fuzz runs are reproducible."""
    return random.Random(20240607)


@pytest.fixture
def find_row() -> RowFinder:
    """Return a search for an irreducible (a, b) = (p^va * u, p^vb * w) landing on a row label."""

    def _find(label: str, p: int, va: int, vb: int) -> tuple[TrinomialField, TriangularPBasis]:
        units = [u for u in UNITS if u % p]
        for u in units:
            for w in units:
                try:
                    field = TrinomialField(p**va * u, p**vb * w)
                except ReducibleError:
                    continue
                basis = p_basis(field, p)
                if basis.case == label:
                    return field, basis
        pytest.fail(f"no instance of {label} with v_{p}(a)={va}, v_{p}(b)={vb}")

    return _find

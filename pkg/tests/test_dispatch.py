"""Tests for quartic_basis.trinomial.dispatch and field modules."""
from __future__ import annotations

from unittest import mock

import pytest

from quartic_basis.trinomial import (
    FactorizationIncompleteError,
    ReducibleError,
    TrinomialField,
    UnnormalizedInputError,
    local_basis,
    normalize,
    p_basis,
    p_basis_all,
)


class TestTrinomialField:
    """Tests for TrinomialField construction."""

    def test_discriminant(self):
        assert TrinomialField(1, 1).discriminant == 229

    @pytest.mark.parametrize("a, b", [(0, 0), (0, -1), (0, 4), (3, 0), (2, 1)])
    def test_reducible_raises(self, a, b):
        with pytest.raises(ReducibleError):
            TrinomialField(a, b)

    def test_irreducible_without_linear_term(self):
        assert TrinomialField(0, 1).polynomial.format() == "X^4 + 1"


class TestNormalize:
    """Tests for normalize and local_basis."""

    @pytest.mark.parametrize(
        "a, b, p, expected",
        [
            (8, 16, 2, (1, 1, 1)),
            (54, 81, 3, (2, 1, 1)),
            (8 * 8, 16 * 16, 2, (1, 1, 2)),
            (125, 125, 5, (125, 125, 0)),
        ],
    )
    def test_normalize(self, a, b, p, expected):
        assert normalize(a, b, p) == expected

    def test_p_basis_rejects_unnormalized(self):
        with pytest.raises(UnnormalizedInputError, match="not normalized"):
            p_basis(TrinomialField(8, 16), 2)

    def test_local_basis_rescales(self):
        basis = local_basis(TrinomialField(8, 16), 2)
        assert basis.case == "B14"
        assert basis.exponents == (1, 2, 3)
        assert basis.vp_disc == 12
        assert basis.vp_dk == 0
        assert basis.scale == 1

    def test_local_basis_without_scaling(self):
        basis = local_basis(TrinomialField(125, 125), 5)
        assert basis.case == "A1"
        assert basis.scale == 0


class TestPBasisAll:
    """Tests for p_basis_all."""

    def test_only_square_divisors(self):
        bases = p_basis_all(TrinomialField(125, 125))
        assert list(bases) == [5]
        assert bases[5].vp_index == 3

    def test_squarefree_discriminant(self):
        assert p_basis_all(TrinomialField(1, 1)) == {}

    def test_explicit_primes(self):
        bases = p_basis_all(TrinomialField(125, 125), primes=[2, 3, 5])
        assert list(bases) == [5]

    def test_incomplete_factorization(self):
        with mock.patch(
            "quartic_basis.trinomial.dispatch.factor_integer", return_value=({5: 9}, 3119)
        ):
            with pytest.raises(FactorizationIncompleteError) as excinfo:
                p_basis_all(TrinomialField(125, 125))
        assert excinfo.value.cofactor == 3119
        assert list(excinfo.value.partial) == [5]

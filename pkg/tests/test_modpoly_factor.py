"""Tests for quartic_basis.polyring.modpoly and factor modules."""
from __future__ import annotations

import pytest

from quartic_basis.polyring import (
    IntPoly,
    ModPoly,
    dedekind_test,
    factor_integer,
    factor_mod_p,
    factor_shape_mod_p,
    gcd,
    is_irreducible_quartic,
)


def _product(factors, p):
    acc = ModPoly.one(p)
    for g, e in factors:
        for _ in range(e):
            acc = acc * g
    return acc


class TestModPoly:
    """Tests for ModPoly arithmetic."""

    def test_reduces_coefficients(self):
        assert ModPoly((5, 7), 3).coeffs == (2, 1)

    def test_divmod(self):
        f = ModPoly((1, 0, 1), 5)
        q, r = divmod(f, ModPoly((3, 1), 5))
        assert q * ModPoly((3, 1), 5) + r == f
        assert r.is_zero()

    def test_gcd_is_monic(self):
        f = ModPoly((1, 0, 1), 5)
        g = ModPoly((-4, 2), 5)
        assert gcd(f, g) == ModPoly((3, 1), 5)

    def test_mixed_moduli_raise(self):
        with pytest.raises(ValueError, match="mixed moduli"):
            ModPoly((1, 1), 3) + ModPoly((1, 1), 5)

    def test_lift_is_canonical(self):
        assert ModPoly((-1, 1), 2).lift() == IntPoly((1, 1))


class TestFactorModP:
    """Tests for factor_mod_p and factor_shape_mod_p."""

    def test_irreducible(self):
        assert factor_shape_mod_p(IntPoly.trinomial(1, 1), 2) == [(ModPoly((1, 1, 0, 0, 1), 2), 1)]

    def test_fourth_power(self):
        assert factor_shape_mod_p(IntPoly.trinomial(125, 125), 5) == [(ModPoly((0, 1), 5), 4)]

    def test_square_of_quadratic(self):
        assert factor_shape_mod_p(IntPoly((10, 9, 2, 0, 1)), 3) == [(ModPoly((1, 0, 1), 3), 2)]

    def test_square_of_quadratic_characteristic_two(self):
        assert factor_shape_mod_p(IntPoly((1, 0, 1, 0, 1)), 2) == [(ModPoly((1, 1, 1), 2), 2)]

    def test_two_quadratics(self):
        factors = factor_shape_mod_p(IntPoly((1, 0, 0, 0, 1)), 3)
        assert factors == [(ModPoly((2, 1, 1), 3), 1), (ModPoly((2, 2, 1), 3), 1)]

    def test_split_into_linears(self):
        factors = factor_shape_mod_p(IntPoly((-1, 0, 0, 0, 1)), 5)
        assert sorted((-g.coeffs[0]) % 5 for g, _ in factors) == [1, 2, 3, 4]
        assert all(e == 1 and g.degree == 1 for g, e in factors)

    def test_large_prime(self):
        p = 1009
        factors = factor_shape_mod_p(IntPoly((-1, 0, 0, 0, 1)), p)
        assert len(factors) == 4
        assert _product(factors, p) == ModPoly((-1, 0, 0, 0, 1), p)

    def test_large_prime_two_quadratics(self):
        # -1 and -9 are non-residues since p = 3 mod 4
        p = 10007
        poly = IntPoly((1, 0, 1)) * IntPoly((9, 0, 1))
        factors = factor_shape_mod_p(poly, p)
        assert factors == [(ModPoly((1, 0, 1), p), 1), (ModPoly((9, 0, 1), p), 1)]
        assert not dedekind_test(poly, p)

    def test_squarefree_flag(self):
        assert ModPoly((1, 0, 1), 3).is_squarefree()
        assert not ModPoly((1, 0, 2, 0, 1), 3).is_squarefree()
        assert not ModPoly((1, 0, 1), 2).is_squarefree()

    def test_random_quartics_reconstruct(self, rng):
        for _ in range(200):
            p = rng.choice((2, 3, 5, 7, 11, 13))
            coeffs = [rng.randrange(p) for _ in range(4)] + [1]
            f = ModPoly(tuple(coeffs), p)
            factors = factor_mod_p(f)
            assert _product(factors, p) == f
            for g, _ in factors:
                assert g.leading == 1
                if g.degree in (2, 3):
                    assert all(g.evaluate(r) for r in range(p))


class TestDedekind:
    """Tests for dedekind_test."""

    def test_index_divisible(self):
        assert dedekind_test(IntPoly.trinomial(125, 125), 5)

    def test_unramified(self):
        assert not dedekind_test(IntPoly.trinomial(1, 1), 2)

    def test_ramified_but_monogenic(self):
        assert not dedekind_test(IntPoly.trinomial(2, 2), 2)


class TestIrreducibility:
    """Tests for is_irreducible_quartic."""

    @pytest.mark.parametrize(
        "poly, expected",
        [
            (IntPoly.trinomial(1, 1), True),
            (IntPoly((2, 0, 3, 0, 1)), False),
            (IntPoly((-4, 0, 0, 0, 1)), False),
            (IntPoly((4, 0, 0, 0, 1)), False),
            (IntPoly.trinomial(3, 0), False),
            (IntPoly.trinomial(4, 11), True),
            (IntPoly((16, 8, 4, 2, 1)), True),
            (IntPoly((-1, 0, 0, 0, 1)), False),
        ],
    )
    def test_cases(self, poly, expected):
        assert is_irreducible_quartic(poly) is expected

    def test_rejects_non_quartic(self):
        with pytest.raises(ValueError, match="monic quartic"):
            is_irreducible_quartic(IntPoly((1, 1, 1)))


class TestFactorInteger:
    """Tests for factor_integer."""

    def test_complete(self):
        assert factor_integer(-(2**4) * 101, 1000) == ({2: 4, 101: 1}, 1)

    def test_zero_raises(self):
        with pytest.raises(ValueError, match="zero"):
            factor_integer(0, 1000)

    def test_incomplete_cofactor(self):
        big = (2**61 - 1) * (2**89 - 1)
        primes, cofactor = factor_integer(12 * big, 1000)
        assert primes == {2: 2, 3: 1}
        assert cofactor == big

"""Tests for quartic_basis.polyring.intpoly module."""
from __future__ import annotations

from fractions import Fraction

import pytest

from quartic_basis.polyring import (
    IntPoly,
    NotMonicError,
    bareiss_determinant,
    discriminant,
    phi_expand,
    rescale_numerator,
    resultant,
    taylor_shift,
)
from quartic_basis.trinomial import trinomial_discriminant

X = IntPoly.x()


class TestIntPoly:
    """Tests for IntPoly arithmetic and formatting."""

    def test_trailing_zeros_stripped(self):
        poly = IntPoly((1, 2, 0, 0))
        assert poly.coeffs == (1, 2)
        assert poly.degree == 1

    def test_zero_polynomial(self):
        assert IntPoly().degree == -1
        assert IntPoly().is_zero()
        assert IntPoly().format() == "0"

    def test_product(self):
        assert (X + 1) * (X - 1) == IntPoly((-1, 0, 1))

    def test_power(self):
        assert (X + 1) ** 3 == IntPoly((1, 3, 3, 1))

    @pytest.mark.parametrize(
        "poly, text",
        [
            (IntPoly.trinomial(1, 1), "X^4 + X + 1"),
            (IntPoly((0, 0, 0, 2)), "2*X^3"),
            (IntPoly((-3, 0, -1)), "-X^2 - 3"),
            (IntPoly((125, 125, 0, 0, 1)), "X^4 + 125*X + 125"),
        ],
    )
    def test_format(self, poly, text):
        assert poly.format() == text

    def test_format_variable(self):
        assert IntPoly((0, 2, 1)).format("a") == "a^2 + 2*a"

    def test_evaluate_fraction(self):
        assert IntPoly((1, 0, 1)).evaluate(Fraction(1, 2)) == Fraction(5, 4)

    def test_divmod_monic(self):
        quot, rem = IntPoly.trinomial(1, 1).divmod_monic(IntPoly((1, 0, 1)))
        assert quot == IntPoly((-1, 0, 1))
        assert rem == IntPoly((2, 1))

    def test_divmod_by_non_monic_raises(self):
        with pytest.raises(NotMonicError):
            IntPoly.trinomial(1, 1).divmod_monic(IntPoly((1, 2)))

    def test_exact_div(self):
        assert IntPoly((4, 8, 12)).exact_div(4) == IntPoly((1, 2, 3))

    def test_exact_div_raises(self):
        with pytest.raises(ValueError, match="does not divide"):
            IntPoly((4, 6)).exact_div(4)


class TestTaylorShift:
    """Tests for taylor_shift and rescale_numerator."""

    def test_square(self):
        assert taylor_shift(X * X, 1) == IntPoly((1, 2, 1))

    def test_inverse_shift(self):
        poly = IntPoly.trinomial(7, -3)
        assert taylor_shift(taylor_shift(poly, 3), -3) == poly

    def test_rescale(self):
        assert rescale_numerator(IntPoly((0, 1, 0, 1)), 2) == IntPoly((0, 4, 0, 1))


class TestPhiExpand:
    """Tests for phi-adic developments."""

    def test_linear_phi(self):
        poly = IntPoly.trinomial(125, 125)
        expansion = phi_expand(poly, X)
        assert expansion.length == 4
        assert expansion.digit(0) == IntPoly((125,))
        assert expansion.digit(1) == IntPoly((125,))
        assert expansion.digit(2).is_zero()
        assert expansion.digit(4) == IntPoly((1,))
        assert expansion.reconstruct() == poly

    def test_quadratic_phi(self):
        poly = IntPoly((10, 9, 2, 0, 1))
        phi = IntPoly((1, 0, 1))
        expansion = phi_expand(poly, phi)
        assert expansion.length == 2
        assert expansion.digit(2) == IntPoly((1,))
        assert expansion.digit(1).is_zero()
        assert expansion.digit(0) == IntPoly((9, 9))
        assert expansion.reconstruct() == poly

    def test_random_round_trip(self, rng):
        for _ in range(200):
            poly = IntPoly(tuple(rng.randint(-50, 50) for _ in range(rng.randint(1, 9))))
            k = rng.randint(1, 3)
            phi = IntPoly(tuple(rng.randint(-9, 9) for _ in range(k)) + (1,))
            expansion = phi_expand(poly, phi)
            assert expansion.reconstruct() == poly
            assert all(term.degree < k for term in expansion.terms)

    def test_constant_phi_raises(self):
        with pytest.raises(ValueError, match="degree"):
            phi_expand(X, IntPoly((3,)))

    def test_non_monic_phi_raises(self):
        with pytest.raises(NotMonicError):
            phi_expand(X, IntPoly((1, 2)))


class TestDeterminants:
    """Tests for bareiss_determinant, resultant and discriminant."""

    def test_diagonal(self):
        assert bareiss_determinant([[2, 0, 0], [0, 3, 0], [0, 0, 4]]) == 24

    def test_row_swap(self):
        assert bareiss_determinant([[0, 1], [1, 0]]) == -1

    def test_singular(self):
        assert bareiss_determinant([[1, 2], [2, 4]]) == 0

    def test_resultant_linear(self):
        assert resultant(IntPoly((-2, 1)), IntPoly((-5, 1))) == -3

    def test_resultant_common_root(self):
        assert resultant(IntPoly((-1, 0, 1)), IntPoly((-1, 1))) == 0

    @pytest.mark.parametrize(
        "poly, expected",
        [
            (IntPoly.trinomial(1, 1), 229),
            (IntPoly.trinomial(2, 2), 1616),
            ((X - 1) * (X - 2) * (X - 3) * (X - 4), 144),
            (IntPoly((-2, 1)), 1),
        ],
    )
    def test_discriminant(self, poly, expected):
        assert discriminant(poly) == expected

    def test_shift_invariance(self, rng):
        for _ in range(100):
            poly = IntPoly(tuple(rng.randint(-1000, 1000) for _ in range(4)) + (1,))
            t = rng.randint(-20, 20)
            assert discriminant(taylor_shift(poly, t)) == discriminant(poly)

    def test_trinomial_closed_form(self, rng):
        for _ in range(1000):
            a, b = rng.randint(-(10**6), 10**6), rng.randint(-(10**6), 10**6)
            assert discriminant(IntPoly.trinomial(a, b)) == trinomial_discriminant(a, b)

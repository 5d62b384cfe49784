"""Tests for the closed-form table rows in quartic_basis.trinomial."""
from __future__ import annotations

import pytest

from quartic_basis.oracle import contains, p_maximal_order
from quartic_basis.polyring import IntPoly, vp_int
from quartic_basis.trinomial import (
    TableMismatchError,
    TrinomialField,
    p_basis,
)
from quartic_basis.trinomial.table_b import table_b_row

POWER = (0, 0, 0)

ROWS = [
    # label, p, v_p(a), v_p(b), exponents, v_p(d_K), v_p(disc)
    ("A1", 5, 3, 3, (0, 1, 2), 3, 9),
    ("A2", 5, 2, 4, (0, 1, 2), 2, 8),
    ("A3", 5, 0, 1, POWER, 0, 0),
    ("A4", 5, 2, 2, (0, 1, 1), 2, 6),
    ("A5", 5, 1, 1, POWER, 3, 3),
    ("A5", 7, 1, 1, POWER, 3, 3),
    ("A6", 5, 1, 2, (0, 0, 1), 2, 4),
    ("A6", 7, 1, 2, (0, 0, 1), 2, 4),
    ("A7", 5, 1, 0, POWER, 0, 0),
    ("B1", 2, 2, 3, (0, 1, 2), 2, 8),
    ("B2", 2, 5, 3, (0, 1, 2), 11, 17),
    ("B3", 2, 4, 3, (0, 1, 2), 10, 16),
    ("B4", 2, 3, 3, (0, 1, 2), 6, 12),
    ("B5", 2, 4, 2, (0, 2, 3), 4, 14),
    ("B6", 2, 4, 2, (0, 2, 2), 6, 14),
    ("B7", 2, 4, 2, (0, 2, 2), 6, 14),
    ("B8", 2, 3, 2, (0, 1, 2), 6, 12),
    ("B9", 2, 2, 2, (0, 1, 1), 4, 8),
    ("B10", 2, 1, 2, (0, 0, 1), 2, 4),
    ("B11", 2, 3, 1, POWER, 11, 11),
    ("B12", 2, 2, 1, POWER, 8, 8),
    ("B13", 2, 1, 1, POWER, 4, 4),
    ("B14", 2, 0, 0, POWER, 0, 0),
    ("B15", 2, 3, 0, POWER, 8, 8),
    ("B16", 2, 3, 0, (0, 1, 1), 4, 8),
    ("B17", 2, 3, 0, (0, 1, 2), 2, 8),
    ("B18", 2, 2, 0, POWER, 9, 9),
    ("B19", 2, 2, 0, (0, 1, 1), 6, 10),
    ("B20", 2, 1, 0, POWER, 4, 4),
    ("B21", 2, 1, 0, (0, 0, 1), 2, 4),
    ("C1", 3, 2, 4, (0, 1, 2), 5, 11),
    ("C2", 3, 1, 4, (0, 0, 1), 5, 7),
    ("C3", 3, 0, 4, POWER, 3, 3),
    ("C4", 3, 0, 4, (0, 0, 1), 1, 3),
    ("C5", 3, 2, 3, (0, 1, 2), 3, 9),
    ("C6", 3, 1, 3, (0, 0, 1), 5, 7),
    ("C7", 3, 0, 3, (0, 0, 1), 1, 3),
    ("C8", 3, 0, 3, POWER, 3, 3),
    ("C9", 3, 2, 2, (0, 1, 1), 2, 6),
    ("C10", 3, 1, 2, (0, 0, 1), 4, 6),
    ("C11", 3, 0, 2, (0, 0, 1), 1, 3),
    ("C12", 3, 0, 2, POWER, 3, 3),
    ("C13", 3, 1, 1, POWER, 3, 3),
    ("C14", 3, 0, 1, POWER, 3, 3),
    ("C15", 3, 0, 1, (0, 0, 1), 1, 3),
    ("C16", 3, 0, 1, POWER, 4, 4),
    ("C18", 3, 0, 1, (0, 0, 1), 3, 5),
    ("C19", 3, 0, 0, POWER, 0, 0),
]


def assert_agrees_with_oracle(field: TrinomialField, basis) -> None:
    p = basis.p
    assert basis.vp_disc == vp_int(field.discriminant, p)
    assert basis.vp_disc == 2 * basis.vp_index + basis.vp_dk
    order, index = p_maximal_order(field.polynomial, p)
    assert index == basis.vp_index
    assert all(contains(order, w) for w in basis.to_elements())


class TestTableRows:
    """Every row on a concrete instance, checked against the p-maximal order."""

    @pytest.mark.parametrize("label, p, va, vb, exponents, vp_dk, vp_disc", ROWS)
    def test_row(self, find_row, label, p, va, vb, exponents, vp_dk, vp_disc):
        field, basis = find_row(label, p, va, vb)
        assert vp_int(field.discriminant, p) == vp_disc
        assert basis.vp_disc == vp_disc
        assert basis.exponents == exponents
        assert basis.vp_dk == vp_dk
        assert all(num.is_monic() and num.degree == i for i, num in enumerate(basis.numerators, 1))
        assert_agrees_with_oracle(field, basis)

    def test_power_rows_use_power_numerators(self, find_row):
        _, basis = find_row("A5", 5, 1, 1)
        assert basis.numerators == (IntPoly.x(), IntPoly.monomial(2), IntPoly.monomial(3))


class TestUnramifiedRow:
    """A8: v_p(a) = v_p(b) = 0 at p >= 5."""

    def test_square_divides_discriminant(self):
        field = TrinomialField(1, 23)
        basis = p_basis(field, 5)
        assert basis.case == "A8"
        assert basis.exponents == (0, 0, 1)
        assert basis.vp_dk == 0
        assert basis.numerators[2] == IntPoly((-3993, 121, 11, 1))
        assert_agrees_with_oracle(field, basis)

    def test_prime_not_dividing_discriminant(self):
        basis = p_basis(TrinomialField(1, 1), 5)
        assert basis.case == "A8"
        assert basis.exponents == POWER
        assert basis.vp_dk == 0


class TestPrimeThreeShift:
    """C17 and C18: b = 3 mod 9 and a^2 = 7 mod 9."""

    def test_shifted_row(self):
        field = TrinomialField(4, 30)
        basis = p_basis(field, 3)
        assert basis.case == "C17"
        m = (basis.vp_disc - 2) // 2
        assert basis.exponents == (0, 1, m)
        assert basis.vp_dk == basis.vp_disc % 2
        assert basis.shift is not None
        assert_agrees_with_oracle(field, basis)

    def test_cubic_row(self):
        field = TrinomialField(4, 12)
        basis = p_basis(field, 3)
        assert basis.case == "C18"
        assert basis.exponents == (0, 0, 1)
        assert basis.vp_dk == 3
        assert_agrees_with_oracle(field, basis)


class TestRegularizingShift:
    """B* rows: a = 4 mod 8, b odd, b = 3 mod 8."""

    @pytest.mark.parametrize(
        "a, b, case, exponents, vp_dk, shift, iterations",
        [
            (4, 27, "B*1", (0, 1, 3), 3, 1, 0),
            (4, 11, "B*2", (0, 1, 2), 5, 1, 0),
            (12, 3, "B*3", (0, 1, 2), 6, 1, 0),
            (4, 19, "B*3", (0, 1, 2), 6, 3, 1),
        ],
    )
    def test_shift(self, a, b, case, exponents, vp_dk, shift, iterations):
        field = TrinomialField(a, b)
        basis = p_basis(field, 2)
        assert basis.case == case
        assert basis.exponents == exponents
        assert basis.vp_dk == vp_dk
        assert basis.shift == shift
        assert basis.shift_iterations == iterations
        assert_agrees_with_oracle(field, basis)

    def test_iteration_cap(self):
        with pytest.raises(TableMismatchError, match="within 0 steps"):
            table_b_row(4, 19, max_shift_iterations=0)

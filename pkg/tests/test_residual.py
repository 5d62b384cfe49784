"""Tests for quartic_basis.newton.residual module."""
from __future__ import annotations

import pytest

from quartic_basis.newton import (
    NewtonPolygonError,
    ResidualPoly,
    ResidueField,
    Side,
    ValuationPoint,
    index_lower_bound,
    is_p_regular,
    residual_poly,
)
from quartic_basis.polyring import IntPoly, ModPoly

X = IntPoly.x()


class TestResidualPoly:
    """Tests for residual_poly."""

    def test_quadratic_residue_field(self):
        poly = IntPoly((10, 9, 2, 0, 1))
        side = Side(ValuationPoint(0, 0), ValuationPoint(2, 2))
        residual = residual_poly(poly, IntPoly((1, 0, 1)), 3, side)
        assert residual.degree == 2
        assert residual.is_squarefree()
        assert residual.describe() == "Y^2 + (x + 1)"

    def test_repeated_residual(self):
        side = Side(ValuationPoint(0, 0), ValuationPoint(4, 4))
        residual = residual_poly(IntPoly((16, 0, 0, 0, 1)), X, 2, side)
        assert residual.describe() == "Y^4 + 1"
        assert not residual.is_squarefree()

    def test_square_over_quadratic_field(self):
        # (Y + x)^2 over F_3[x]/(x^2 + 1), where x^2 = 2
        field = ResidueField(ModPoly((1, 0, 1), 3))
        side = Side(ValuationPoint(0, 0), ValuationPoint(2, 2))
        square = ResidualPoly(side, (ModPoly((2,), 3), ModPoly((0, 2), 3), ModPoly((1,), 3)), field)
        split = ResidualPoly(side, (ModPoly((1,), 3), ModPoly((), 3), ModPoly((1,), 3)), field)
        assert not square.is_squarefree()
        assert split.is_squarefree()

    def test_non_principal_side_raises(self):
        side = Side(ValuationPoint(0, 0), ValuationPoint(2, 0))
        with pytest.raises(NewtonPolygonError, match="principal"):
            residual_poly(IntPoly((8, 16, 1, 2, 1)), X, 2, side)


class TestIsPRegular:
    """Tests for is_p_regular and index_lower_bound."""

    def test_single_side(self):
        regular, entries = is_p_regular(IntPoly.trinomial(125, 125), 5)
        assert regular
        assert len(entries) == 1
        assert entries[0].phi == X
        assert entries[0].multiplicity == 4
        assert entries[0].residual.degree == 1

    def test_squarefree_reduction_has_no_sides(self):
        regular, entries = is_p_regular(IntPoly.trinomial(1, 1), 2)
        assert regular
        assert entries == ()

    def test_not_regular(self):
        regular, entries = is_p_regular(IntPoly.trinomial(4, 11), 2)
        assert not regular
        assert entries[0].phi == IntPoly((1, 1))
        assert [e.squarefree for e in entries] == [True, False]

    def test_two_double_roots(self):
        regular, entries = is_p_regular(IntPoly((8, 16, 1, 2, 1)), 2)
        assert regular
        assert sorted(e.phi.coeffs for e in entries) == [(0, 1), (1, 1)]

    @pytest.mark.parametrize(
        "poly, p, expected",
        [
            (IntPoly.trinomial(125, 125), 5, 3),
            (IntPoly.trinomial(1, 1), 2, 0),
            (IntPoly((10, 9, 2, 0, 1)), 3, 2),
            (IntPoly((8, 16, 1, 2, 1)), 2, 2),
        ],
    )
    def test_index_lower_bound(self, poly, p, expected):
        assert index_lower_bound(poly, p) == expected

"""Newton polygons, residual polynomials and p-regularity."""
from quartic_basis.newton.polygon import (
    NewtonPolygon,
    NewtonPolygonError,
    PolygonIndex,
    Side,
    ValuationPoint,
    build_polygon,
    ind_N,
    phi_polygon,
    points_from_valuations,
    polygon_index,
    polygon_ordinate,
    principal_part,
    render_polygon,
)
from quartic_basis.newton.residual import (
    RegularityEntry,
    ResidualPoly,
    ResidueField,
    index_lower_bound,
    is_p_regular,
    residual_poly,
)

__all__ = [
    "NewtonPolygon",
    "NewtonPolygonError",
    "PolygonIndex",
    "RegularityEntry",
    "ResidualPoly",
    "ResidueField",
    "Side",
    "ValuationPoint",
    "build_polygon",
    "ind_N",
    "index_lower_bound",
    "is_p_regular",
    "phi_polygon",
    "points_from_valuations",
    "polygon_index",
    "polygon_ordinate",
    "principal_part",
    "render_polygon",
    "residual_poly",
]

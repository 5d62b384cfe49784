"""Independent p-maximal order computation used to check the closed-form bases."""
from quartic_basis.oracle.lattice import (
    TriangularLattice,
    hermite_basis,
    left_kernel_mod_p,
    triangular_coordinates,
)
from quartic_basis.oracle.round2 import (
    OrderBasis,
    contains,
    is_closed_under_multiplication,
    multiplier_ring,
    order_from_triangular,
    p_maximal_order,
    p_maximalize,
    power_order,
    radical,
)

__all__ = [
    "OrderBasis",
    "TriangularLattice",
    "contains",
    "hermite_basis",
    "is_closed_under_multiplication",
    "left_kernel_mod_p",
    "multiplier_ring",
    "order_from_triangular",
    "p_maximal_order",
    "p_maximalize",
    "power_order",
    "radical",
    "triangular_coordinates",
]

"""Integral bases of X^4 + aX + b, prime by prime, from the closed-form tables."""
from quartic_basis.trinomial.basis import (
    POWER_NUMERATORS,
    TableMismatchError,
    TableRow,
    TriangularPBasis,
    UnnormalizedInputError,
    certify,
)
from quartic_basis.trinomial.dispatch import (
    FactorizationIncompleteError,
    local_basis,
    normalize,
    p_basis,
    p_basis_all,
)
from quartic_basis.trinomial.field import ReducibleError, TrinomialField, trinomial_discriminant

__all__ = [
    "FactorizationIncompleteError",
    "POWER_NUMERATORS",
    "ReducibleError",
    "TableMismatchError",
    "TableRow",
    "TriangularPBasis",
    "TrinomialField",
    "UnnormalizedInputError",
    "certify",
    "local_basis",
    "normalize",
    "p_basis",
    "p_basis_all",
    "trinomial_discriminant",
]

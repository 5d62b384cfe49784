"""Exact integer and mod-p polynomial arithmetic."""
from quartic_basis.polyring.factor import (
    dedekind_test,
    factor_integer,
    factor_mod_p,
    factor_shape_mod_p,
    is_irreducible_quartic,
)
from quartic_basis.polyring.intpoly import (
    IntPoly,
    NotMonicError,
    PhiExpansion,
    bareiss_determinant,
    discriminant,
    phi_expand,
    rescale_numerator,
    resultant,
    taylor_shift,
)
from quartic_basis.polyring.modpoly import ModPoly, gcd, lift
from quartic_basis.polyring.valuation import (
    INFINITY,
    Valuation,
    is_finite,
    unit_part,
    vp_int,
    vp_poly,
)

__all__ = [
    "INFINITY",
    "IntPoly",
    "ModPoly",
    "NotMonicError",
    "PhiExpansion",
    "Valuation",
    "bareiss_determinant",
    "dedekind_test",
    "discriminant",
    "factor_integer",
    "factor_mod_p",
    "factor_shape_mod_p",
    "gcd",
    "is_finite",
    "is_irreducible_quartic",
    "lift",
    "phi_expand",
    "rescale_numerator",
    "resultant",
    "taylor_shift",
    "unit_part",
    "vp_int",
    "vp_poly",
]

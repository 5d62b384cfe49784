"""JSON documents printed by the CLI, and validation of its integer arguments.

Large integers travel as decimal strings; valuations and exponents stay JSON ints.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional

from pydantic import BaseModel, ValidationError, field_validator
from sympy import isprime

from quartic_basis.globalize import GlobalTriangularBasis
from quartic_basis.integrality import QuarticElement
from quartic_basis.newton import NewtonPolygon
from quartic_basis.oracle import OrderBasis
from quartic_basis.polyring import IntPoly
from quartic_basis.trinomial import TriangularPBasis


class JobSpecError(ValueError):
    pass


def _digits(values: Iterable[int | Fraction]) -> list[str]:
    return [str(v) for v in values]


class JobSpec(BaseModel):
    a: int
    b: int
    p: Optional[int] = None
    verify: bool = False

    @field_validator("a", "b", mode="before")
    @classmethod
    def parse_decimal(cls, value: object) -> int:
        if isinstance(value, bool):
            raise ValueError("expected an integer")
        if isinstance(value, int):
            return value
        text = str(value).strip()
        body = text[1:] if text[:1] in "+-" else text
        if not body.isdigit():
            raise ValueError(f"not a decimal integer: {value!r}")
        return int(text)

    @field_validator("p")
    @classmethod
    def check_prime(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and not isprime(value):
            raise ValueError(f"{value} is not prime")
        return value


def parse_job(**kwargs: object) -> JobSpec:
    try:
        return JobSpec(**kwargs)
    except ValidationError as exc:
        first = exc.errors()[0]
        field = ".".join(str(part) for part in first["loc"])
        raise JobSpecError(f"{field}: {first['msg']}") from exc


class BasisElementReport(BaseModel):
    numerator: list[str]
    denom_exp: int


class PBasisReport(BaseModel):
    p: str
    case: str
    vp_disc: int
    vp_index: int
    vp_dK: int
    basis: list[BasisElementReport]
    verified: bool
    shift: Optional[str] = None
    shift_iterations: int = 0
    oracle_vp_index: Optional[int] = None

    @classmethod
    def from_basis(cls, basis: TriangularPBasis, verified: bool, oracle_vp_index: int | None = None) -> "PBasisReport":
        return cls(
            p=str(basis.p),
            case=basis.case,
            vp_disc=basis.vp_disc,
            vp_index=basis.vp_index,
            vp_dK=basis.vp_dk,
            basis=[BasisElementReport(numerator=_digits(num.coeffs), denom_exp=r) for num, r in basis.rows()],
            verified=verified,
            shift=None if basis.shift is None else str(basis.shift),
            shift_iterations=basis.shift_iterations,
            oracle_vp_index=oracle_vp_index,
        )

    @classmethod
    def from_order(cls, order: OrderBasis, vp_disc: int) -> "PBasisReport":
        return cls(
            p=str(order.p),
            case="oracle",
            vp_disc=vp_disc,
            vp_index=order.index_exponent,
            vp_dK=vp_disc - 2 * order.index_exponent,
            basis=[BasisElementReport(numerator=_digits(row), denom_exp=r) for row, r in order.scaled_rows()],
            verified=True,
            oracle_vp_index=order.index_exponent,
        )

    def numerators(self) -> list[IntPoly]:
        return [IntPoly(tuple(int(c) for c in element.numerator)) for element in self.basis]

    def to_elements(self, ambient: IntPoly) -> list[QuarticElement]:
        """Rebuild the reported elements over X^4 + aX + b."""
        p = int(self.p)
        return [
            QuarticElement.from_numerator(num, element.denom_exp, p, ambient)
            for num, element in zip(self.numerators(), self.basis)
        ]

    def is_triangular(self) -> bool:
        """Numerator k has degree k and a leading coefficient prime to p."""
        p = int(self.p)
        numerators = self.numerators()
        return len(numerators) == 4 and all(
            num.degree == k and num.leading % p != 0 for k, num in enumerate(numerators)
        )


class GlobalElementReport(BaseModel):
    numerator: list[str]
    denominator: str


class GlobalBasisReport(BaseModel):
    d1: str
    d2: str
    d3: str
    ind: str
    dK: str
    basis: list[GlobalElementReport]
    conditional: bool = False
    cofactor: Optional[str] = None

    @classmethod
    def from_basis(cls, basis: GlobalTriangularBasis) -> "GlobalBasisReport":
        d1, d2, d3 = basis.divisors
        return cls(
            d1=str(d1),
            d2=str(d2),
            d3=str(d3),
            ind=str(basis.index),
            dK=str(basis.dk),
            basis=[
                GlobalElementReport(numerator=_digits(num.coeffs), denominator=str(d))
                for num, d in basis.rows()
            ],
            conditional=basis.conditional,
            cofactor=str(basis.cofactor) if basis.conditional else None,
        )


class PrimePowerReport(BaseModel):
    prime: str
    exponent: int


class DiscReport(BaseModel):
    disc: str
    factorization: list[PrimePowerReport]
    cofactor: str
    complete: bool

    @classmethod
    def build(cls, disc: int, factors: dict[int, int], cofactor: int) -> "DiscReport":
        return cls(
            disc=str(disc),
            factorization=[PrimePowerReport(prime=str(q), exponent=e) for q, e in factors.items()],
            cofactor=str(cofactor),
            complete=cofactor == 1,
        )


class PolygonSideReport(BaseModel):
    start: list[int]
    end: list[int]
    slope: str
    degree: int


class PhiPolygonReport(BaseModel):
    phi: list[str]
    multiplicity: int
    sides: list[PolygonSideReport]
    principal: list[str]
    ind: int
    regular: bool

    @classmethod
    def build(cls, phi: list[int], multiplicity: int, polygon: NewtonPolygon, ind: int, regular: bool) -> "PhiPolygonReport":
        principal = polygon.principal_part()
        return cls(
            phi=_digits(phi),
            multiplicity=multiplicity,
            sides=[
                PolygonSideReport(
                    start=[side.start.abscissa, side.start.ordinate],
                    end=[side.end.abscissa, side.end.ordinate],
                    slope=str(side.slope),
                    degree=side.degree,
                )
                for side in polygon.sides
            ],
            principal=principal.describe(),
            ind=ind,
            regular=regular,
        )


class PolygonReport(BaseModel):
    p: str
    polygons: list[PhiPolygonReport]
    index_lower_bound: int
    regular: bool


class CheckMismatch(BaseModel):
    a: str
    b: str
    p: str
    detail: str


class CheckReport(BaseModel):
    checked: int
    skipped: int
    mismatches: list[CheckMismatch]


class ErrorReport(BaseModel):
    error: str
    message: str

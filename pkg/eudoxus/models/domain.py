"""Domain models for certified real arithmetic."""

from enum import Enum
from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

_VALUE_CONFIG = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class DefectBound(BaseModel):
    """Strict bound on |f(a+b) - f(a) - f(b)|."""

    model_config = _VALUE_CONFIG

    c: int = Field(..., ge=1, description="Strict additivity defect bound")


class CertifiedApprox(BaseModel):
    """A rational interval guaranteed to contain the slope of a node."""

    model_config = _VALUE_CONFIG

    value: Fraction
    radius: Fraction

    @model_validator(mode="after")
    def check_radius(self) -> "CertifiedApprox":
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        return self

    @property
    def lower(self) -> Fraction:
        return self.value - self.radius

    @property
    def upper(self) -> Fraction:
        return self.value + self.radius

    def contains(self, q: Fraction | int) -> bool:
        return self.lower <= q <= self.upper

    def intersects(self, other: "CertifiedApprox") -> bool:
        return self.lower <= other.upper and other.lower <= self.upper


class Fuel(BaseModel):
    """Search budget: n runs over 2**0 .. 2**max_doublings."""

    model_config = _VALUE_CONFIG

    max_doublings: int = Field(default=64, ge=1)

    @classmethod
    def coerce(cls, fuel: "Fuel | int") -> "Fuel":
        return fuel if isinstance(fuel, Fuel) else cls(max_doublings=fuel)


class Positive(BaseModel):
    """f(witness) > c, so the slope is at least slope_floor."""

    model_config = _VALUE_CONFIG

    verdict: Literal["positive"] = "positive"
    witness: int = Field(..., ge=1)
    slope_floor: Fraction

    def __str__(self) -> str:
        return f"positive (witness n={self.witness}, λ ≥ {self.slope_floor})"


class Negative(BaseModel):
    """f(witness) < -c, so the slope is at most slope_ceiling."""

    model_config = _VALUE_CONFIG

    verdict: Literal["negative"] = "negative"
    witness: int = Field(..., ge=1)
    slope_ceiling: Fraction

    def __str__(self) -> str:
        return f"negative (witness n={self.witness}, λ ≤ {self.slope_ceiling})"


class Inconclusive(BaseModel):
    """Fuel ran out; only |λ| ≤ bound is certified."""

    model_config = _VALUE_CONFIG

    verdict: Literal["inconclusive"] = "inconclusive"
    bound: Fraction

    def __str__(self) -> str:
        return f"inconclusive |λ| ≤ {self.bound}"


SignResult = Positive | Negative | Inconclusive


class Convergent(BaseModel):
    """The index-th convergent p/q of a continued fraction."""

    model_config = _VALUE_CONFIG

    p: int
    q: int = Field(..., ge=1)
    index: int = Field(..., ge=0)

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)


class CFStatus(str, Enum):
    """How a continued-fraction extraction ended."""

    PREFIX = "prefix"
    TERMINATED = "terminated"
    INCONCLUSIVE = "inconclusive"


class CFExpansion(BaseModel):
    """Extracted continued-fraction terms and the reason extraction stopped."""

    model_config = _VALUE_CONFIG

    terms: tuple[int, ...]
    status: CFStatus
    bound: Fraction | None = Field(
        default=None, description="Certified magnitude of the last remainder, when known"
    )

    def __str__(self) -> str:
        if not self.terms:
            return f"[] ({self.status.value})"
        head, *tail = self.terms
        body = f"[{head}; {', '.join(map(str, tail))}]" if tail else f"[{head}]"
        return f"{body} ({self.status.value})"

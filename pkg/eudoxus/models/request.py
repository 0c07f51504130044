"""Pydantic command models, validated before execution."""

from fractions import Fraction
from typing import Annotated, Any, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


def _fraction(value: Any) -> Fraction:
    try:
        return Fraction(value.strip() if isinstance(value, str) else value)
    except (ValueError, ZeroDivisionError, TypeError) as err:
        raise ValueError(f"not a rational number: {value!r}") from err


def _integers(value: Any) -> Any:
    if isinstance(value, str):
        try:
            return tuple(int(part) for part in value.replace(" ", "").split(",") if part)
        except ValueError as err:
            raise ValueError(f"not a comma-separated integer list: {value!r}") from err
    return value


class _Command(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    fuel: int | None = Field(default=None, ge=1, le=4096, description="Doubling budget override")


class EvalCommand(_Command):
    """Print an expression as a certified decimal."""

    command: Literal["eval"] = "eval"
    expression: str
    digits: int | None = Field(default=None, ge=0, description="Fraction digits override")


class CFCommand(_Command):
    """Extract continued-fraction terms of an expression."""

    command: Literal["cf"] = "cf"
    expression: str
    terms: int = Field(default=10, ge=1, le=10_000, description="Number of terms wanted")


class SignCommand(_Command):
    command: Literal["sign"] = "sign"
    expression: str


class CompareCommand(_Command):
    command: Literal["compare"] = "compare"
    left: str
    right: str


class DefectCommand(_Command):
    """Scan the additivity defect of an expression against its claimed bound."""

    command: Literal["defect"] = "defect"
    expression: str
    range_bound: int | None = Field(default=None, ge=1, le=2000)


class SaturateCommand(_Command):
    command: Literal["saturate"] = "saturate"
    generators: tuple[int, ...] = Field(..., min_length=1)

    @field_validator("generators", mode="before")
    @classmethod
    def validate_generators(cls, v: Any) -> Any:
        return _integers(v)


class CrtCommand(_Command):
    """Split `value` over a prime partition, or join it with `other`."""

    command: Literal["crt"] = "crt"
    value: Fraction
    partition: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    other: Fraction | None = None
    level: int | None = Field(default=None, ge=1)

    @field_validator("value", mode="before")
    @classmethod
    def validate_value(cls, v: Any) -> Fraction:
        return _fraction(v)

    @field_validator("other", mode="before")
    @classmethod
    def validate_other(cls, v: Any) -> Fraction | None:
        return None if v is None else _fraction(v)

    @field_validator("partition", mode="before")
    @classmethod
    def validate_partition(cls, v: Any) -> Any:
        if isinstance(v, str):
            sides = v.split("|")
            if len(sides) != 2:
                raise ValueError(f"partition must look like '2|3', got {v!r}")
            return tuple(_integers(side) for side in sides)
        return v

    @model_validator(mode="after")
    def check_target(self) -> "CrtCommand":
        if (self.partition is None) == (self.other is None):
            raise ValueError("give either a prime partition or a second fraction")
        return self


class PadicCommand(_Command):
    """p-adic digits of a multiplication action (`r`) or a square root (`sqrt(n)`)."""

    command: Literal["padic"] = "padic"
    value: str = Field(..., pattern=r"^\s*(sqrt\(\s*\d+\s*\)|-?\d+(/\d+)?)\s*$")
    p: int = Field(..., ge=2)
    precision: int | None = Field(default=None, ge=1, le=512)


class QEndCommand(_Command):
    """Decompose multiplication by a rational over a set of primes."""

    command: Literal["qend"] = "qend"
    rational: Fraction
    primes: tuple[int, ...] = Field(..., min_length=1)
    precision: int | None = Field(default=None, ge=1, le=512)

    @field_validator("rational", mode="before")
    @classmethod
    def validate_rational(cls, v: Any) -> Fraction:
        return _fraction(v)

    @field_validator("primes", mode="before")
    @classmethod
    def validate_primes(cls, v: Any) -> Any:
        return _integers(v)


Command = Annotated[
    Union[
        EvalCommand,
        CFCommand,
        SignCommand,
        CompareCommand,
        DefectCommand,
        SaturateCommand,
        CrtCommand,
        PadicCommand,
        QEndCommand,
    ],
    Field(discriminator="command"),
]

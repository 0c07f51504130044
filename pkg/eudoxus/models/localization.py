"""Value types for localizations of the integers and truncated p-adic numbers."""

import math
from fractions import Fraction
from typing import Iterable

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy import isprime, multiplicity, primefactors

from eudoxus.core.exceptions import PrimeMismatchError, SupportViolationError


class MultSet(BaseModel):
    """Multiplicative set generated by finitely many nonzero integers."""

    model_config = ConfigDict(frozen=True)

    generators: tuple[int, ...] = Field(..., min_length=1)

    @field_validator("generators")
    @classmethod
    def validate_generators(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if 0 in v:
            raise ValueError("0 cannot belong to a multiplicative set used for localization")
        return v


class PrimeSet(BaseModel):
    """Sorted set of distinct primes."""

    model_config = ConfigDict(frozen=True)

    primes: tuple[int, ...] = ()

    @field_validator("primes")
    @classmethod
    def validate_primes(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        composite = [p for p in v if not isprime(p)]
        if composite:
            raise ValueError(f"not prime: {composite}")
        return tuple(sorted(set(v)))

    @classmethod
    def of(cls, primes: Iterable[int]) -> "PrimeSet":
        return cls(primes=tuple(primes))

    @classmethod
    def supporting(cls, n: int) -> "PrimeSet":
        """Primes dividing n."""
        return cls(primes=tuple(primefactors(abs(n))))

    def __contains__(self, p: object) -> bool:
        return p in self.primes

    def __iter__(self):
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def union(self, other: "PrimeSet") -> "PrimeSet":
        return PrimeSet(primes=self.primes + other.primes)

    def isdisjoint(self, other: "PrimeSet") -> bool:
        return set(self.primes).isdisjoint(other.primes)

    def part(self, n: int) -> int:
        """Largest divisor of n supported on these primes."""
        n = abs(n)
        result = 1
        for p in self.primes:
            result *= p ** multiplicity(p, n)
        return result

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.primes)) + "}"


class PruferFrac(BaseModel):
    """num/den mod 1, reduced, with den supported on `support`."""

    model_config = ConfigDict(frozen=True)

    num: int = Field(..., ge=0)
    den: int = Field(..., ge=1)
    support: PrimeSet = Field(default_factory=PrimeSet)

    @model_validator(mode="after")
    def check_reduced(self) -> "PruferFrac":
        if self.num >= self.den:
            raise ValueError("numerator must be below the denominator")
        if math.gcd(self.num, self.den) != 1:
            raise ValueError("fraction must be reduced")
        stray = [p for p in primefactors(self.den) if p not in self.support]
        if stray:
            raise ValueError(f"denominator primes {stray} outside support {self.support}")
        return self

    @classmethod
    def of(
        cls, value: Fraction | int, den: int = 1, support: PrimeSet | None = None
    ) -> "PruferFrac":
        """Reduce value/den modulo 1.

        Raises:
            SupportViolationError: If the reduced denominator leaves `support`
        """
        q = Fraction(value) / den % 1
        if support is None:
            support = PrimeSet.supporting(q.denominator)
        stray = [p for p in primefactors(q.denominator) if p not in support]
        if stray:
            raise SupportViolationError(
                f"denominator {q.denominator} has primes {stray} outside {support}",
                details={"den": q.denominator, "support": str(support)},
            )
        return cls(num=q.numerator, den=q.denominator, support=support)

    @classmethod
    def zero(cls, support: PrimeSet | None = None) -> "PruferFrac":
        return cls(num=0, den=1, support=support or PrimeSet())

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __add__(self, other: "PruferFrac") -> "PruferFrac":
        return PruferFrac.of(
            self.as_fraction() + other.as_fraction(), support=self.support.union(other.support)
        )

    def __neg__(self) -> "PruferFrac":
        return PruferFrac.of(-self.as_fraction(), support=self.support)

    def __sub__(self, other: "PruferFrac") -> "PruferFrac":
        return self + (-other)

    def __str__(self) -> str:
        return f"{self.num}/{self.den} mod 1"


class PadicTrunc(BaseModel):
    """p**valuation * (d0 + d1 p + ... ), digits least significant first.

    The unit part is known modulo p**precision. Zero is all-zero digits with
    valuation 0.
    """

    model_config = ConfigDict(frozen=True)

    p: int
    valuation: int
    digits: tuple[int, ...] = Field(..., min_length=1)
    precision: int = Field(..., ge=1)

    @field_validator("p")
    @classmethod
    def validate_prime(cls, v: int) -> int:
        if not isprime(v):
            raise ValueError(f"{v} is not prime")
        return v

    @model_validator(mode="after")
    def check_digits(self) -> "PadicTrunc":
        if len(self.digits) != self.precision:
            raise ValueError("digit count must equal precision")
        if any(not 0 <= d < self.p for d in self.digits):
            raise ValueError(f"digits must lie in [0, {self.p - 1}]")
        if self.digits[0] == 0 and any(self.digits):
            raise ValueError("leading unit digit must be nonzero")
        if not any(self.digits) and self.valuation != 0:
            raise ValueError("zero carries valuation 0")
        return self

    @classmethod
    def from_unit(cls, p: int, valuation: int, unit: int, precision: int) -> "PadicTrunc":
        unit %= p**precision
        digits = []
        for _ in range(precision):
            unit, d = divmod(unit, p)
            digits.append(d)
        if not any(digits):
            valuation = 0
        return cls(p=p, valuation=valuation, digits=tuple(digits), precision=precision)

    @classmethod
    def zero(cls, p: int, precision: int) -> "PadicTrunc":
        return cls.from_unit(p, 0, 0, precision)

    @classmethod
    def from_rational(cls, value: Fraction | int, p: int, precision: int) -> "PadicTrunc":
        """Image of a rational in Q_p with `precision` unit digits."""
        q = Fraction(value)
        if q == 0:
            return cls.zero(p, precision)
        vn, vd = multiplicity(p, q.numerator), multiplicity(p, q.denominator)
        num, den = q.numerator // p**vn, q.denominator // p**vd
        modulus = p**precision
        return cls.from_unit(p, vn - vd, num * pow(den, -1, modulus), precision)

    @classmethod
    def from_residue(cls, value: Fraction, p: int, absolute: int) -> "PadicTrunc":
        """Element known modulo p**absolute, from any representative in Z[1/p] or Z_(p)."""
        r = _reduce(value, p, absolute)
        if r == 0:
            return cls.zero(p, max(absolute, 1))
        v = multiplicity(p, r.numerator) - multiplicity(p, r.denominator)
        return cls.from_rational(r, p, absolute - v)

    @property
    def is_zero(self) -> bool:
        return not any(self.digits)

    @property
    def unit(self) -> int:
        return sum(d * self.p**i for i, d in enumerate(self.digits))

    @property
    def absolute_precision(self) -> int:
        return self.valuation + self.precision

    def to_fraction(self) -> Fraction:
        """The truncated representative unit * p**valuation."""
        return self.unit * Fraction(self.p) ** self.valuation

    def _check_prime(self, other: "PadicTrunc") -> None:
        if other.p != self.p:
            raise PrimeMismatchError(
                f"cannot combine {self.p}-adic and {other.p}-adic numbers",
                details={"left": self.p, "right": other.p},
            )

    def __add__(self, other: "PadicTrunc") -> "PadicTrunc":
        self._check_prime(other)
        absolute = min(self.absolute_precision, other.absolute_precision)
        return PadicTrunc.from_residue(self.to_fraction() + other.to_fraction(), self.p, absolute)

    def __neg__(self) -> "PadicTrunc":
        return PadicTrunc.from_unit(self.p, self.valuation, -self.unit, self.precision)

    def __sub__(self, other: "PadicTrunc") -> "PadicTrunc":
        return self + (-other)

    def __mul__(self, other: "PadicTrunc") -> "PadicTrunc":
        self._check_prime(other)
        precision = min(self.precision, other.precision)
        if self.is_zero or other.is_zero:
            return PadicTrunc.zero(self.p, precision)
        return PadicTrunc.from_unit(
            self.p, self.valuation + other.valuation, self.unit * other.unit, precision
        )

    def __str__(self) -> str:
        return f"p-adic(p={self.p}, val={self.valuation}, digits=[{','.join(map(str, self.digits))}])"


class QEndProduct(BaseModel):
    """One truncated p-adic component per prime of `primes`."""

    model_config = ConfigDict(frozen=True)

    primes: PrimeSet
    components: tuple[tuple[int, PadicTrunc], ...]

    @model_validator(mode="after")
    def check_components(self) -> "QEndProduct":
        if tuple(p for p, _ in self.components) != self.primes.primes:
            raise ValueError("need exactly one component per prime, in order")
        if any(p != x.p for p, x in self.components):
            raise ValueError("component prime mismatch")
        return self

    def component(self, p: int) -> PadicTrunc:
        for prime, x in self.components:
            if prime == p:
                return x
        raise PrimeMismatchError(f"no component at {p}", details={"primes": str(self.primes)})

    def __str__(self) -> str:
        return "\n".join(str(x) for _, x in self.components)


def _reduce(value: Fraction, p: int, exponent: int) -> Fraction:
    """value modulo p**exponent, for value with p-power denominator or p-free denominator."""
    value = Fraction(value)
    p_den = p ** multiplicity(p, value.denominator)
    other = value.denominator // p_den
    modulus = Fraction(p) ** exponent
    if other == 1:
        return value % modulus
    # Replace the p-free part of the denominator by its inverse modulo a large enough power.
    top = max(exponent, 0) + multiplicity(p, value.denominator)
    num = value.numerator * pow(other, -1, p**top) % p**top
    return Fraction(num, p_den) % modulus

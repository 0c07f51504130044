"""Localizations of Z, CRT splitting and p-adic numbers acting on Z[1/p]/Z."""

from fractions import Fraction
from typing import Callable

from sympy import multiplicity, primefactors, sqrt_mod
from sympy.ntheory.modular import crt

from eudoxus.core.exceptions import (
    IncoherentActionError,
    PrecisionExhaustedError,
    PrimeMismatchError,
    SupportViolationError,
    ValidationError,
)
from eudoxus.core.logging import get_logger
from eudoxus.models.localization import MultSet, PadicTrunc, PrimeSet, PruferFrac, QEndProduct

logger = get_logger(__name__)

Action = Callable[[PruferFrac], PruferFrac]


def saturate(s: MultSet) -> PrimeSet:
    """Primes dividing some generator; signs are dropped."""
    primes: set[int] = set()
    for g in s.generators:
        primes.update(primefactors(abs(g)))
    return PrimeSet.of(primes)


def in_saturation(s: MultSet, r: int) -> bool:
    """Whether r divides some product of generators."""
    if r == 0:
        return False
    return set(primefactors(abs(r))) <= set(saturate(s).primes)


def _check_support(x: PruferFrac, allowed: PrimeSet) -> None:
    _check_primes(x.den, allowed)


def _check_primes(n: int, allowed: PrimeSet) -> None:
    stray = [p for p in primefactors(n) if p not in allowed]
    if stray:
        raise SupportViolationError(
            f"denominator {n} has primes {stray} outside {allowed}",
            details={"den": n, "allowed": str(allowed)},
        )


def _resolve_level(level: int | None, x_den: int, primes: PrimeSet) -> int:
    if level is None:
        return x_den
    if level < 1 or level % x_den:
        raise ValidationError(
            f"level {level} is not a positive multiple of {x_den}",
            details={"level": level, "den": x_den},
        )
    _check_primes(level, primes)
    return level


def crt_split(
    x: PruferFrac, left: PrimeSet, right: PrimeSet, *, level: int | None = None
) -> tuple[PruferFrac, PruferFrac]:
    """Write x = y/(n*m) at the given level and return (y/n, y/m) mod 1.

    n is the part of the level supported on `left`, m the part on `right`. The
    level defaults to den(x); the map is additive for any fixed level.

    Args:
        x: Element of S^-1 Z / Z
        left: Primes of the first factor
        right: Primes of the second factor, disjoint from `left`
        level: Common denominator to split at

    Returns:
        The pair of components

    Raises:
        ValidationError: If the prime sets overlap or the level is invalid
        SupportViolationError: If x or the level has a prime outside both sets
    """
    if not left.isdisjoint(right):
        raise ValidationError(
            "prime sets must be disjoint", details={"left": str(left), "right": str(right)}
        )
    both = left.union(right)
    _check_support(x, both)
    level = _resolve_level(level, x.den, both)
    y = x.num * (level // x.den)
    n, m = left.part(level), right.part(level)
    return PruferFrac.of(y, n, support=left), PruferFrac.of(y, m, support=right)


def crt_join(a: PruferFrac, b: PruferFrac, *, level: int | None = None) -> PruferFrac:
    """Inverse of crt_split: y/(n*m) with y = num_a mod n, y = num_b mod m.

    Args:
        a: Component supported on the left primes
        b: Component supported on the right primes
        level: Level n*m the components were split at, default den(a)*den(b)

    Raises:
        SupportViolationError: If the supports overlap, or a component does not
            fit the level
    """
    if not a.support.isdisjoint(b.support):
        raise SupportViolationError(
            "component supports overlap",
            details={"left": str(a.support), "right": str(b.support)},
        )
    both = a.support.union(b.support)
    level = _resolve_level(level, a.den * b.den, both)
    n, m = a.support.part(level), b.support.part(level)
    if n % a.den or m % b.den:
        raise SupportViolationError(
            f"components do not fit level {level}", details={"a": str(a), "b": str(b)}
        )
    residue, _ = crt([n, m], [a.num * (n // a.den), b.num * (m // b.den)])
    return PruferFrac.of(int(residue), level, support=both)


def project(x: PruferFrac, primes: PrimeSet) -> PruferFrac:
    """Primary component of x on `primes`, the unique additive projection.

    Computed through crt_split at level den(x), then untwisted by the
    complementary factor.
    """
    rest = PrimeSet.of(p for p in primefactors(x.den) if p not in primes)
    left, _ = crt_split(x, primes, rest)
    n, m = primes.part(x.den), rest.part(x.den)
    if n == 1:
        return PruferFrac.zero(primes)
    return PruferFrac.of(left.as_fraction() * pow(m, -1, n), support=primes)


def multiplication_action(r: Fraction | int, primes: PrimeSet) -> Action:
    """Multiplication by r on S^-1 Z / Z.

    Denominator primes of r outside `primes` are units on the group and act
    through their modular inverse.
    """
    r = Fraction(r)
    inside = primes.part(r.denominator)
    outside = r.denominator // inside

    def act(a: PruferFrac) -> PruferFrac:
        _check_support(a, primes)
        den = a.den * inside
        num = a.num * r.numerator * pow(outside, -1, den) if den > 1 else 0
        return PruferFrac.of(num, den, support=primes)

    return act


def _check_p_power(a: PruferFrac, p: int) -> int:
    k = multiplicity(p, a.den)
    if p**k != a.den or any(q != p for q in a.support):
        raise PrimeMismatchError(
            f"{a} is not in Z[1/{p}]/Z", details={"p": p, "support": str(a.support)}
        )
    return k


def padic_act(x: PadicTrunc, a: PruferFrac) -> PruferFrac:
    """x * a in Z[1/p]/Z for a with denominator p**k.

    Only x modulo p**k matters, so the truncation suffices whenever
    x.valuation + x.precision >= k.

    Raises:
        PrimeMismatchError: If a is not supported on x.p
        PrecisionExhaustedError: If x is not known modulo p**k
    """
    p = x.p
    k = _check_p_power(a, p)
    support = PrimeSet.of([p])
    if x.absolute_precision < k:
        raise PrecisionExhaustedError(
            f"{x} is known modulo {p}^{x.absolute_precision}, need {p}^{k}",
            details={"needed": k, "available": x.absolute_precision},
        )
    exponent = k - x.valuation
    if x.is_zero or exponent <= 0:
        return PruferFrac.zero(support)
    modulus = p**exponent
    return PruferFrac.of(x.unit % modulus * a.num, modulus, support=support)


def padic_extract(action: Action, p: int, precision: int, *, slack: int = 0) -> PadicTrunc:
    """Recover the p-adic multiplier of an action on Z[1/p]/Z.

    Level j reads x mod p**(j - slack) as p**j * action(1/p**j). Levels are read
    until the first nonzero residue fixes the valuation v, then up to
    v + precision + slack. Every level must agree with the last one modulo its
    own reach.

    Args:
        action: Callable on elements with p-power denominators
        p: The prime
        precision: Unit digits wanted
        slack: Denominator exponent of a bounded perturbation to tolerate

    Returns:
        PadicTrunc with `precision` digits

    Raises:
        IncoherentActionError: If an image leaves Z[1/p]/Z or levels disagree
    """
    if precision < 1 or slack < 0:
        raise ValidationError(
            "precision must be positive and slack nonnegative",
            details={"precision": precision, "slack": slack},
        )
    support = PrimeSet.of([p])
    readings: dict[int, Fraction] = {}

    def read(j: int) -> Fraction:
        if j not in readings:
            image = action(PruferFrac.of(1, p**j, support=support))
            if p ** multiplicity(p, image.den) != image.den:
                raise IncoherentActionError(
                    f"image {image} of 1/{p}^{j} leaves Z[1/{p}]/Z", details={"level": j}
                )
            readings[j] = image.as_fraction() * p**j
        return readings[j]

    valuation = None
    for j in range(1, precision + slack + 1):
        if j - slack < 1:
            continue
        residue = read(j) % p ** (j - slack)
        if residue:
            valuation = multiplicity(p, residue.numerator) - multiplicity(p, residue.denominator)
            break
    if valuation is None:
        _check_coherence(readings, p, slack)
        logger.debug("padic_extracted", p=p, valuation=None, levels=len(readings))
        return PadicTrunc.zero(p, precision)

    top = max(valuation + precision + slack, max(readings))
    read(top)
    for j in range(1, top):
        read(j)
    _check_coherence(readings, p, slack)
    reach = Fraction(p) ** (valuation + precision)
    unit = (readings[top] % reach) / Fraction(p) ** valuation
    if unit.denominator != 1:
        raise IncoherentActionError(
            "levels do not determine a unit part", details={"p": p, "valuation": valuation}
        )
    logger.debug("padic_extracted", p=p, valuation=valuation, levels=len(readings))
    return PadicTrunc.from_unit(p, valuation, int(unit), precision)


def _check_coherence(readings: dict[int, Fraction], p: int, slack: int) -> None:
    top = max(readings)
    for j, value in readings.items():
        reach = j - slack
        if reach < 1:
            continue
        difference = (readings[top] - value) / p**reach
        if difference.denominator != 1:
            raise IncoherentActionError(
                f"level {j} disagrees with level {top} modulo {p}^{reach}",
                details={"level": j, "top": top, "p": p},
            )


def qend_decompose(
    action: Action, primes: PrimeSet, precision: int, *, slack: int = 0
) -> QEndProduct:
    """Split an action on S^-1 Z / Z into one p-adic number per prime of S."""
    components = []
    for p in primes:
        single = PrimeSet.of([p])

        def restricted(a: PruferFrac, single: PrimeSet = single) -> PruferFrac:
            return project(action(a), single)

        components.append((p, padic_extract(restricted, p, precision, slack=slack)))
    logger.debug("qend_decomposed", primes=str(primes), precision=precision)
    return QEndProduct(primes=primes, components=tuple(components))


def qend_act(product: QEndProduct, a: PruferFrac) -> PruferFrac:
    """Let the product act on S^-1 Z / Z componentwise."""
    total = PruferFrac.zero(product.primes)
    for p, x in product.components:
        part = project(a, PrimeSet.of([p]))
        total = total + padic_act(x, part)
    return PruferFrac.of(total.as_fraction(), support=product.primes)


def padic_sqrt(a: int, p: int, precision: int) -> PadicTrunc:
    """Square root of a p-adic unit a by Hensel lifting, for odd p.

    The root congruent to the least square root of a modulo p is returned.

    Raises:
        ValidationError: If p = 2, p divides a, or a is not a square modulo p
    """
    if p == 2 or a % p == 0:
        raise ValidationError(
            "square roots need an odd prime and a unit", details={"a": a, "p": p}
        )
    root = sqrt_mod(a, p)
    if root is None:
        raise ValidationError(f"{a} is not a square modulo {p}", details={"a": a, "p": p})
    modulus = p
    while modulus < p**precision:
        modulus = min(modulus * modulus, p**precision)
        root = (root - (root * root - a) * pow(2 * root, -1, modulus)) % modulus
    return PadicTrunc.from_unit(p, 0, root, precision)


def cross_prime_homs(p: int, q: int, level: int, depth: int) -> list[PruferFrac]:
    """All y in (1/q**depth)Z/Z with p**level * y = 0, the possible images of 1/p**level."""
    support = PrimeSet.of([q])
    modulus = q**depth
    order = p**level
    return [
        PruferFrac.of(num, modulus, support=support)
        for num in range(modulus)
        if (num * order) % modulus == 0
    ]

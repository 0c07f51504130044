"""Ordered-field operations on near-endomorphisms."""

from fractions import Fraction

from eudoxus.core.exceptions import InconclusiveSignError, TrichotomyViolationError, ValidationError
from eudoxus.core.guards import invariant_guard
from eudoxus.core.logging import get_logger
from eudoxus.models.domain import Fuel, Inconclusive, Negative, Positive, SignResult
from eudoxus.services.endo_core import Compose, EndoNode, IntSlope, Inverse, Neg, RatSlope, Sum

logger = get_logger(__name__)

DEFAULT_FUEL = Fuel(max_doublings=64)
DEFAULT_MAX_DIGITS = 1000

# Extra doublings spent tightening the slope bracket before building an inverse.
_REFINE_DOUBLINGS = 24


def identity() -> EndoNode:
    return IntSlope(1)


def from_rational(q: Fraction | int) -> EndoNode:
    q = Fraction(q)
    if q.denominator == 1:
        return IntSlope(q.numerator)
    return RatSlope(q.numerator, q.denominator)


def add(f: EndoNode, g: EndoNode) -> EndoNode:
    return Sum(f, g)


def neg(f: EndoNode) -> EndoNode:
    return Neg(f)


def sub(f: EndoNode, g: EndoNode) -> EndoNode:
    return Sum(f, Neg(g))


def mul(f: EndoNode, g: EndoNode) -> EndoNode:
    """Product of slopes, realised as composition f(g(x))."""
    return Compose(f, g)


def scale(f: EndoNode, k: int) -> EndoNode:
    return Compose(IntSlope(k), f)


def sign(f: EndoNode, fuel: Fuel | int = DEFAULT_FUEL) -> SignResult:
    """Search n = 1, 2, 4, ... for |f(n)| > c.

    A decisive verdict is recorded on the node. A node that was certified with
    the opposite verdict before is a broken invariant.

    Args:
        f: Node to classify
        fuel: Number of doublings to try

    Returns:
        Positive or Negative with witness, or Inconclusive with |λ| ≤ bound

    Raises:
        TrichotomyViolationError: If the node already carries the opposite certificate
    """
    fuel = Fuel.coerce(fuel)
    c = f.c
    n = value = 0
    for k in range(fuel.max_doublings + 1):
        n = 1 << k
        value = f(n)
        if value > c:
            return _record(f, Positive(witness=n, slope_floor=Fraction(value - c, n)))
        if value < -c:
            return _record(f, Negative(witness=n, slope_ceiling=Fraction(value + c, n)))
    bound = Fraction(abs(value) + c, n)
    logger.debug("sign_inconclusive", node=f.kind, bound=str(bound), fuel=fuel.max_doublings)
    return Inconclusive(bound=bound)


def _record(f: EndoNode, verdict: Positive | Negative) -> Positive | Negative:
    with invariant_guard(
        f.certificate,
        lambda seen: seen is not None and seen.verdict != verdict.verdict,
        TrichotomyViolationError(
            "node certified both positive and negative",
            details={"previous": str(f.certificate), "current": str(verdict)},
        ),
    ):
        f.certificate = verdict
    logger.debug("sign_certified", node=f.kind, verdict=verdict.verdict, witness=verdict.witness)
    return verdict


def compare(f: EndoNode, g: EndoNode, fuel: Fuel | int = DEFAULT_FUEL) -> SignResult:
    """Sign of λ(f) - λ(g)."""
    return sign(sub(f, g), fuel)


def invert(f: EndoNode, fuel: Fuel | int = DEFAULT_FUEL) -> EndoNode:
    """Multiplicative inverse of a node with a sign certificate.

    Args:
        f: Node to invert
        fuel: Budget for the sign search

    Returns:
        An Inverse node, wrapped in negations when f is negative

    Raises:
        InconclusiveSignError: If no sign certificate is found within fuel
    """
    verdict = sign(f, fuel)
    match verdict:
        case Positive():
            return _positive_inverse(f, verdict)
        case Negative():
            flip = IntSlope(-1)
            return Compose(flip, invert(Compose(f, flip), fuel))
        case Inconclusive(bound=bound):
            raise InconclusiveSignError(
                f"cannot invert: |λ| ≤ {bound} and no sign certificate",
                details={"bound": str(bound)},
            )


def _positive_inverse(f: EndoNode, verdict: Positive) -> Inverse:
    c = f.c
    floor, n = verdict.slope_floor, verdict.witness
    ceiling = Fraction(f(n) + c, n)
    for _ in range(_REFINE_DOUBLINGS):
        if ceiling - floor <= floor / 4:
            break
        n *= 2
        value = f(n)
        floor = max(floor, Fraction(value - c, n))
        ceiling = min(ceiling, Fraction(value + c, n))
    node = Inverse(f, floor, ceiling)
    logger.debug("inverse_built", slope_floor=str(floor), window=node.window, defect=node.c)
    return node


def to_decimal(f: EndoNode, digits: int, max_digits: int = DEFAULT_MAX_DIGITS) -> str:
    """Certified decimal expansion `[-]int.frac ±1e-digits`.

    The midpoint f(n)/n with n = c*10**(digits+1) lies within 10**-(digits+1) of
    the slope; it is rounded half away from zero, so the printed value is within
    one unit in the last place.

    Args:
        f: Node to print
        digits: Number of fraction digits
        max_digits: Largest accepted request

    Returns:
        Decimal text with error annotation

    Raises:
        ValidationError: If digits is negative or above max_digits
    """
    if not 0 <= digits <= max_digits:
        raise ValidationError(
            f"digits must lie in [0, {max_digits}]", details={"digits": digits}
        )
    c = f.c
    value = f(c * 10 ** (digits + 1))
    quotient, remainder = divmod(abs(value), 10 * c)
    if 2 * remainder >= 10 * c:
        quotient += 1
    sign_text = "-" if value < 0 and quotient else ""
    integer, fraction = divmod(quotient, 10**digits)
    body = f"{sign_text}{integer}.{fraction:0{digits}d}" if digits else f"{sign_text}{integer}"
    return f"{body} ±1e-{digits}"

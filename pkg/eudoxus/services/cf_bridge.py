"""Continued fractions to and from near-endomorphisms."""

from fractions import Fraction
from typing import Callable, Sequence

from eudoxus.core.exceptions import ValidationError
from eudoxus.core.logging import get_logger
from eudoxus.models.cfseq import CFSeq
from eudoxus.models.domain import (
    CFExpansion,
    CFStatus,
    Convergent,
    Fuel,
    Inconclusive,
    Negative,
    Positive,
)
from eudoxus.services.endo_core import CFPiecewise, EndoNode, IntSlope, approx
from eudoxus.services.real_ops import DEFAULT_FUEL, add, from_rational, neg, sign, sub

logger = get_logger(__name__)

__all__ = [
    "CFSeq",
    "cf_to_endo",
    "convergents",
    "diagonal",
    "endo_to_cf",
    "integer_part",
    "rational_cf",
    "reciprocal_cf",
]


def convergents(cf: CFSeq, n: int) -> list[Convergent]:
    """First n convergents by the standard recurrence.

    Raises:
        ValidationError: If n < 1
        FiniteExhaustedError: If the sequence has fewer than n terms
    """
    if n < 1:
        raise ValidationError("need at least one convergent", details={"n": n})
    result: list[Convergent] = []
    p1, q1, p2, q2 = 1, 0, 0, 1
    for index in range(n):
        term = cf.require(index)
        p, q = term * p1 + p2, term * q1 + q2
        result.append(Convergent(p=p, q=q, index=index))
        p1, q1, p2, q2 = p, q, p1, q1
    return result


def cf_to_endo(cf: CFSeq) -> CFPiecewise:
    return CFPiecewise(cf)


def rational_cf(q: Fraction | int) -> CFSeq:
    """Euclidean expansion of a rational."""
    q = Fraction(q)
    num, den = q.numerator, q.denominator
    terms = []
    while den:
        a, r = divmod(num, den)
        terms.append(a)
        num, den = den, r
    return CFSeq.finite(terms)


def reciprocal_cf(cf: CFSeq) -> CFSeq:
    """Terms of 1/x for x > 0: prepend a zero, or drop a leading one.

    Raises:
        ValidationError: If the leading term is negative
    """
    a0 = cf.require(0)
    if a0 < 0:
        raise ValidationError("reciprocal needs a nonnegative value", details={"a0": a0})
    if a0 == 0:
        if cf.term(1) is None:
            raise ValidationError("zero has no reciprocal")
        return CFSeq.from_generator(lambda: _skip_first(cf))
    return CFSeq.from_generator(lambda: _prepend_zero(cf))


def _skip_first(cf: CFSeq):
    terms = iter(cf)
    next(terms)
    yield from terms


def _prepend_zero(cf: CFSeq):
    yield 0
    yield from cf


def integer_part(f: EndoNode, fuel: Fuel | int = DEFAULT_FUEL) -> int | Inconclusive:
    """The integer a with 0 <= f - a*x < x in the order of slopes.

    The certified interval is narrowed until it straddles at most one integer b.
    A straddled boundary is settled by signs: f - b*x positive gives b,
    negative gives b - 1, and an inconclusive difference is accepted as b only
    when (b + 1)*x - f is certified positive.

    Args:
        f: Node whose integer part is wanted
        fuel: Doubling budget for the interval and the boundary signs

    Returns:
        The integer part, or Inconclusive carrying the remaining radius
    """
    fuel = Fuel.coerce(fuel)
    c = f.c
    for k in range(fuel.max_doublings + 1):
        n = 1 << k
        value = f(n)
        low, high = (value - c) // n, (value + c) // n
        if low == high:
            return low
        if n > 2 * c:
            return _settle_boundary(f, high, fuel)
    return Inconclusive(bound=Fraction(c, n))


def _settle_boundary(f: EndoNode, b: int, fuel: Fuel) -> int | Inconclusive:
    above = sign(add(f, IntSlope(-b)), fuel)
    match above:
        case Positive():
            return b
        case Negative():
            return b - 1
    below = sign(add(IntSlope(b + 1), neg(f)), fuel)
    if isinstance(below, Positive):
        return b
    logger.debug("integer_part_boundary_unsettled", boundary=b, bound=str(above.bound))
    return Inconclusive(bound=above.bound)


def endo_to_cf(f: EndoNode, k: int, fuel: Fuel | int = DEFAULT_FUEL) -> CFExpansion:
    """Up to k continued-fraction terms of the slope of f.

    CFPiecewise nodes return their stored terms. Other nodes are read off the
    certified interval at n = 1, 2, 4, ...: every slope inside it shares the
    terms on which the expansions of both endpoints agree, so each doubling
    fixes more terms and nothing is inverted. When fuel runs out first, the
    value is tested against the rationals one term longer than the agreed
    prefix. A candidate whose difference has no sign certificate ends the
    expansion with TERMINATED and the certified magnitude of that difference;
    otherwise the status is INCONCLUSIVE with the last interval radius.

    Args:
        f: Node to expand
        k: Number of terms wanted
        fuel: Doubling budget for the interval and the final sign tests

    Returns:
        CFExpansion with the terms found and the stop status
    """
    if k < 1:
        raise ValidationError("need at least one term", details={"k": k})
    fuel = Fuel.coerce(fuel)
    if isinstance(f, CFPiecewise):
        terms = f.cf.prefix(k)
        finished = len(terms) < k or (f.cf.known_length == k)
        status = CFStatus.TERMINATED if finished else CFStatus.PREFIX
        return CFExpansion(terms=tuple(terms), status=status)

    prefix: list[int] = []
    ends: tuple[list[int], list[int]] = ([], [])
    radius = Fraction(0)
    for doubling in range(fuel.max_doublings + 1):
        interval = approx(f, 1 << doubling)
        radius = interval.radius
        ends = (_terms(interval.lower), _terms(interval.upper))
        prefix = _shared_terms(*ends)
        if len(prefix) >= k:
            return _finish(prefix[:k], CFStatus.PREFIX, None)

    for end in ends:
        if len(end) <= len(prefix):
            continue
        candidate = convergents(CFSeq.finite(end[: len(prefix) + 1]), len(prefix) + 1)[-1]
        verdict = sign(sub(f, from_rational(candidate.as_fraction())), fuel)
        if isinstance(verdict, Inconclusive):
            terms = _terms(candidate.as_fraction())
            return _finish(terms[:k], CFStatus.TERMINATED, verdict.bound)
    return _finish(prefix, CFStatus.INCONCLUSIVE, radius)


def _terms(q: Fraction) -> list[int]:
    return list(rational_cf(q))


def _shared_terms(lower: list[int], upper: list[int]) -> list[int]:
    # The last term of a finite expansion is not shared by its neighbours.
    shared = []
    for a, b in zip(lower[:-1], upper[:-1]):
        if a != b:
            break
        shared.append(a)
    return shared


def _finish(terms: list[int], status: CFStatus, bound: Fraction | None) -> CFExpansion:
    logger.debug("cf_expansion_finished", terms=len(terms), status=status.value)
    return CFExpansion(terms=tuple(terms), status=status, bound=bound)


def diagonal(rows: Sequence[CFSeq] | Callable[[int], CFSeq], n: int) -> CFSeq:
    """Sequence differing from row i at position i: |rows(i)[i]| + 1, or 1 if undefined."""
    if n < 1:
        raise ValidationError("need at least one term", details={"n": n})
    row_at = rows if callable(rows) else rows.__getitem__
    terms = []
    for i in range(n):
        term = row_at(i).term(i)
        terms.append(1 if term is None else abs(term) + 1)
    return CFSeq.finite(terms)

"""Near-endomorphism expression DAG.

Every node is an odd function Z -> Z (f(0) = 0, f(-x) = -f(x)) with a strict
additivity defect bound c computed once at construction. Values at positive
arguments are memoized per node.
"""

import bisect
import heapq
import math
import threading
from abc import ABC, abstractmethod
from fractions import Fraction

from eudoxus.core.exceptions import DefectViolationError, ValidationError
from eudoxus.core.guards import invariant_guard
from eudoxus.core.logging import get_logger
from eudoxus.models.cfseq import CFSeq
from eudoxus.models.domain import CertifiedApprox, DefectBound, SignResult

logger = get_logger(__name__)

_MISSING = object()
_memo_limit: int | None = None


def configure_memo(max_entries: int | None) -> None:
    """Cap every node's memo; None means unbounded."""
    global _memo_limit
    _memo_limit = max_entries


class EndoNode(ABC):
    """One near-endomorphism, immutable apart from its memo and sign certificate."""

    kind = "node"

    def __init__(self) -> None:
        self._memo: dict[int, int] = {}
        self._lock = threading.Lock()
        # Decisive sign verdict, recorded by real_ops.sign.
        self.certificate: SignResult | None = None
        self.monotone = self._is_monotone()
        self.defect = DefectBound(c=self._defect())

    @property
    def c(self) -> int:
        return self.defect.c

    @property
    def children(self) -> tuple["EndoNode", ...]:
        return ()

    def __call__(self, x: int) -> int:
        if x > 0:
            return self._positive(x)
        if x < 0:
            return -self._positive(-x)
        return 0

    def _positive(self, x: int) -> int:
        value = self._memo.get(x, _MISSING)
        if value is _MISSING:
            value = self._evaluate(x)
            with self._lock:
                self._memo[x] = value
                if _memo_limit is not None and len(self._memo) > _memo_limit:
                    self._evict(_memo_limit)
        return value

    def _evict(self, limit: int) -> None:
        surplus = len(self._memo) - limit * 3 // 4
        for key in heapq.nlargest(surplus, self._memo):
            del self._memo[key]

    @abstractmethod
    def _evaluate(self, x: int) -> int:
        """Value at x > 0."""

    @abstractmethod
    def _defect(self) -> int:
        """Strict defect bound; children are already built."""

    def _is_monotone(self) -> bool:
        """True when the node is nondecreasing on the positive integers."""
        return False


class IntSlope(EndoNode):
    kind = "int_slope"

    def __init__(self, k: int):
        self.k = k
        super().__init__()

    def _evaluate(self, x: int) -> int:
        return self.k * x

    def _defect(self) -> int:
        return 1

    def _is_monotone(self) -> bool:
        return self.k >= 0

    def __repr__(self) -> str:
        return f"IntSlope({self.k})"


class RatSlope(EndoNode):
    """x -> floor(p*x/q) for x > 0, stored in lowest terms."""

    kind = "rat_slope"

    def __init__(self, p: int, q: int):
        with invariant_guard(
            q, lambda d: d < 1, ValidationError("denominator must be positive", details={"q": q})
        ):
            g = math.gcd(p, q)
        self.p, self.q = p // g, q // g
        super().__init__()

    @property
    def slope(self) -> Fraction:
        return Fraction(self.p, self.q)

    def _evaluate(self, x: int) -> int:
        return self.p * x // self.q

    def _defect(self) -> int:
        return 2

    def _is_monotone(self) -> bool:
        return self.p >= 0

    def __repr__(self) -> str:
        return f"RatSlope({self.p}, {self.q})"


class CFPiecewise(EndoNode):
    """x -> floor(P_n*x/Q_n) where Q_n <= x < Q_{n+1}.

    Past the end of a finite continued fraction the last convergent is used for
    every larger x.
    """

    kind = "cf_piecewise"

    def __init__(self, cf: CFSeq):
        a0 = cf.term(0)
        if a0 is None:
            raise ValidationError("continued fraction has no terms")
        self.cf = cf
        self._p = [a0]
        self._q = [1]
        self._previous = (1, 0)
        self._extend_lock = threading.Lock()
        super().__init__()

    def _extend(self, x: int) -> None:
        with self._extend_lock:
            while self._q[-1] <= x:
                term = self.cf.term(len(self._q))
                if term is None:
                    return
                p1, q1 = self._previous
                p, q = self._p[-1], self._q[-1]
                self._previous = (p, q)
                self._p.append(term * p + p1)
                self._q.append(term * q + q1)

    def _evaluate(self, x: int) -> int:
        if self._q[-1] <= x:
            self._extend(x)
        n = bisect.bisect_right(self._q, x) - 1
        return self._p[n] * x // self._q[n]

    def _defect(self) -> int:
        return 4

    def _is_monotone(self) -> bool:
        return self._p[0] >= 0

    def __repr__(self) -> str:
        return f"CFPiecewise({self.cf})"


class Sum(EndoNode):
    kind = "sum"

    def __init__(self, left: EndoNode, right: EndoNode):
        self.left, self.right = left, right
        super().__init__()

    @property
    def children(self) -> tuple[EndoNode, ...]:
        return (self.left, self.right)

    def _evaluate(self, x: int) -> int:
        return self.left(x) + self.right(x)

    def _defect(self) -> int:
        return self.left.c + self.right.c

    def _is_monotone(self) -> bool:
        return self.left.monotone and self.right.monotone

    def __repr__(self) -> str:
        return f"Sum({self.left!r}, {self.right!r})"


class Neg(EndoNode):
    kind = "neg"

    def __init__(self, inner: EndoNode):
        self.inner = inner
        super().__init__()

    @property
    def children(self) -> tuple[EndoNode, ...]:
        return (self.inner,)

    def _evaluate(self, x: int) -> int:
        return -self.inner(x)

    def _defect(self) -> int:
        return self.inner.c

    def __repr__(self) -> str:
        return f"Neg({self.inner!r})"


class Compose(EndoNode):
    """outer(inner(x))."""

    kind = "compose"

    def __init__(self, outer: EndoNode, inner: EndoNode):
        self.outer, self.inner = outer, inner
        super().__init__()

    @property
    def children(self) -> tuple[EndoNode, ...]:
        return (self.outer, self.inner)

    def _evaluate(self, x: int) -> int:
        return self.outer(self.inner(x))

    def _defect(self) -> int:
        cf, cg = self.outer.c, self.inner.c
        return 2 * cf + cg * (abs(self.outer(1)) + cf) + 1

    def _is_monotone(self) -> bool:
        return self.outer.monotone and self.inner.monotone

    def __repr__(self) -> str:
        return f"Compose({self.outer!r}, {self.inner!r})"


class Inverse(EndoNode):
    """Least preimage of a node certified positive.

    For x > 0 the value is a y with inner(y) >= x > inner(y - 1). Monotone inner
    nodes have exactly one such crossing. Otherwise the least crossing within
    `window` steps below the one found by bisection is taken.
    """

    kind = "inverse"

    def __init__(
        self,
        inner: EndoNode,
        slope_floor: Fraction,
        slope_ceiling: Fraction | None = None,
    ):
        with invariant_guard(
            slope_floor,
            lambda s: s <= 0,
            ValidationError(
                "inverse needs a positive slope floor", details={"slope_floor": str(slope_floor)}
            ),
        ):
            self.slope_floor = Fraction(slope_floor)
        if slope_ceiling is not None and slope_ceiling < slope_floor:
            raise ValidationError(
                "slope ceiling below slope floor",
                details={"slope_floor": str(slope_floor), "slope_ceiling": str(slope_ceiling)},
            )
        self.inner = inner
        self.slope_ceiling = None if slope_ceiling is None else Fraction(slope_ceiling)
        self.window = math.ceil((2 * inner.c + abs(inner(1))) / self.slope_floor) + 2
        super().__init__()

    @property
    def children(self) -> tuple[EndoNode, ...]:
        return (self.inner,)

    def _evaluate(self, x: int) -> int:
        f = self.inner
        lo, hi = 0, max(1, math.ceil((x + f.c) / self.slope_floor))
        while f(hi) < x:
            lo, hi = hi, hi * 2
        if self.slope_ceiling is not None:
            guess = math.floor((x - f.c - 1) / self.slope_ceiling)
            if lo < guess < hi and f(guess) < x:
                lo = guess
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if f(mid) >= x:
                hi = mid
            else:
                lo = mid
        if f.monotone:
            return hi
        return self._least_crossing(x, hi)

    def _least_crossing(self, x: int, y: int) -> int:
        f, least = self.inner, y
        for z in range(y - 1, max(y - self.window, 0), -1):
            if f(z) >= x > f(z - 1):
                least = z
        return least

    def _defect(self) -> int:
        f = self.inner
        return math.ceil((5 * f.c + 2 * abs(f(1))) / self.slope_floor) + 2

    def _is_monotone(self) -> bool:
        return self.inner.monotone

    def __repr__(self) -> str:
        return f"Inverse({self.inner!r}, {self.slope_floor})"


def evaluate(node: EndoNode, x: int) -> int:
    """Value of `node` at `x`."""
    return node(x)


def defect_bound(node: EndoNode) -> DefectBound:
    return node.defect


def approx(node: EndoNode, n: int) -> CertifiedApprox:
    """Interval [f(n)/n - c/n, f(n)/n + c/n], which contains the slope of `node`.

    Args:
        node: Node to approximate
        n: Evaluation point, at least 1

    Returns:
        CertifiedApprox centred on f(n)/n with radius c/n

    Raises:
        ValidationError: If n < 1
    """
    if n < 1:
        raise ValidationError("approximation point must be positive", details={"n": n})
    return CertifiedApprox(value=Fraction(node(n), n), radius=Fraction(node.c, n))


def certify_defect(node: EndoNode, range_bound: int) -> int:
    """Largest |f(a+b) - f(a) - f(b)| over |a|, |b| <= range_bound.

    Odd symmetry and commutativity reduce the scan to |a| <= b.

    Args:
        node: Node to check
        range_bound: Scan radius, at least 1

    Returns:
        The maximum observed defect, strictly below the node's bound

    Raises:
        ValidationError: If range_bound < 1
        DefectViolationError: If some pair reaches the claimed bound
    """
    if range_bound < 1:
        raise ValidationError("range bound must be positive", details={"range": range_bound})
    values = [node(x) for x in range(2 * range_bound + 1)]
    worst, worst_pair = 0, (0, 0)
    for a in range(-range_bound, range_bound + 1):
        fa = values[a] if a >= 0 else -values[-a]
        for b in range(abs(a), range_bound + 1):
            d = abs(values[a + b] - fa - values[b])
            if d > worst:
                worst, worst_pair = d, (a, b)
    logger.debug("defect_certified", node=repr(node), observed=worst, bound=node.c)
    if worst >= node.c:
        raise DefectViolationError(
            f"observed defect {worst} reaches the claimed bound {node.c}",
            details={"a": worst_pair[0], "b": worst_pair[1], "defect": worst, "bound": node.c},
        )
    return worst

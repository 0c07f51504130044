"""Continued-fraction term sequences, finite or lazily generated."""

import itertools
import threading
from typing import Callable, Iterable, Iterator, Sequence

from eudoxus.core.exceptions import FiniteExhaustedError, ValidationError
from eudoxus.core.guards import raise_if_exhausted_guard

# Terms shown before the ellipsis when a generated sequence is printed.
_PREVIEW_TERMS = 8


class CFSeq:
    """Terms a0; a1, a2, ... of a simple continued fraction.

    a0 is any integer, every later term is at least 1. Generated sequences are
    pulled from a factory on demand and cached, so every reader sees the same
    prefix no matter which thread forced it.
    """

    __slots__ = ("_cache", "_source", "_exhausted", "_lock", "_head", "_period")

    def __init__(
        self,
        terms: Iterable[int] = (),
        *,
        factory: Callable[[], Iterator[int]] | None = None,
    ):
        self._cache: list[int] = []
        self._lock = threading.Lock()
        self._head: tuple[int, ...] | None = None
        self._period: tuple[int, ...] = ()
        if factory is None:
            for term in terms:
                self._append(term)
            self._source: Iterator[int] | None = None
            self._exhausted = True
        else:
            self._source = factory()
            self._exhausted = False

    @classmethod
    def finite(cls, terms: Sequence[int]) -> "CFSeq":
        seq = cls(terms)
        seq._head = tuple(terms)
        return seq

    @classmethod
    def periodic(cls, head: Sequence[int], period: Sequence[int]) -> "CFSeq":
        """`cf[a0; h1, .., (b1, .., bk)*]`; an empty period gives a finite sequence."""
        if not period:
            return cls.finite(head)
        if not head:
            raise ValidationError("continued fraction needs a leading term")
        head_terms, period_terms = tuple(head), tuple(period)
        seq = cls(factory=lambda: itertools.chain(head_terms, itertools.cycle(period_terms)))
        seq._head, seq._period = head_terms, period_terms
        for index, term in enumerate(head_terms + period_terms):
            _check_term(index, term)
        return seq

    @classmethod
    def from_generator(cls, factory: Callable[[], Iterator[int]]) -> "CFSeq":
        return cls(factory=factory)

    def _append(self, term: int) -> None:
        _check_term(len(self._cache), term)
        self._cache.append(term)

    def _fill(self, count: int) -> None:
        if len(self._cache) >= count or self._exhausted:
            return
        with self._lock:
            while len(self._cache) < count and not self._exhausted:
                try:
                    self._append(next(self._source))
                except StopIteration:
                    self._exhausted = True

    def term(self, index: int) -> int | None:
        """The index-th term, or None past the end of a finite sequence."""
        self._fill(index + 1)
        if index < len(self._cache):
            return self._cache[index]
        return None

    def require(self, index: int) -> int:
        with raise_if_exhausted_guard(
            FiniteExhaustedError(
                f"continued fraction has fewer than {index + 1} terms",
                details={"available": len(self._cache), "requested": index + 1},
            )
        ):
            self._fill(index + 1)
            return self._cache[index]

    def prefix(self, count: int) -> list[int]:
        """Up to `count` leading terms; shorter only when the sequence is finite."""
        self._fill(count)
        return self._cache[:count]

    @property
    def known_length(self) -> int | None:
        """Length of a finite sequence, None while more terms may follow."""
        return len(self._cache) if self._exhausted else None

    def __iter__(self) -> Iterator[int]:
        index = 0
        while (term := self.term(index)) is not None:
            yield term
            index += 1

    def __str__(self) -> str:
        if self._head is not None:
            return format_cf(self._head, self._period)
        terms = self.prefix(_PREVIEW_TERMS + 1)
        text = format_cf(terms[:_PREVIEW_TERMS])
        if len(terms) > _PREVIEW_TERMS:
            text = text[:-1] + ",...]"
        return text

    def __repr__(self) -> str:
        return f"CFSeq({self})"


def _check_term(index: int, term: int) -> None:
    if isinstance(term, bool) or not isinstance(term, int):
        raise ValidationError(
            f"continued-fraction term {index} must be an integer", details={"term": repr(term)}
        )
    if index >= 1 and term < 1:
        raise ValidationError(
            f"continued-fraction term {index} must be positive",
            details={"index": index, "term": term},
        )


def format_cf(head: Sequence[int], period: Sequence[int] = ()) -> str:
    """Render terms in the `cf[a0;a1,...,(b1,...)*]` text format."""
    if not head:
        return "cf[]"
    first, *rest = head
    parts = [str(t) for t in rest]
    if period:
        parts.append("(" + ",".join(str(t) for t in period) + ")*")
    return f"cf[{first};{','.join(parts)}]" if parts else f"cf[{first}]"

"""Partitions, rational GL_n weights, and bounded partition enumeration."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import Iterable, Iterator, Sequence

from .errors import LengthOverflow, NotDecreasing, ParseError


@total_ordering
class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))`` (and also the plain tuple ``(2, 1)``).
    Partitions are ordered by size first, then lexicographically.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if type(parts) is cls:
            return parts
        parts = tuple(int(p) for p in parts)
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        parts = parts[:end]
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise NotDecreasing(f"parts are not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"partition parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    def length(self) -> int:
        return len(self)

    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def contains(self, other: Sequence[int]) -> bool:
        """Young diagram containment: ``other`` fits inside ``self``."""
        if len(other) > len(self):
            return False
        return all(o <= s for o, s in zip(other, self))

    def __lt__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        return (sum(self), tuple(self)) < (sum(other), tuple(other))

    def __eq__(self, other):
        return tuple.__eq__(self, other)

    def __hash__(self):
        return tuple.__hash__(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"


EMPTY = Partition()


def conjugate(parts: Sequence[int]) -> Partition:
    """Transpose of the Young diagram."""
    if not parts:
        return EMPTY
    return Partition(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def rectangle(rows: int, cols: int) -> Partition:
    return Partition((cols,) * rows if cols else ())


def combine(alpha: Sequence[int], beta: Sequence[int], n: int) -> tuple[int, ...]:
    """Weakly decreasing n-tuple ``(alpha, 0, ..., 0, -reversed(beta))``."""
    alpha, beta = Partition(alpha), Partition(beta)
    if len(alpha) + len(beta) > n:
        raise LengthOverflow(
            f"l({alpha}) + l({beta}) = {len(alpha) + len(beta)} exceeds n = {n}"
        )
    zeros = n - len(alpha) - len(beta)
    return tuple(alpha) + (0,) * zeros + tuple(-b for b in reversed(beta))


def split(w: Sequence[int]) -> GlWeight:
    """Inverse of :func:`combine`; ``n`` is the tuple length."""
    w = tuple(int(x) for x in w)
    for a, b in zip(w, w[1:]):
        if b > a:
            raise NotDecreasing(f"weight is not weakly decreasing: {list(w)}")
    plus = Partition(x for x in w if x > 0)
    minus = Partition(-x for x in reversed(w) if x < 0)
    return GlWeight(plus, minus, len(w))


@dataclass(frozen=True)
class GlWeight:
    """Highest weight of an irreducible rational GL_n representation.

    Stored as the pair (positive part, negated negative part) plus the rank.
    """

    plus: Partition
    minus: Partition
    n: int

    def __post_init__(self):
        object.__setattr__(self, "plus", Partition(self.plus))
        object.__setattr__(self, "minus", Partition(self.minus))
        if self.n < 1:
            raise ValueError(f"rank must be positive, got {self.n}")
        if len(self.plus) + len(self.minus) > self.n:
            raise LengthOverflow(
                f"l(plus) + l(minus) = {len(self.plus) + len(self.minus)} exceeds n = {self.n}"
            )

    @classmethod
    def polynomial(cls, parts: Sequence[int], n: int) -> GlWeight:
        return cls(Partition(parts), EMPTY, n)

    @classmethod
    def trivial(cls, n: int) -> GlWeight:
        return cls(EMPTY, EMPTY, n)

    def as_tuple(self) -> tuple[int, ...]:
        return combine(self.plus, self.minus, self.n)

    def dual(self) -> GlWeight:
        return GlWeight(self.minus, self.plus, self.n)

    def with_rank(self, n: int) -> GlWeight:
        return GlWeight(self.plus, self.minus, n)

    def is_trivial(self) -> bool:
        return not self.plus and not self.minus

    def depth(self) -> int:
        """Number of nonzero entries, ``l(plus) + l(minus)``."""
        return len(self.plus) + len(self.minus)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.as_tuple())) + "]"


def dual(w: GlWeight) -> GlWeight:
    return w.dual()


_LIST_RE = re.compile(r"^\s*\[\s*(.*?)\s*\]\s*$", re.S)


def parse_int_list(text: str) -> tuple[int, ...]:
    """Parse ``"[3, 1, -2]"`` (brackets required, whitespace tolerated)."""
    m = _LIST_RE.match(text)
    if m is None:
        raise ParseError(f"expected a bracketed integer list, got {text!r}")
    body = m.group(1)
    if not body:
        return ()
    try:
        return tuple(int(tok) for tok in body.split(","))
    except ValueError:
        raise ParseError(f"malformed integer list {text!r}") from None


def parse_partition(text: str) -> Partition:
    parts = parse_int_list(text)
    if any(p < 0 for p in parts):
        raise ParseError(f"partition parts must be nonnegative: {text!r}")
    return Partition(parts)


def parse_weight(text: str) -> GlWeight:
    """Parse a full n-tuple such as ``"[3,1,0,0,-2]"``; n is the tuple length."""
    w = parse_int_list(text)
    if not w:
        raise ParseError("a weight needs at least one entry")
    return split(w)


def partitions(size: int, max_length: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``size`` in reverse lexicographic order, optionally bounded."""
    if max_part is None or max_part > size:
        max_part = size
    if max_length is None:
        max_length = size

    def rec(remaining: int, cap: int, slots: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield Partition(prefix)
            return
        if slots == 0 or cap * slots < remaining:
            return
        for p in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - p, p, slots - 1, prefix + (p,))

    if size < 0:
        return
    yield from rec(size, max_part, max_length, ())


@lru_cache(maxsize=None)
def bounded_partitions(size: int, max_length: int) -> tuple[Partition, ...]:
    """Cached tuple form of ``partitions(size, max_length)``."""
    return tuple(partitions(size, max_length))


def partitions_up_to(max_size: int, max_length: int | None = None) -> Iterator[Partition]:
    for s in range(max_size + 1):
        yield from partitions(s, max_length)


def partitions_inside(shape: Sequence[int], size: int | None = None) -> Iterator[Partition]:
    """Partitions contained in ``shape``, optionally of a fixed size."""
    shape = tuple(shape)

    def rec(i: int, cap: int, prefix: tuple[int, ...], total: int):
        if size is None or total == size:
            yield Partition(prefix)
            if size is not None:
                return
        if i == len(shape):
            return
        top = min(cap, shape[i])
        if size is not None:
            top = min(top, size - total)
        for p in range(top, 0, -1):
            yield from rec(i + 1, p, prefix + (p,), total + p)

    yield from rec(0, shape[0] if shape else 0, (), 0)

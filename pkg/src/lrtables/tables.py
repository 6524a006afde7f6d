"""Exact counting and enumeration of integer contingency tables.

Tables are filled row by row. Enumeration order is reverse lexicographic on
the row-major flattening: within each cell, larger entries come first.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence


@dataclass(frozen=True)
class TableSpec:
    row_margins: tuple[int, ...]
    col_margins: tuple[int, ...]
    hollow: bool = False
    symmetric: bool = False
    entry_cap: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "row_margins", tuple(int(x) for x in self.row_margins))
        object.__setattr__(self, "col_margins", tuple(int(x) for x in self.col_margins))
        if any(x < 0 for x in self.row_margins + self.col_margins):
            raise ValueError("margins must be nonnegative")
        if self.entry_cap is not None and self.entry_cap < 0:
            raise ValueError("entry_cap must be nonnegative")
        if self.symmetric and self.row_margins != self.col_margins:
            raise ValueError("a symmetric table needs equal row and column margins")
        if self.hollow and len(self.row_margins) != len(self.col_margins):
            raise ValueError("hollow tables must be square")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_margins), len(self.col_margins)

    def feasible(self) -> bool:
        return sum(self.row_margins) == sum(self.col_margins)


def _row_fillings(
    total: int, bounds: Sequence[int], forced_zero: int | None
) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` with entry j at most ``bounds[j]``; large entries first."""
    m = len(bounds)
    suffix = [0] * (m + 1)
    for j in range(m - 1, -1, -1):
        suffix[j] = suffix[j + 1] + (0 if j == forced_zero else bounds[j])
    row = [0] * m

    def rec(j: int, left: int):
        if j == m:
            if left == 0:
                yield tuple(row)
            return
        if left > suffix[j]:
            return
        hi = 0 if j == forced_zero else min(left, bounds[j])
        lo = max(0, left - suffix[j + 1])
        for v in range(hi, lo - 1, -1):
            row[j] = v
            yield from rec(j + 1, left - v)
        row[j] = 0

    yield from rec(0, total)


def _cap(bound: int, cap: int | None) -> int:
    return bound if cap is None else min(bound, cap)


def enumerate_tables(spec: TableSpec) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield every table satisfying ``spec`` exactly once."""
    if not spec.feasible():
        return
    if spec.symmetric:
        yield from _enumerate_symmetric(spec)
        return
    rows, cols = spec.row_margins, spec.col_margins
    remaining = list(cols)
    out: list[tuple[int, ...]] = []

    def rec(i: int):
        if i == len(rows):
            if not any(remaining):
                yield tuple(out)
            return
        bounds = [_cap(c, spec.entry_cap) for c in remaining]
        for row in _row_fillings(rows[i], bounds, i if spec.hollow else None):
            for j, v in enumerate(row):
                remaining[j] -= v
            out.append(row)
            yield from rec(i + 1)
            out.pop()
            for j, v in enumerate(row):
                remaining[j] += v

    yield from rec(0)


def _enumerate_symmetric(spec: TableSpec) -> Iterator[tuple[tuple[int, ...], ...]]:
    r = len(spec.row_margins)
    matrix = [[0] * r for _ in range(r)]
    remaining = list(spec.row_margins)

    def rec(i: int):
        if i == r:
            yield tuple(tuple(row) for row in matrix)
            return
        # entries left of the diagonal are mirrored from earlier rows
        left = remaining[i]
        if spec.hollow:
            diag_options = [0]
        else:
            diag_options = range(min(left, _cap(left, spec.entry_cap)), -1, -1)
        for d in diag_options:
            matrix[i][i] = d
            bounds = [_cap(remaining[j], spec.entry_cap) for j in range(i + 1, r)]
            for tail in _row_fillings(left - d, bounds, None):
                for off, v in enumerate(tail):
                    j = i + 1 + off
                    matrix[i][j] = matrix[j][i] = v
                    remaining[j] -= v
                yield from rec(i + 1)
                for off, v in enumerate(tail):
                    j = i + 1 + off
                    matrix[i][j] = matrix[j][i] = 0
                    remaining[j] += v
        matrix[i][i] = 0

    yield from rec(0)


def count_tables(spec: TableSpec) -> int:
    """Exact number of tables satisfying ``spec``."""
    if not spec.feasible():
        return 0
    if spec.symmetric:
        return _count_symmetric(spec.row_margins, spec.hollow, spec.entry_cap)
    return _count_rect(spec.row_margins, spec.col_margins, spec.hollow, spec.entry_cap)


def _count_rect(rows: tuple[int, ...], cols: tuple[int, ...], hollow: bool, cap: int | None) -> int:
    @lru_cache(maxsize=None)
    def rec(i: int, remaining: tuple[int, ...]) -> int:
        if i == len(rows):
            return 0 if any(remaining) else 1
        bounds = [_cap(c, cap) for c in remaining]
        total = 0
        for row in _row_fillings(rows[i], bounds, i if hollow else None):
            total += rec(i + 1, tuple(c - v for c, v in zip(remaining, row)))
        return total

    return rec(0, cols)


def _count_symmetric(margins: tuple[int, ...], hollow: bool, cap: int | None) -> int:
    r = len(margins)

    @lru_cache(maxsize=None)
    def rec(i: int, remaining: tuple[int, ...]) -> int:
        if i == r:
            return 1
        left = remaining[0]
        rest = remaining[1:]
        diag_options = [0] if hollow else range(_cap(left, cap), -1, -1)
        total = 0
        for d in diag_options:
            bounds = [_cap(x, cap) for x in rest]
            for tail in _row_fillings(left - d, bounds, None):
                total += rec(i + 1, tuple(x - v for x, v in zip(rest, tail)))
        return total

    return rec(0, margins)


def derangement_count(r: int) -> int:
    """Number of fixed-point-free permutations of r letters."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    a, b = 1, 0  # !0, !1
    if r == 0:
        return a
    for k in range(2, r + 1):
        a, b = b, (k - 1) * (a + b)
    return b


def fpf_involution_count(r: int) -> int:
    """Fixed-point-free involutions of r letters: (r-1)!! for even r, else 0."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r % 2:
        return 0
    out = 1
    for k in range(r - 1, 0, -2):
        out *= k
    return out

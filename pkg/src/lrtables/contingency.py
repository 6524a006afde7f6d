"""GL_n tensor invariants as sums over hollow LR-contingency tables.

A margin vector ``mu = (mu_1, ..., mu_r)`` of rational weights places the
positive parts ``mu_i^+`` on the rows and the negative parts ``mu_j^-`` on the
columns of an r x r matrix of partitions ``L``. The weight of ``L`` is

    ||L|| = prod_i multi_lr(mu_i^+, row_i(L)) * multi_lr(mu_i^-, col_i(L))

and, once n reaches the stable threshold sum_i l(mu_i^+) + l(mu_i^-), the
dimension of GL_n-invariants in F^{mu_1} x ... x F^{mu_r} is the sum of
||L|| over hollow matrices (empty diagonal).

Search runs in two phases: integer size-tables with row sums |mu_i^+| and
column sums |mu_j^-|, then partition fillings of each cell, checking row
factors as soon as a row is complete.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DimensionMismatch, OutsideStableRange
from .lr import multi_lr
from .partition import EMPTY, GlWeight, Partition, bounded_partitions
from .tables import TableSpec, enumerate_tables


@dataclass(frozen=True)
class MarginSpec:
    """A vector of rational weights sharing one ambient rank n."""

    weights: tuple[GlWeight, ...]

    def __post_init__(self):
        weights = tuple(self.weights)
        object.__setattr__(self, "weights", weights)
        if not weights:
            raise ValueError("need at least one weight")
        ranks = {w.n for w in weights}
        if len(ranks) != 1:
            raise DimensionMismatch(f"weights have different ranks: {sorted(ranks)}")

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[Sequence[int], Sequence[int]]], n: int) -> MarginSpec:
        return cls(tuple(GlWeight(Partition(p), Partition(m), n) for p, m in pairs))

    @property
    def n(self) -> int:
        return self.weights[0].n

    @property
    def r(self) -> int:
        return len(self.weights)

    @property
    def plus(self) -> tuple[Partition, ...]:
        return tuple(w.plus for w in self.weights)

    @property
    def minus(self) -> tuple[Partition, ...]:
        return tuple(w.minus for w in self.weights)

    def stable_threshold(self) -> int:
        return sum(w.depth() for w in self.weights)

    def in_stable_range(self) -> bool:
        return self.n >= self.stable_threshold()

    def with_rank(self, n: int) -> MarginSpec:
        return MarginSpec(tuple(w.with_rank(n) for w in self.weights))

    def dual(self) -> MarginSpec:
        return MarginSpec(tuple(w.dual() for w in self.weights))

    def permuted(self, order: Sequence[int]) -> MarginSpec:
        return MarginSpec(tuple(self.weights[i] for i in order))


@dataclass(frozen=True)
class PartitionMatrix:
    cells: tuple[tuple[Partition, ...], ...]

    def __post_init__(self):
        cells = tuple(tuple(Partition(c) for c in row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        if any(len(row) != len(cells) for row in cells):
            raise DimensionMismatch("partition matrix must be square")

    @classmethod
    def empty(cls, r: int) -> PartitionMatrix:
        return cls(tuple((EMPTY,) * r for _ in range(r)))

    @property
    def r(self) -> int:
        return len(self.cells)

    def row(self, i: int) -> tuple[Partition, ...]:
        return self.cells[i]

    def col(self, j: int) -> tuple[Partition, ...]:
        return tuple(row[j] for row in self.cells)

    def hollow(self) -> bool:
        return all(not self.cells[i][i] for i in range(self.r))

    def symmetric(self) -> bool:
        return all(
            self.cells[i][j] == self.cells[j][i]
            for i in range(self.r)
            for j in range(i + 1, self.r)
        )

    def size_table(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sum(c) for c in row) for row in self.cells)

    def to_lists(self) -> list[list[list[int]]]:
        return [[list(c) for c in row] for row in self.cells]


def table_norm(table: PartitionMatrix, margins: MarginSpec) -> int:
    """Product of the row and column multiplicities of ``table``."""
    if table.r != margins.r:
        raise DimensionMismatch(f"table is {table.r}x{table.r} but there are {margins.r} margins")
    out = 1
    for i, w in enumerate(margins.weights):
        out *= multi_lr(w.plus, table.row(i))
        if not out:
            return 0
    for j, w in enumerate(margins.weights):
        out *= multi_lr(w.minus, table.col(j))
        if not out:
            return 0
    return out


def _size_tables(margins: MarginSpec, hollow: bool) -> Iterator[tuple[tuple[int, ...], ...]]:
    spec = TableSpec(
        tuple(sum(p) for p in margins.plus),
        tuple(sum(m) for m in margins.minus),
        hollow=hollow,
    )
    return enumerate_tables(spec)


def _fillings(
    sizes: tuple[tuple[int, ...], ...], margins: MarginSpec
) -> Iterator[tuple[PartitionMatrix, int]]:
    r = margins.r
    plus, minus = margins.plus, margins.minus
    rows: list[tuple[Partition, ...]] = []

    def cell_options(i: int, j: int) -> tuple[Partition, ...]:
        return bounded_partitions(sizes[i][j], min(len(plus[i]), len(minus[j])))

    def rec(i: int, weight: int):
        if i == r:
            table = PartitionMatrix(tuple(rows))
            w = weight
            for j in range(r):
                w *= multi_lr(minus[j], table.col(j))
                if not w:
                    return
            yield table, w
            return
        options = [cell_options(i, j) for j in range(r)]
        for row in itertools.product(*options):
            c = multi_lr(plus[i], row)
            if not c:
                continue
            rows.append(row)
            yield from rec(i + 1, weight * c)
            rows.pop()

    yield from rec(0, 1)


def enumerate_lrct(margins: MarginSpec, hollow: bool = True) -> Iterator[tuple[PartitionMatrix, int]]:
    """Yield ``(table, norm)`` for every LR-contingency table with these margins.

    Cell (i, j) is restricted to partitions of length at most
    ``min(l(mu_i^+), l(mu_j^-))``; no other table can have nonzero norm.
    """
    for sizes in _size_tables(margins, hollow):
        yield from _fillings(sizes, margins)


def check_stable(margins: MarginSpec) -> None:
    if not margins.in_stable_range():
        t = margins.stable_threshold()
        raise OutsideStableRange(
            f"n = {margins.n} is below the stable threshold "
            f"sum l(mu_i^+) + l(mu_i^-) = {t}",
            threshold=t,
            n=margins.n,
        )


def _sum_branch(args: tuple[tuple[tuple[int, ...], ...], MarginSpec]) -> tuple[int, int]:
    sizes, margins = args
    total = count = 0
    for _, w in _fillings(sizes, margins):
        total += w
        count += 1
    return total, count


def lrc_zero_with_count(margins: MarginSpec, jobs: int = 1) -> tuple[int, int]:
    """Return ``(invariant dimension, number of contributing tables)``."""
    check_stable(margins)
    branches = [(sizes, margins) for sizes in _size_tables(margins, hollow=True)]
    if jobs > 1 and len(branches) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sum_branch, branches, chunksize=max(1, len(branches) // (4 * jobs))))
    else:
        results = [_sum_branch(b) for b in branches]
    return sum(v for v, _ in results), sum(c for _, c in results)


def lrc_zero(margins: MarginSpec, jobs: int = 1) -> int:
    """Dimension of GL_n-invariants in the tensor product of the margin weights.

    Raises :class:`OutsideStableRange` when n is below the stable threshold.
    """
    return lrc_zero_with_count(margins, jobs)[0]


def extended_margins(target: GlWeight, margins: MarginSpec) -> MarginSpec:
    """Prepend the dual of ``target``: [F^target : X] = dim (F^target* x X)^GL_n."""
    if target.n != margins.n:
        raise DimensionMismatch(f"target rank {target.n} differs from margin rank {margins.n}")
    return MarginSpec((target.dual(),) + margins.weights)


def lrc_general(target: GlWeight, margins: MarginSpec, jobs: int = 1) -> int:
    """Multiplicity of F^target in the tensor product of the margin weights."""
    return lrc_zero(extended_margins(target, margins), jobs)


def hom_margins(sources: Sequence[Sequence[int]], targets: Sequence[Sequence[int]], n: int) -> MarginSpec:
    """Margins whose invariants are Hom(x F^sources, x F^targets)."""
    pairs = [((), s) for s in sources] + [(t, ()) for t in targets]
    return MarginSpec.from_pairs(pairs, n)


def hom_dimension(
    sources: Sequence[Sequence[int]], targets: Sequence[Sequence[int]], n: int, jobs: int = 1
) -> int:
    """dim Hom_GL_n(F^{s_1} x ... x F^{s_r}, F^{t_1} x ... x F^{t_s}) for partition labels."""
    return lrc_zero(hom_margins(sources, targets, n), jobs)

"""O_n and Sp_2n tensor invariants via hollow symmetric LR-contingency tables.

For partition margins ``mu = (mu_1, ..., mu_r)`` and n >= 2 * sum_i l(mu_i),

    dim (E^{mu_1} x ... x E^{mu_r})^{O_n} = dim (V^{mu_1} x ... x V^{mu_r})^{Sp_2n}
        = sum over hollow symmetric L of prod_i multi_lr(mu_i, row_i(L)).

Only the upper triangle of L is searched; the lower triangle is its mirror.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .contingency import PartitionMatrix
from .errors import DimensionMismatch, NotSymmetric, OutsideStableRange
from .lr import multi_lr
from .partition import EMPTY, Partition, bounded_partitions
from .tables import TableSpec, enumerate_tables

GROUPS = {"o": "O_n", "sp": "Sp_2n"}


@dataclass(frozen=True)
class SymMarginSpec:
    partitions: tuple[Partition, ...]
    n: int

    def __post_init__(self):
        parts = tuple(Partition(p) for p in self.partitions)
        object.__setattr__(self, "partitions", parts)
        if not parts:
            raise ValueError("need at least one margin")
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")

    @property
    def r(self) -> int:
        return len(self.partitions)

    def stable_threshold(self) -> int:
        return 2 * sum(len(p) for p in self.partitions)

    def in_stable_range(self) -> bool:
        # implies mu'(1) + mu'(2) <= n for every label, so O_n labels are valid
        return self.n >= self.stable_threshold()

    def with_rank(self, n: int) -> SymMarginSpec:
        return SymMarginSpec(self.partitions, n)

    def permuted(self, order: Sequence[int]) -> SymMarginSpec:
        return SymMarginSpec(tuple(self.partitions[i] for i in order), self.n)


def sym_table_norm(table: PartitionMatrix, margins: SymMarginSpec) -> int:
    """Product of the row multiplicities of a symmetric table."""
    if table.r != margins.r:
        raise DimensionMismatch(f"table is {table.r}x{table.r} but there are {margins.r} margins")
    if not table.symmetric():
        raise NotSymmetric("table is not symmetric")
    out = 1
    for i, mu in enumerate(margins.partitions):
        out *= multi_lr(mu, table.row(i))
        if not out:
            return 0
    return out


def enumerate_sym_lrct(margins: SymMarginSpec) -> Iterator[tuple[PartitionMatrix, int]]:
    """Yield ``(table, norm)`` for hollow symmetric tables with nonzero norm."""
    mus = margins.partitions
    r = margins.r
    sizes = tuple(sum(mu) for mu in mus)
    spec = TableSpec(sizes, sizes, hollow=True, symmetric=True)
    for size_table in enumerate_tables(spec):
        cells = [[EMPTY] * r for _ in range(r)]

        def rec(i: int, weight: int):
            if i == r:
                table = PartitionMatrix(tuple(tuple(row) for row in cells))
                assert _column_norm(table, mus) == weight
                yield table, weight
                return
            options = [
                bounded_partitions(size_table[i][j], min(len(mus[i]), len(mus[j])))
                for j in range(i + 1, r)
            ]
            for tail in itertools.product(*options):
                for off, lam in enumerate(tail):
                    cells[i][i + 1 + off] = cells[i + 1 + off][i] = lam
                c = multi_lr(mus[i], cells[i])
                if c:
                    yield from rec(i + 1, weight * c)
            for j in range(i + 1, r):
                cells[i][j] = cells[j][i] = EMPTY

        yield from rec(0, 1)


def _column_norm(table: PartitionMatrix, mus: Sequence[Partition]) -> int:
    out = 1
    for j, mu in enumerate(mus):
        out *= multi_lr(mu, table.col(j))
    return out


def check_stable(margins: SymMarginSpec, group: str = "o") -> None:
    if group not in GROUPS:
        raise ValueError(f"group must be one of {sorted(GROUPS)}, got {group!r}")
    if not margins.in_stable_range():
        t = margins.stable_threshold()
        n = margins.n
        # both groups share the parameter n; for Sp it is the rank, so the matrix size is 2n
        concrete = f"O_{n}" if group == "o" else f"Sp_{2 * n}"
        raise OutsideStableRange(
            f"{GROUPS[group]} ({concrete}): n = {n} is below the stable threshold "
            f"2 * sum l(mu_i) = {t}",
            threshold=t,
            n=margins.n,
        )


def osp_invariant_dim_with_count(margins: SymMarginSpec, group: str = "o") -> tuple[int, int]:
    check_stable(margins, group)
    total = count = 0
    for _, w in enumerate_sym_lrct(margins):
        total += w
        count += 1
    return total, count


def osp_invariant_dim(margins: SymMarginSpec, group: str = "o") -> int:
    """dim of O_n (group "o") or Sp_2n (group "sp") invariants; the value is the same."""
    return osp_invariant_dim_with_count(margins, group)[0]


def o_invariant_dim(margins: SymMarginSpec) -> int:
    return osp_invariant_dim(margins, "o")


def sp_invariant_dim(margins: SymMarginSpec) -> int:
    return osp_invariant_dim(margins, "sp")

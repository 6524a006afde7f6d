"""Littlewood-Richardson coefficients and Schur function products.

Tableaux are built one letter at a time: the ``k``-th letter of the content
is added as a horizontal strip, subject to the lattice-word condition

    #(letter i in rows <= r) <= #(letter i-1 in rows <= r-1)

which, for semistandard fillings, is equivalent to the reverse reading word
being a lattice word. Search states that share the same shape and the same
row distribution of the last letter are merged, so counts are carried as
multiplicities instead of enumerating tableaux one by one.
"""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterator, Sequence

from .partition import EMPTY, Partition

Shape = tuple[int, ...]


class ExpansionMap(dict):
    """Sparse ``Partition -> int`` map with no zero entries."""

    def add(self, key: Sequence[int], coeff: int) -> None:
        if not coeff:
            return
        key = Partition(key)
        value = self.get(key, 0) + coeff
        if value:
            self[key] = value
        else:
            del self[key]

    def total(self) -> int:
        return sum(self.values())

    def sorted_items(self) -> list[tuple[Partition, int]]:
        return sorted(self.items())


def _strips(
    shape: Shape,
    k: int,
    prev: Shape | None,
    outer: Shape | None,
    max_length: int | None,
) -> Iterator[tuple[Shape, Shape]]:
    """Yield (new shape, boxes added per row) for lattice horizontal strips."""
    nrows = len(shape) + 1
    if max_length is not None:
        nrows = min(nrows, max_length)
    if outer is not None:
        nrows = min(nrows, len(outer))
    if k == 0:
        yield shape, ()
        return
    if prev is not None:
        prev_cum = [0]
        for c in prev:
            prev_cum.append(prev_cum[-1] + c)
    added = [0] * nrows

    def rec(r: int, left: int, cum: int):
        if left == 0:
            new = list(shape) + [0] * (nrows - len(shape))
            for i, a in enumerate(added):
                new[i] += a
            counts = list(added)
            while counts and counts[-1] == 0:
                counts.pop()
            while new and new[-1] == 0:
                new.pop()
            yield tuple(new), tuple(counts)
            return
        if r == nrows:
            return
        cur = shape[r] if r < len(shape) else 0
        top = left
        if r > 0:
            top = min(top, shape[r - 1] - cur)
        if outer is not None:
            top = min(top, outer[r] - cur)
        if prev is not None:
            allowed = prev_cum[min(r, len(prev))] - cum
            top = min(top, allowed)
        for a in range(top, -1, -1):
            added[r] = a
            yield from rec(r + 1, left - a, cum + a)
        added[r] = 0

    yield from rec(0, k, 0)


def _lr_expand(
    base: Shape,
    content: Shape,
    outer: Shape | None = None,
    max_length: int | None = None,
) -> dict[Shape, int]:
    if max_length is not None and len(base) > max_length:
        return {}
    states: dict[tuple[Shape, Shape | None], int] = {(base, None): 1}
    for k in content:
        nxt: dict[tuple[Shape, Shape | None], int] = defaultdict(int)
        for (shape, prev), mult in states.items():
            for new_shape, counts in _strips(shape, k, prev, outer, max_length):
                nxt[(new_shape, counts)] += mult
        states = nxt
        if not states:
            return {}
    out: dict[Shape, int] = defaultdict(int)
    for (shape, _), mult in states.items():
        out[shape] += mult
    return out


def _canonical_pair(mu: Partition, nu: Partition) -> tuple[Partition, Partition]:
    return (mu, nu) if not nu < mu else (nu, mu)


@lru_cache(maxsize=None)
def _lr_cached(lam: Shape, mu: Shape, nu: Shape) -> int:
    return _lr_expand(mu, nu, outer=lam, max_length=len(lam)).get(lam, 0)


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """The Littlewood-Richardson coefficient c^lam_{mu, nu}.

    Counts LR tableaux of skew shape lam/mu with content nu. Returns 0 when
    sizes do not add up or mu is not contained in lam.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if not lam.contains(mu) or not lam.contains(nu):
        return 0
    a, b = _canonical_pair(mu, nu)
    return _lr_cached(tuple(lam), tuple(a), tuple(b))


@lru_cache(maxsize=None)
def _product_cached(mu: Shape, nu: Shape, max_length: int | None) -> tuple[tuple[Shape, int], ...]:
    # fewer content rows means fewer strip rounds
    if len(nu) > len(mu):
        mu, nu = nu, mu
    return tuple(sorted(_lr_expand(mu, nu, max_length=max_length).items()))


def schur_product(
    mu: Sequence[int], nu: Sequence[int], max_length: int | None = None
) -> ExpansionMap:
    """Expand s_mu * s_nu, keeping only shapes with at most ``max_length`` rows."""
    mu, nu = Partition(mu), Partition(nu)
    a, b = _canonical_pair(mu, nu)
    out = ExpansionMap()
    for shape, c in _product_cached(tuple(a), tuple(b), max_length):
        out[Partition(shape)] = c
    return out


def pieri_row(mu: Sequence[int], k: int, max_length: int | None = None) -> ExpansionMap:
    """s_mu * s_(k): add a horizontal strip of k boxes."""
    mu = tuple(Partition(mu))
    out = ExpansionMap()
    nrows = len(mu) + 1 if max_length is None else min(len(mu) + 1, max_length)
    if len(mu) > nrows:
        return out
    new = list(mu) + [0] * (nrows - len(mu))

    def rec(r: int, left: int):
        if left == 0:
            out.add(new, 1)
            return
        if r == nrows:
            return
        room = left if r == 0 else min(left, mu[r - 1] - (mu[r] if r < len(mu) else 0))
        for a in range(room, -1, -1):
            new[r] += a
            rec(r + 1, left - a)
            new[r] -= a

    rec(0, k)
    return out


def pieri_column(mu: Sequence[int], k: int, max_length: int | None = None) -> ExpansionMap:
    """s_mu * s_(1^k): add a vertical strip of k boxes."""
    mu = tuple(Partition(mu))
    out = ExpansionMap()
    nrows = len(mu) + k
    if max_length is not None:
        nrows = min(nrows, max_length)
    if len(mu) > nrows:
        return out
    base = list(mu) + [0] * (nrows - len(mu))
    new = list(base)

    def rec(r: int, left: int):
        if left == 0:
            out.add(new, 1)
            return
        if nrows - r < left:
            return
        # a box in row r needs the row above to stay at least as long
        if r == 0 or new[r - 1] >= base[r] + 1:
            new[r] += 1
            rec(r + 1, left - 1)
            new[r] -= 1
        rec(r + 1, left)

    rec(0, k)
    return out


def _fold(target: Partition, factors: Sequence[Partition]) -> int:
    if not factors:
        return 1 if not target else 0
    cap = len(target)
    current: dict[Shape, int] = {(): 1}
    for nu in factors[:-1]:
        nxt: dict[Shape, int] = defaultdict(int)
        for kappa, mult in current.items():
            for lam, c in _product_cached(*_ordered(kappa, tuple(nu)), cap):
                if target.contains(lam):
                    nxt[lam] += mult * c
        current = nxt
        if not current:
            return 0
    last = factors[-1]
    return sum(mult * lr_coefficient(target, kappa, last) for kappa, mult in current.items())


def _ordered(a: Shape, b: Shape) -> tuple[Shape, Shape]:
    pa, pb = Partition(a), Partition(b)
    x, y = _canonical_pair(pa, pb)
    return tuple(x), tuple(y)


@lru_cache(maxsize=None)
def _multi_lr_cached(target: Shape, factors: tuple[Shape, ...]) -> int:
    return _fold(Partition(target), [Partition(f) for f in factors])


def multi_lr(target: Sequence[int], factors: Sequence[Sequence[int]]) -> int:
    """Multiplicity of s_target in the product of s_f over ``factors``."""
    target = Partition(target)
    parts = [Partition(f) for f in factors]
    if sum(target) != sum(map(sum, parts)):
        return 0
    parts = [f for f in parts if f]
    if any(len(f) > len(target) for f in parts):
        return 0
    parts.sort(reverse=True)
    return _multi_lr_cached(target, tuple(parts))


def multi_lr_in_order(target: Sequence[int], factors: Sequence[Sequence[int]]) -> int:
    """Uncached :func:`multi_lr` that folds the factors in the order given."""
    target = Partition(target)
    parts = [Partition(f) for f in factors]
    if sum(target) != sum(sum(f) for f in parts):
        return 0
    return _fold(target, parts)


def clear_caches() -> None:
    _lr_cached.cache_clear()
    _product_cached.cache_clear()
    _multi_lr_cached.cache_clear()


__all__ = [
    "EMPTY",
    "ExpansionMap",
    "clear_caches",
    "lr_coefficient",
    "multi_lr",
    "multi_lr_in_order",
    "pieri_column",
    "pieri_row",
    "schur_product",
]

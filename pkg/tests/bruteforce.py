"""Slow, obviously-correct reference computations used only by the tests.

Nothing here imports the package's search code.
"""
from __future__ import annotations

import itertools


def _cells(outer, inner):
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    return [(r, c) for r in range(len(outer)) for c in range(inner[r], outer[r])]


def lr_tableaux(outer, inner, content):
    """All LR tableaux of shape outer/inner and the given content, by raw search.

    Fillings are generated cell by cell with row/column checks only; content and
    the lattice-word condition are checked on the finished filling.
    """
    outer, inner, content = tuple(outer), tuple(inner), tuple(content)
    if len(inner) > len(outer) or any(i > o for i, o in zip(inner, outer)):
        return []
    cells = _cells(outer, inner)
    if len(cells) != sum(content):
        return []
    letters = range(1, len(content) + 1)
    found = []
    filling = {}

    def ok(r, c, v):
        if (r, c - 1) in filling and filling[(r, c - 1)] > v:
            return False
        if (r - 1, c) in filling and filling[(r - 1, c)] >= v:
            return False
        return True

    def rec(k):
        if k == len(cells):
            counts = [0] * (len(content) + 1)
            for v in filling.values():
                counts[v] += 1
            if tuple(counts[1:]) != content:
                return
            # reverse reading word: rows top to bottom, each right to left
            seen = [0] * (len(content) + 2)
            for r in range(len(outer)):
                for c in sorted((c for (rr, c) in filling if rr == r), reverse=True):
                    v = filling[(r, c)]
                    seen[v] += 1
                    if v > 1 and seen[v] > seen[v - 1]:
                        return
            found.append(dict(filling))
            return
        r, c = cells[k]
        for v in letters:
            if ok(r, c, v):
                filling[(r, c)] = v
                rec(k + 1)
                del filling[(r, c)]

    rec(0)
    return found


def lr_brute(outer, inner, content):
    return len(lr_tableaux(outer, inner, content))


def all_partitions(n):
    if n == 0:
        yield ()
        return

    def rec(left, cap, prefix):
        if left == 0:
            yield prefix
            return
        for p in range(min(left, cap), 0, -1):
            yield from rec(left - p, p, prefix + (p,))

    yield from rec(n, n, ())


def tables_brute(rows, cols, hollow=False, symmetric=False, cap=None):
    """Every nonnegative integer matrix with the given margins.

    Each row is drawn from itertools.product filtered by its row sum; all other
    conditions are checked on the finished matrix.
    """
    r, s = len(rows), len(cols)
    top = max(list(rows) + list(cols) + [0])
    if cap is not None:
        top = min(top, cap)
    row_choices = [
        [t for t in itertools.product(range(top + 1), repeat=s) if sum(t) == rows[i]]
        for i in range(r)
    ]
    out = []
    for m in itertools.product(*row_choices):
        if any(sum(m[i][j] for i in range(r)) != cols[j] for j in range(s)):
            continue
        if hollow and any(m[i][i] for i in range(min(r, s))):
            continue
        if symmetric and any(m[i][j] != m[j][i] for i in range(r) for j in range(s)):
            continue
        out.append(tuple(tuple(row) for row in m))
    return out


def derangements_brute(r):
    return sum(1 for p in itertools.permutations(range(r)) if all(p[i] != i for i in range(r)))


def fpf_involutions_brute(r):
    return sum(
        1
        for p in itertools.permutations(range(r))
        if all(p[i] != i and p[p[i]] == i for i in range(r))
    )


def sym_hollow_tables_brute(margins):
    """Hollow symmetric tables, searched over upper-triangle cells with row-sum pruning."""
    r = len(margins)
    cells = [(i, j) for i in range(r) for j in range(i + 1, r)]
    sums = [0] * r
    values = {}
    out = []

    def rec(k):
        if k == len(cells):
            if sums == list(margins):
                m = [[0] * r for _ in range(r)]
                for (i, j), v in values.items():
                    m[i][j] = m[j][i] = v
                out.append(tuple(map(tuple, m)))
            return
        i, j = cells[k]
        for v in range(0, max(margins) + 1):
            if sums[i] + v > margins[i] or sums[j] + v > margins[j]:
                break
            sums[i] += v
            sums[j] += v
            values[(i, j)] = v
            rec(k + 1)
            sums[i] -= v
            sums[j] -= v
        values.pop((i, j), None)

    rec(0)
    return out

"""Independent multiplicity oracles built from classical LR coefficients only.

Nothing here touches contingency tables.

* GL_n: twist every weight by a power of the determinant until it is a
  partition, then read off the multiplicity of the matching power of the
  determinant (an n-row rectangle) in the product of Schur functions.
* O_n / Sp_2n: fold the margins through the stable-range tensor product rule
  given by Newell-Littlewood numbers

      N^lam_{mu,nu} = sum_{a,b,c} c^mu_{a,b} c^nu_{a,c} c^lam_{b,c}

  and read off the coefficient of the empty partition. This rule is standard
  background (Koike-Terada) and is valid throughout the stable range.
"""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Sequence

from .errors import OutsideStableRange
from .lr import ExpansionMap, lr_coefficient, multi_lr, schur_product
from .partition import Partition, partitions_inside, rectangle


def twisted_labels(margins, shifts: Sequence[int] | None = None) -> tuple[list[Partition], int]:
    """Partitions ``w_i + k_i (1^n)`` and the total twist ``sum k_i``.

    ``k_i`` is the largest part of ``w_i^-`` plus the optional extra shift.
    """
    labels = []
    total = 0
    for i, w in enumerate(margins.weights):
        k = w.minus[0] if w.minus else 0
        if shifts is not None:
            k += shifts[i]
        labels.append(Partition(x + k for x in w.as_tuple()))
        total += k
    return labels, total


def oracle_gl_invariants(margins, shifts: Sequence[int] | None = None) -> int:
    """dim of GL_n-invariants in the tensor product, valid for every n."""
    labels, k = twisted_labels(margins, shifts)
    return multi_lr(rectangle(margins.n, k), labels)


def _skew(outer: Partition, inner: Partition) -> dict[Partition, int]:
    """s_{outer/inner} = sum_b c^outer_{inner,b} s_b."""
    if not outer.contains(inner):
        return {}
    out = {}
    for b in partitions_inside(outer, sum(outer) - sum(inner)):
        c = lr_coefficient(outer, inner, b)
        if c:
            out[b] = c
    return out


@lru_cache(maxsize=None)
def _nl_product(mu: tuple[int, ...], nu: tuple[int, ...]) -> tuple[tuple[Partition, int], ...]:
    mu_p, nu_p = Partition(mu), Partition(nu)
    out: dict[Partition, int] = defaultdict(int)
    for a in partitions_inside(mu_p):
        if not nu_p.contains(a):
            continue
        left = _skew(mu_p, a)
        right = _skew(nu_p, a)
        for b, cb in left.items():
            for c, cc in right.items():
                for lam, cl in schur_product(b, c).items():
                    out[lam] += cb * cc * cl
    return tuple(sorted((k, v) for k, v in out.items() if v))


def newell_littlewood_product(mu: Sequence[int], nu: Sequence[int]) -> ExpansionMap:
    """Stable-range decomposition of E^mu x E^nu as a map lam -> N^lam_{mu,nu}."""
    mu, nu = Partition(mu), Partition(nu)
    if nu < mu:
        mu, nu = nu, mu
    out = ExpansionMap()
    for lam, c in _nl_product(tuple(mu), tuple(nu)):
        out[lam] = c
    return out


def newell_littlewood(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    return newell_littlewood_product(mu, nu).get(Partition(lam), 0)


def oracle_osp_invariants(margins, order: Sequence[int] | None = None) -> int:
    """O_n / Sp_2n invariant dimension by a left fold of Newell-Littlewood products."""
    if not margins.in_stable_range():
        t = margins.stable_threshold()
        raise OutsideStableRange(
            f"n = {margins.n} is below the stable threshold 2 * sum l(mu_i) = {t}",
            threshold=t,
            n=margins.n,
        )
    mus = list(margins.partitions)
    if order is not None:
        mus = [mus[i] for i in order]
    current: dict[Partition, int] = {mus[0]: 1}
    for mu in mus[1:]:
        nxt: dict[Partition, int] = defaultdict(int)
        for kappa, mult in current.items():
            for lam, c in newell_littlewood_product(kappa, mu).items():
                nxt[lam] += mult * c
        current = nxt
    return current.get(Partition(), 0)

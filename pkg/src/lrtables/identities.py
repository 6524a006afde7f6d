"""Closed-form multiplicity identities evaluated through the table method."""
from __future__ import annotations

from .contingency import MarginSpec, lrc_general
from .errors import PreconditionViolated
from .partition import split


def _twist(label: tuple[int, ...], k: int) -> tuple[int, ...]:
    """Tensor with det^k: add k to every coordinate."""
    return tuple(x + k for x in label)


def hook_multiplicity(r: int, s: int) -> int:
    """[F^{((r+1)^r, r^s)} : (F^{(r+1, 1^s)})^{x r}] for GL_{r+s+1}.

    Both sides are twisted into the stable range before the table method
    runs: the target by det^{-r}, each factor by det^{-1}.
    """
    if r < 1 or s < r * r + r:
        raise PreconditionViolated(f"need r >= 1 and s >= r^2 + r, got r={r}, s={s}")
    n = r + s + 1
    target = (r + 1,) * r + (r,) * s + (0,)
    hook = (r + 1,) + (1,) * s + (0,) * r
    assert len(target) == len(hook) == n
    twisted_target = split(_twist(target, -r))
    twisted_hook = split(_twist(hook, -1))
    return lrc_general(twisted_target, MarginSpec((twisted_hook,) * r))


def hook_identity_check(r: int, s: int) -> bool:
    return hook_multiplicity(r, s) == 1

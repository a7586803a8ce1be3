"""The substitution operator ``s . r`` on Lyndon words.

``s . r`` replaces every digit of ``r`` by one of four blocks built from
``s``.  The block depends on the digit and on the digit before it::

    previous, current -> block
        0, 0          -> L(s)
        0, 1          -> L(s)+
        1, 0          -> s-
        1, 1          -> s

The first digit has no predecessor; it behaves as if preceded by its own
complement (``0 -> s-`` and ``1 -> L(s)+``).
"""

from __future__ import annotations

from functools import lru_cache, reduce
from typing import Iterable

from .errors import BetaHoleError
from .words import (
    EventuallyPeriodicSequence,
    PeriodicSequence,
    bump_down,
    bump_up,
    check_word,
    cyclic_max,
    is_lyndon,
)

__all__ = ["bullet", "bullet_periodic", "bullet_eventually_periodic", "bullet_fold", "bullet_blocks"]


@lru_cache(maxsize=4096)
def bullet_blocks(s: str) -> dict[tuple[str, str], str]:
    """Transition table for left operand ``s``; validates ``s``."""
    check_word(s)
    if len(s) < 2 or not is_lyndon(s):
        raise BetaHoleError(f"left operand must be a Lyndon word of length >= 2, got {s!r}",
                            "operand-domain")
    big = cyclic_max(s)
    return {
        ("0", "0"): big,
        ("0", "1"): bump_up(big),
        ("1", "0"): bump_down(s),
        ("1", "1"): s,
    }


def _scan(blocks, r: str, prev: str) -> str:
    out = []
    for c in r:
        out.append(blocks[prev, c])
        prev = c
    return "".join(out)


def bullet(s: str, r: str) -> str:
    blocks = bullet_blocks(s)
    check_word(r)
    if not r:
        raise BetaHoleError("right operand must be non-empty", "operand-domain")
    return _scan(blocks, r, "1" if r[0] == "0" else "0")


def bullet_periodic(s: str, r: PeriodicSequence) -> PeriodicSequence:
    """``s . r^inf`` for the two-sided periodic reading of ``r``.

    Every block, including the first of each period, is chosen from the
    transition out of the preceding digit of ``r^inf`` (the last digit of
    the period wraps around).  When the period begins and ends with
    different digits, as every Lyndon or Perron word of length >= 2 does,
    this is exactly ``(s . period)^inf``; otherwise it is the tail of the
    one-sided image after its first block (see
    :func:`bullet_eventually_periodic`).
    """
    blocks = bullet_blocks(s)
    p = r.period
    return PeriodicSequence(_scan(blocks, p, p[-1]))


def bullet_eventually_periodic(s: str, x: EventuallyPeriodicSequence) -> EventuallyPeriodicSequence:
    """One-sided ``s . x`` for an eventually periodic right operand."""
    blocks = bullet_blocks(s)
    pre, per = x.preperiod, x.tail.period
    first = pre[0] if pre else per[0]
    head = _scan(blocks, pre, "1" if first == "0" else "0") if pre else ""
    prev = pre[-1] if pre else ("1" if first == "0" else "0")
    # the first period is entered from `prev`, the later ones from per[-1]
    first_period = _scan(blocks, per, prev)
    steady = _scan(blocks, per, per[-1])
    if first_period == steady:
        return EventuallyPeriodicSequence(head, PeriodicSequence(steady))
    return EventuallyPeriodicSequence(head + first_period, PeriodicSequence(steady))


def bullet_fold(ws: Iterable[str]) -> str:
    ws = list(ws)
    if not ws:
        raise BetaHoleError("bullet_fold needs at least one word", "operand-domain")
    for w in ws:
        bullet_blocks(w)
    return reduce(bullet, ws)

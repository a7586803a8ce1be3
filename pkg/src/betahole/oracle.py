"""Brute-force ground truth, independent of the chain machinery.

Only word primitives and the numeric engine are shared with the main
computation: ``brute_tau`` scans every Lyndon word of length ``m``
instead of walking the chain tree.  A periodic orbit ``w^inf`` stays in
``[w^inf, L(w)^inf]`` under the shift, so it survives the hole ``(0, t)``
exactly when ``t`` is at most its value and ``L(w)^inf`` is admissible.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BetaHoleError, OracleBoundError, PrecisionError
from .numerics import (
    BetaParam,
    RealInterval,
    cmp_value_one,
    eval_periodic,
    eval_periodic_at,
    greedy_expansion,
    quasi_greedy_delta,
)
from .words import (
    Order,
    PeriodicSequence,
    cyclic_max,
    cyclic_min,
    farey_index,
    lex_cmp_periodic,
    lyndon_words,
)

__all__ = [
    "ORACLE_BOUND",
    "enumerate_lyndon",
    "brute_tau",
    "BruteResult",
    "survives",
    "gamma_set_check",
]

ORACLE_BOUND = 22


def enumerate_lyndon(m: int, bound: int = ORACLE_BOUND) -> list[str]:
    if m > bound:
        raise OracleBoundError(f"length {m} exceeds the oracle bound {bound}")
    if m < 1:
        raise BetaHoleError(f"length must be >= 1, got {m}", "range")
    return list(lyndon_words(m))


class BruteResult:
    """Outcome of the exhaustive scan: value enclosure and witness word (``"0"`` for none)."""

    __slots__ = ("value", "witness")

    def __init__(self, value: RealInterval, witness: str):
        self.value = value
        self.witness = witness

    @property
    def expansion(self) -> PeriodicSequence:
        return PeriodicSequence(self.witness)

    def __repr__(self) -> str:
        return f"BruteResult(value={self.value}, witness={self.witness!r})"


def brute_tau(m: int, beta: BetaParam, bound: int = ORACLE_BOUND) -> BruteResult:
    if m < 2:
        raise BetaHoleError(f"m must be >= 2, got {m}", "range")
    qualifying = [w for w in enumerate_lyndon(m, bound)
                  if cmp_value_one(cyclic_max(w), beta) is Order.LESS]
    if not qualifying:
        return BruteResult(RealInterval.point(0), "0")
    if beta.kind == "exact":
        best = max(qualifying, key=lambda w: (eval_periodic_at(w, beta.value), w))
        return BruteResult(RealInterval.point(eval_periodic_at(best, beta.value)), best)
    values = {w: eval_periodic(w, beta) for w in qualifying}
    best = max(qualifying, key=lambda w: (values[w].lower, w))
    for w in qualifying:
        if w != best and values[w].upper >= values[best].lower:
            raise PrecisionError(f"witnesses {best} and {w} are not separated at {beta}")
    return BruteResult(values[best], best)


def survives(w, t, beta: BetaParam, depth_factor: int = 10) -> bool:
    """Does the orbit of ``w^inf`` avoid the hole ``(0, t)`` in base ``beta``?

    Checks ``b(t) <= every shift of w^inf < delta(beta)``.  Both sides are
    compared digit by digit to ``depth_factor * |w|`` digits; an exact
    rational base settles a full-depth tie by comparing values.
    """
    w = w if isinstance(w, PeriodicSequence) else PeriodicSequence(w)
    t = Fraction(t)
    if not 0 <= t < 1:
        raise BetaHoleError(f"t must lie in [0,1), got {t}", "range")
    period = w.period
    depth = depth_factor * len(period)
    top = cyclic_max(period)
    if beta.kind == "word":
        # delta(beta) is the periodic sequence of the defining word
        delta = PeriodicSequence(beta.word)
        if lex_cmp_periodic(PeriodicSequence(top), delta) is not Order.LESS:
            return False
    else:
        delta = quasi_greedy_delta(beta, depth)
        head = PeriodicSequence(top).prefix(depth)
        if head > delta:
            return False
        if head == delta:
            if beta.kind != "exact":
                raise PrecisionError(f"cannot separate ({top})^inf from delta({beta})")
            if cmp_value_one(top, beta) is not Order.LESS:
                return False
    low = PeriodicSequence(cyclic_min(period)).prefix(depth)
    bt = greedy_expansion(t, beta, depth)
    if bt < low:
        return True
    if bt > low:
        return False
    if beta.kind == "exact":
        return t <= eval_periodic_at(cyclic_min(period), beta.value)
    raise PrecisionError(f"greedy expansion of {t} agrees with ({cyclic_min(period)})^inf to {depth} digits")


def gamma_set_check(s: str, max_period: int) -> bool:
    """Only the rotations of ``s^inf`` stay between ``s^inf`` and ``L(s)^inf`` under the shift.

    Scans every periodic sequence with period at most ``max_period`` via
    its Lyndon representative.
    """
    farey_index(s)
    if max_period > ORACLE_BOUND:
        raise OracleBoundError(f"max_period {max_period} exceeds the oracle bound {ORACLE_BOUND}")
    lo = PeriodicSequence(s)
    hi = PeriodicSequence(cyclic_max(s))
    found = []
    for n in range(1, max_period + 1):
        for u in lyndon_words(n):
            if (lex_cmp_periodic(lo, PeriodicSequence(u)) is not Order.GREATER
                    and lex_cmp_periodic(PeriodicSequence(cyclic_max(u)), hi) is not Order.GREATER):
                found.append(u)
    return found == [s]

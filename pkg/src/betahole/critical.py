"""Critical hole size for period-m orbits.

For a base ``beta`` and a period ``m`` the critical value is the largest
hole ``(0, t)`` that still lets a period-m orbit survive.  It is a step
function of ``beta`` as far as its greedy expansion is concerned: on the
interval ``(beta_c, beta_succ(c)]`` attached to an admissible chain ``c``
it is the value of ``chain_word(c)^inf``, below the first endpoint it is
0.  ``beta_c`` is the base whose quasi-greedy expansion of 1 is
``chain_anchor(c)^inf``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .chains import (
    Chain,
    chain_anchor,
    chain_from_rationals,
    chain_successor,
    chain_word,
    enumerate_chains,
    interval_type,
    rational_vector_cmp,
    chain_rationals,
)
from .errors import AmbiguousError, BetaHoleError
from .numerics import (
    BetaParam,
    RealInterval,
    beta_from_perron_word,
    cmp_value_one,
    eval_periodic,
)
from .words import (
    EventuallyPeriodicSequence,
    Order,
    PeriodicSequence,
    lex_cmp_eventually_periodic,
)

__all__ = [
    "Classification",
    "CriticalValue",
    "PartitionRow",
    "classify_beta",
    "tau",
    "partition_table",
    "tau_compare",
    "tau_compare_at",
    "theta",
    "theta_tilde",
    "beta_from_rational_chain",
    "komornik_loreti",
]

BELOW_FIRST = "below-first"
ABOVE_LAST = "above-last"
IN_CHAIN = "in"


@dataclass(frozen=True)
class Classification:
    kind: str
    chain: Chain | None = None

    def __str__(self) -> str:
        return f"({self.chain})" if self.kind == IN_CHAIN else self.kind


@dataclass(frozen=True)
class CriticalValue:
    value: RealInterval
    expansion: PeriodicSequence
    provenance: str  # "zero-extremal", "high-extremal" or "chain"
    chain: Chain | None = None

    @property
    def label(self) -> str:
        """Classification label: ``below-first``, ``above-last`` or the chain."""
        if self.provenance == "chain":
            return f"({self.chain})"
        return BELOW_FIRST if self.provenance == "zero-extremal" else ABOVE_LAST


@dataclass(frozen=True)
class PartitionRow:
    chain: Chain
    anchor: str
    left: RealInterval
    tau_word: str
    interval_type: str
    right_anchor: str | None  # None for the last row, whose right end is 2


def _first_leaf(m: int, ks: tuple[int, ...], mi: int, k: int) -> Chain:
    return Chain(m, ks + (k,) if gcd(mi, k) == 1 else ks + (k, 1))


def _below(anchor: str, beta: BetaParam, chain: Chain) -> bool:
    """True when the endpoint base of ``anchor`` lies strictly below ``beta``."""
    try:
        return cmp_value_one(anchor, beta) is Order.LESS
    except AmbiguousError as exc:
        raise AmbiguousError(
            f"beta = {beta} is too coarse to place against the endpoint of chain ({chain})",
            chain=chain) from exc


def classify_beta(m: int, beta: BetaParam) -> Classification:
    """Locate ``beta`` among the m-partition intervals.

    Walks down the chain tree choosing, at each level, the largest ``k``
    whose first leaf has its left endpoint strictly below ``beta``.  Since
    endpoints increase with the chain order, this lands on the largest
    chain whose endpoint is below ``beta``.  A ``beta`` equal to an endpoint
    therefore belongs to the interval on its left (intervals are closed on
    the right).
    """
    if m < 2:
        raise BetaHoleError(f"m must be >= 2, got {m}", "range")
    ks: tuple[int, ...] = ()
    mi = m
    while mi > 1:
        for k in range(mi - 1, 0, -1):
            leaf = _first_leaf(m, ks, mi, k)
            if _below(chain_anchor(leaf), beta, leaf):
                break
        else:
            # only reachable at the root: every descendant of a chosen k is >= its first leaf
            return Classification(BELOW_FIRST)
        ks += (k,)
        mi = gcd(mi, k)
    chain = Chain(m, ks)
    if ks == (m - 1,):
        return Classification(ABOVE_LAST)
    return Classification(IN_CHAIN, chain)


def tau(m: int, beta: BetaParam, tol=None) -> CriticalValue:
    cls = classify_beta(m, beta)
    if cls.kind == BELOW_FIRST:
        return CriticalValue(RealInterval.point(0), PeriodicSequence("0"), "zero-extremal")
    if cls.kind == ABOVE_LAST:
        word = "0" + "1" * (m - 1)
        return CriticalValue(eval_periodic(word, beta, tol), PeriodicSequence(word),
                             "high-extremal", Chain(m, (m - 1,)))
    word = chain_word(cls.chain)
    return CriticalValue(eval_periodic(word, beta, tol), PeriodicSequence(word), "chain", cls.chain)


def partition_table(m: int, tol=Fraction(1, 10 ** 12)) -> list[PartitionRow]:
    chains = enumerate_chains(m)
    anchors = [chain_anchor(c) for c in chains]
    rows = []
    for i, c in enumerate(chains):
        rows.append(PartitionRow(
            chain=c,
            anchor=anchors[i],
            left=beta_from_perron_word(anchors[i], tol),
            tau_word=chain_word(c),
            interval_type=interval_type(c),
            right_anchor=anchors[i + 1] if i + 1 < len(chains) else None,
        ))
    return rows


def tau_compare(cm: Chain, cn: Chain) -> Order:
    """Compare the periodic rational vectors of two chains.

    For chains that classify the same base, ``GREATER`` means the m-value
    exceeds the n-value.  ``EQUAL`` vectors for different periods do not
    imply equal values; see :func:`tau_compare_at` for the numeric answer.
    """
    return rational_vector_cmp(chain_rationals(cm), chain_rationals(cn))


def tau_compare_at(m: int, n: int, beta: BetaParam) -> tuple[Order | None, Order | None]:
    """``(vector order, value order)`` of the m- and n-critical values at ``beta``.

    The vector order is ``None`` when either base lies outside every
    chain interval.  The value order is ``None`` when the enclosures overlap.
    """
    tm, tn = tau(m, beta), tau(n, beta)
    vec = tau_compare(tm.chain, tn.chain) if tm.chain and tn.chain else None
    return vec, tm.value.cmp(tn.value)


def _as_eventually_periodic(b) -> EventuallyPeriodicSequence:
    if isinstance(b, EventuallyPeriodicSequence):
        return b
    if isinstance(b, PeriodicSequence):
        return EventuallyPeriodicSequence("", b)
    return EventuallyPeriodicSequence.parse(b)


def theta(m: int, b) -> PeriodicSequence:
    """Symbolic counterpart of the critical value for a kneading sequence ``b``.

    ``b`` is located among the anchors ``chain_anchor(c)^inf`` in chain
    order; an anchor equal to ``b`` closes the interval on its left.
    """
    b = _as_eventually_periodic(b)
    if b.prefix(1) != "1":
        raise BetaHoleError("the upper kneading sequence must begin with 1", "trivial-subshift")
    if m < 2:
        raise BetaHoleError(f"m must be >= 2, got {m}", "range")
    chosen = None
    for c in enumerate_chains(m):
        anchor = EventuallyPeriodicSequence.periodic(chain_anchor(c))
        if lex_cmp_eventually_periodic(anchor, b) is Order.LESS:
            chosen = c
        else:
            break
    if chosen is None:
        return PeriodicSequence("0")
    return PeriodicSequence(chain_word(chosen))


def theta_tilde(m: int, a) -> PeriodicSequence:
    a = _as_eventually_periodic(a)
    if a.prefix(1) != "0":
        raise BetaHoleError("the lower kneading sequence must begin with 0", "trivial-subshift")
    return theta(m, a.conjugate()).conjugate()


@dataclass(frozen=True)
class NestedBracket:
    chain: Chain
    word: str
    left_anchor: str
    right_anchor: str | None
    enclosure: RealInterval

    @property
    def width(self) -> Fraction:
        return self.enclosure.width


def beta_from_rational_chain(rs, tol=Fraction(1, 10 ** 9)) -> NestedBracket:
    """Bracket ``(beta_n, beta_n']`` of the interval indexed by the rational vector ``rs``.

    The lower end encloses the left endpoint from below, the upper end
    encloses the right endpoint (or 2) from above.
    """
    tol = Fraction(tol)
    c = chain_from_rationals(rs)
    word = chain_word(c)
    left_anchor = chain_anchor(c)
    succ = chain_successor(c)
    left = beta_from_perron_word(left_anchor, tol)
    if succ is None:
        right_anchor, upper = None, Fraction(2)
    else:
        right_anchor = chain_anchor(succ)
        upper = beta_from_perron_word(right_anchor, tol).upper
    return NestedBracket(c, word, left_anchor, right_anchor, RealInterval(left.lower, upper))


def komornik_loreti(tol=Fraction(1, 10 ** 9), max_terms: int = 16) -> RealInterval:
    """Enclosure of the Komornik-Loreti constant, the limit of the all-1/2 chain."""
    tol = Fraction(tol)
    if tol <= 0:
        raise BetaHoleError("tol must be positive", "range")
    best = None
    for n in range(1, max_terms + 1):
        bracket = beta_from_rational_chain([Fraction(1, 2)] * n, tol / 4)
        iv = bracket.enclosure
        if best is not None:
            iv = RealInterval(max(iv.lower, best.lower), min(iv.upper, best.upper))
        best = iv
        if iv.width <= tol:
            return iv
    raise BetaHoleError(f"no bracket of width {float(tol):.3g} within {max_terms} terms", "precision")

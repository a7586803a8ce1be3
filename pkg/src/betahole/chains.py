"""Admissible m-chains and the butterfly tree.

A chain ``(m, k1, ..., kj)`` walks down a gcd ladder ``m1 = m``,
``m_{i+1} = gcd(m_i, k_i)`` with ``1 <= k_i < m_i`` and ends when the
ladder reaches 1.  Chains index the intervals on which the critical
hole size is given by a single periodic word.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterator

from .bullet import bullet_fold
from .errors import BetaHoleError
from .words import Order, cyclic_max, farey_word

__all__ = [
    "Chain",
    "enumerate_chains",
    "iter_chains",
    "psi",
    "chain_word",
    "chain_anchor",
    "chain_cmp",
    "chain_successor",
    "chain_rationals",
    "interval_type",
    "chain_from_rationals",
    "rational_vector_cmp",
]


@dataclass(frozen=True, order=False)
class Chain:
    m: int
    ks: tuple[int, ...]

    def __post_init__(self):
        ks = tuple(int(k) for k in self.ks)
        object.__setattr__(self, "ks", ks)
        if self.m < 2:
            raise BetaHoleError(f"m must be >= 2, got {self.m}", "range")
        if not ks:
            raise BetaHoleError("a chain needs at least one k", "chain")
        mi = self.m
        for k in ks:
            if mi == 1 or not 1 <= k < mi:
                raise BetaHoleError(f"({self}) is not an admissible chain", "chain")
            mi = gcd(mi, k)
        if mi != 1:
            raise BetaHoleError(f"({self}) does not reach gcd 1", "chain")

    @classmethod
    def of(cls, m: int, *ks: int) -> "Chain":
        return cls(m, ks)

    @classmethod
    def parse(cls, text: str) -> "Chain":
        nums = [int(t) for t in text.replace("(", "").replace(")", "").split(",") if t.strip()]
        if len(nums) < 2:
            raise BetaHoleError(f"cannot parse chain {text!r}", "parse")
        return cls(nums[0], tuple(nums[1:]))

    @property
    def ms(self) -> tuple[int, ...]:
        """The gcd ladder ``m1, ..., mj`` (``m_{j+1} = 1`` is implicit)."""
        out = [self.m]
        for k in self.ks[:-1]:
            out.append(gcd(out[-1], k))
        return tuple(out)

    @property
    def vector(self) -> tuple[int, ...]:
        return (self.m,) + self.ks

    def __str__(self) -> str:
        return ",".join(map(str, self.vector))


def _children(mi: int) -> range:
    return range(1, mi)


def iter_chains(m: int) -> Iterator[Chain]:
    """Depth-first walk of the butterfly tree, leaves in increasing order."""
    if m < 2:
        raise BetaHoleError(f"m must be >= 2, got {m}", "range")

    def walk(mi: int, ks: tuple[int, ...]):
        for k in _children(mi):
            d = gcd(mi, k)
            if d == 1:
                yield Chain(m, ks + (k,))
            else:
                yield from walk(d, ks + (k,))

    return walk(m, ())


def enumerate_chains(m: int) -> list[Chain]:
    return list(iter_chains(m))


@lru_cache(maxsize=None)
def psi(n: int) -> int:
    if n < 1:
        raise BetaHoleError(f"psi is defined for n >= 1, got {n}", "range")
    if n == 1:
        return 1
    return sum(psi(gcd(n, k)) for k in range(1, n))


def chain_rationals(c: Chain) -> list[Fraction]:
    return [Fraction(k, mi) for k, mi in zip(c.ks, c.ms)]


@lru_cache(maxsize=65536)
def chain_word(c: Chain) -> str:
    return bullet_fold(farey_word(r) for r in chain_rationals(c))


def chain_anchor(c: Chain) -> str:
    """The Perron word whose periodic repetition is the left-endpoint quasi-greedy expansion."""
    return cyclic_max(chain_word(c))


def chain_cmp(a: Chain, b: Chain) -> Order:
    if a.m != b.m:
        raise BetaHoleError(f"chains have different moduli {a.m} and {b.m}", "modulus")
    # admissible chains of one modulus are never proper prefixes of each other
    return Order.of(a.ks, b.ks)


def _descend(m: int, ks: tuple[int, ...], mi: int, k: int) -> Chain:
    d = gcd(mi, k)
    return Chain(m, ks + (k,) if d == 1 else ks + (k, 1))


def chain_successor(c: Chain) -> Chain | None:
    """Next admissible chain in increasing order, or ``None`` after ``(m, m-1)``.

    Bump the last entry when it is below ``m_j - 1``; otherwise drop it and
    bump the one before (that entry is then always below its own bound).
    A bumped entry that shares a factor with its modulus gets a trailing 1.
    """
    ks, ms = c.ks, c.ms
    j = len(ks) - 1
    if ks[j] < ms[j] - 1:
        return _descend(c.m, ks[:j], ms[j], ks[j] + 1)
    if j == 0:
        return None
    return _descend(c.m, ks[:j - 1], ms[j - 1], ks[j - 1] + 1)


def interval_type(c: Chain) -> str:
    """Shape of the interval that starts at ``c``: ``A``, ``B``, ``C``, ``D`` or ``last``."""
    ks, ms = c.ks, c.ms
    j = len(ks) - 1
    if ks[j] < ms[j] - 1:
        return "A" if gcd(ms[j], ks[j] + 1) == 1 else "B"
    if j == 0:
        return "last"
    return "C" if gcd(ms[j - 1], ks[j - 1] + 1) == 1 else "D"


def chain_from_rationals(rs) -> Chain:
    """The chain ``(Q1, P1, ..., Pn)`` whose rational vector is ``rs``."""
    rs = [Fraction(r) for r in rs]
    if not rs or any(not 0 < r < 1 for r in rs):
        raise BetaHoleError("rationals must lie in (0, 1)", "range")
    qs = [r.denominator for r in rs]
    ks = []
    for i, r in enumerate(rs):
        tail = 1
        for q in qs[i + 1:]:
            tail *= q
        ks.append(r.numerator * tail)
    m = 1
    for q in qs:
        m *= q
    return Chain(m, tuple(ks))


def rational_vector_cmp(u, v) -> Order:
    """Compare the periodic sequences ``u^inf`` and ``v^inf`` of rationals."""
    n = lcm(len(u), len(v))
    uu = [u[i % len(u)] for i in range(n)]
    vv = [v[i % len(v)] for i in range(n)]
    return Order.of(uu, vv)

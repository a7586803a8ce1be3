"""Finite and periodic binary words.

Words are plain ``str`` objects over the alphabet ``"01"``.  This keeps
slicing, concatenation and hashing cheap and lets the rest of the package
use them as dictionary keys.  Infinite sequences are represented only in
the two forms needed here: purely periodic ``w^inf`` and eventually
periodic ``u w^inf``; both are normalised on construction so equality is
structural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Iterator, NamedTuple

from .errors import BetaHoleError

__all__ = [
    "Order",
    "PeriodicSequence",
    "EventuallyPeriodicSequence",
    "check_word",
    "lex_cmp_words",
    "lex_cmp_periodic",
    "lex_cmp_eventually_periodic",
    "primitive_root",
    "is_primitive",
    "rotations",
    "cyclic_max",
    "cyclic_min",
    "bump_up",
    "bump_down",
    "conjugate",
    "is_lyndon",
    "is_perron",
    "is_balanced",
    "farey_word",
    "farey_index",
    "farey_code",
    "substitute_U",
    "run_length_profile",
    "RunProfile",
    "lyndon_words",
]


class Order(IntEnum):
    """Result of a lexicographic comparison.

    ``PREFIX`` is reported only by :func:`lex_cmp_words` when one word is a
    proper prefix of the other, so no digit decides the comparison.
    """

    LESS = -1
    EQUAL = 0
    GREATER = 1
    PREFIX = 2

    @classmethod
    def of(cls, a, b) -> "Order":
        return cls.LESS if a < b else cls.GREATER if a > b else cls.EQUAL


def check_word(w: str) -> str:
    if not isinstance(w, str) or w.strip("01"):
        raise BetaHoleError(f"not a binary word: {w!r}", "alphabet")
    return w


def lex_cmp_words(u: str, v: str) -> Order:
    n = min(len(u), len(v))
    head_u, head_v = u[:n], v[:n]
    if head_u != head_v:
        return Order.of(head_u, head_v)
    return Order.EQUAL if len(u) == len(v) else Order.PREFIX


def primitive_root(w: str) -> str:
    """Shortest ``r`` with ``w == r * k``."""
    n = len(w)
    if n == 0:
        raise BetaHoleError("empty word has no primitive root", "empty")
    # w is a proper power iff it occurs inside (w+w) strictly between 0 and n
    i = (w + w).find(w, 1)
    return w[:i] if i < n else w


def is_primitive(w: str) -> bool:
    return len(primitive_root(w)) == len(w)


@dataclass(frozen=True)
class PeriodicSequence:
    """The infinite sequence ``period^inf`` with a primitive period."""

    period: str

    def __post_init__(self):
        check_word(self.period)
        object.__setattr__(self, "period", primitive_root(self.period))

    @property
    def canonical(self) -> bool:
        return True

    def __len__(self) -> int:
        return len(self.period)

    def prefix(self, n: int) -> str:
        p = self.period
        return (p * (n // len(p) + 1))[:n]

    def shift(self, k: int) -> "PeriodicSequence":
        k %= len(self.period)
        return PeriodicSequence(self.period[k:] + self.period[:k])

    def conjugate(self) -> "PeriodicSequence":
        return PeriodicSequence(conjugate(self.period))

    def __str__(self) -> str:
        return f"({self.period})^inf"


@dataclass(frozen=True)
class EventuallyPeriodicSequence:
    """``preperiod tail^inf`` with the shortest preperiod and primitive tail."""

    preperiod: str
    tail: PeriodicSequence

    def __post_init__(self):
        check_word(self.preperiod)
        tail = self.tail
        if not isinstance(tail, PeriodicSequence):
            tail = PeriodicSequence(tail)
        pre, per = self.preperiod, tail.period
        while pre and pre[-1] == per[-1]:
            pre, per = pre[:-1], per[-1] + per[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "tail", PeriodicSequence(per))

    @classmethod
    def periodic(cls, period: str) -> "EventuallyPeriodicSequence":
        return cls("", PeriodicSequence(period))

    @classmethod
    def parse(cls, text: str) -> "EventuallyPeriodicSequence":
        """Parse ``"pre:period"`` (``pre`` may be empty)."""
        pre, sep, per = text.partition(":")
        if not sep:
            pre, per = "", pre
        if not per:
            raise BetaHoleError(f"missing period in {text!r}", "parse")
        return cls(pre, PeriodicSequence(per))

    @property
    def is_periodic(self) -> bool:
        return not self.preperiod

    def prefix(self, n: int) -> str:
        return (self.preperiod + self.tail.prefix(n))[:n]

    def conjugate(self) -> "EventuallyPeriodicSequence":
        return EventuallyPeriodicSequence(conjugate(self.preperiod), self.tail.conjugate())

    def __str__(self) -> str:
        return f"{self.preperiod}({self.tail.period})^inf"


def lex_cmp_periodic(a: PeriodicSequence, b: PeriodicSequence) -> Order:
    n = math.lcm(len(a.period), len(b.period))
    return Order.of(a.prefix(n), b.prefix(n))


def lex_cmp_eventually_periodic(x: EventuallyPeriodicSequence,
                                y: EventuallyPeriodicSequence) -> Order:
    n = max(len(x.preperiod), len(y.preperiod)) + math.lcm(len(x.tail), len(y.tail))
    return Order.of(x.prefix(n), y.prefix(n))


def rotations(w: str) -> Iterator[str]:
    ww = w + w
    return (ww[i:i + len(w)] for i in range(len(w)))


def cyclic_max(w: str) -> str:
    if not w:
        raise BetaHoleError("cyclic_max of the empty word", "empty")
    return max(rotations(w))


def cyclic_min(w: str) -> str:
    if not w:
        raise BetaHoleError("cyclic_min of the empty word", "empty")
    return min(rotations(w))


def bump_up(w: str) -> str:
    if not w or w[-1] != "0":
        raise BetaHoleError(f"bump_up needs a word ending in 0, got {w!r}", "digit-bump-domain")
    return w[:-1] + "1"


def bump_down(w: str) -> str:
    if not w or w[-1] != "1":
        raise BetaHoleError(f"bump_down needs a word ending in 1, got {w!r}", "digit-bump-domain")
    return w[:-1] + "0"


_FLIP = str.maketrans("01", "10")


def conjugate(w: str) -> str:
    return w.translate(_FLIP)


def is_lyndon(w: str) -> bool:
    m = len(w)
    if m == 0:
        raise BetaHoleError("empty word", "empty")
    return all(w[i:] > w[:m - i] for i in range(1, m))


def is_perron(w: str) -> bool:
    n = len(w)
    if n < 2:
        raise BetaHoleError(f"Perron words have length >= 2, got {w!r}", "too-short")
    return all(w[i:] < w[:n - i] for i in range(1, n))


def is_balanced(w: str) -> bool:
    """Every two factors of equal length differ by at most one in their count of 1s."""
    n = len(w)
    prefix_ones = [0]
    for c in w:
        prefix_ones.append(prefix_ones[-1] + (c == "1"))
    for length in range(1, n):
        counts = [prefix_ones[i + length] - prefix_ones[i] for i in range(n - length + 1)]
        if max(counts) - min(counts) > 1:
            return False
    return True


def _as_fraction(p, q=None) -> Fraction:
    if q is not None:
        return Fraction(p, q)
    if isinstance(p, str):
        return Fraction(p)
    return Fraction(p)


def farey_word(p, q=None) -> str:
    """Farey word of ``p/q`` from the rotation by ``p/q`` on the circle.

    Digit ``k`` is 1 exactly when the ``k``-th rotation step wraps past 0
    (the interval ``(R^{k-1}(0), R^k(0)]`` is right-closed), which in
    residues mod ``q`` is ``floor(k p / q) - floor((k-1) p / q)``.
    Non-reduced fractions are reduced first.
    """
    r = _as_fraction(p, q)
    if not 0 < r < 1:
        raise BetaHoleError(f"Farey words need 0 < p/q < 1, got {r}", "range")
    p, q = r.numerator, r.denominator
    return "".join("1" if (k * p) // q != ((k - 1) * p) // q else "0" for k in range(1, q + 1))


def farey_index(w: str) -> Fraction:
    check_word(w)
    if len(w) < 2:
        raise BetaHoleError(f"not a Farey word of length >= 2: {w!r}", "not-farey")
    ones = w.count("1")
    r = Fraction(ones, len(w))
    if ones == 0 or ones == len(w) or r.denominator != len(w) or farey_word(r) != w:
        raise BetaHoleError(f"not a Farey word: {w!r}", "not-farey")
    return r


_U = {
    "0": {"0": "0", "1": "01"},
    "1": {"0": "01", "1": "1"},
}


def substitute_U(code: str, w: str) -> str:
    """Apply ``U_{d1} o ... o U_{dn}`` to ``w`` (the last letter of ``code`` acts first)."""
    check_word(code)
    check_word(w)
    for d in reversed(code):
        table = _U[d]
        w = "".join(table[c] for c in w)
    return w


def _invert_U(d: str, w: str) -> str | None:
    # U_0 image: every 1 is preceded by its own 0.  U_1 image: every 0 is followed by its own 1.
    out = []
    i, n = 0, len(w)
    while i < n:
        if w.startswith("01", i):
            out.append("1" if d == "0" else "0")
            i += 2
        elif w[i] == ("0" if d == "0" else "1"):
            out.append(w[i])
            i += 1
        else:
            return None
    return "".join(out)


def farey_code(w: str) -> str:
    """The code ``d1...dn`` with ``w == substitute_U(code, "01")``."""
    check_word(w)
    code = []
    while w != "01":
        d = "0" if "00" in w else "1"
        inv = _invert_U(d, w) if len(w) > 2 else None
        if inv is None or len(inv) >= len(w):
            raise BetaHoleError(f"not a Farey word: {w!r}", "not-farey")
        code.append(d)
        w = inv
    return "".join(code)


class RunProfile(NamedTuple):
    """Zero-run lengths immediately before each 1, plus zeros after the last 1."""

    runs: tuple[int, ...]
    trailing: int


def run_length_profile(w: str) -> RunProfile:
    check_word(w)
    blocks = w.split("1")
    return RunProfile(tuple(len(b) for b in blocks[:-1]), len(blocks[-1]))


def lyndon_words(n: int) -> Iterator[str]:
    """All binary Lyndon words of length exactly ``n`` in increasing order.

    Duval's successor generation: walks the Lyndon words of length <= n
    and keeps those of length n.
    """
    if n < 1:
        return
    w = [0]
    while w:
        if len(w) == n:
            yield "".join(map(str, w))
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == 1:
            w.pop()
        if w:
            w[-1] += 1

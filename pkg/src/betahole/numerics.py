"""Real-parameter engine for bases ``beta`` in (1, 2].

All arithmetic is exact: rationals are ``Fraction`` objects and every
polynomial sign is decided on integers.  A base is one of

* exact: a rational ``p/q``;
* word: the unique base whose quasi-greedy expansion of 1 is ``a^inf``
  for a Perron word ``a``; it is enclosed by dyadic bisection and compared
  symbolically where possible;
* approx: a midpoint with a positive radius; comparisons that the radius
  cannot decide raise :class:`AmbiguousError`.

Values of periodic expansions are monotone decreasing in ``beta``, so an
enclosure of ``beta`` maps to an enclosure of the value by evaluating the
two endpoints exactly.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from functools import lru_cache
from math import ceil, log2

from .errors import AmbiguousError, BetaHoleError, PrecisionError
from .words import Order, PeriodicSequence, check_word, is_perron

__all__ = [
    "RealInterval",
    "BetaParam",
    "parse_beta",
    "default_precision",
    "eval_periodic",
    "eval_periodic_at",
    "cmp_value_one",
    "beta_from_perron_word",
    "quasi_greedy_delta",
    "greedy_expansion",
    "PRECISION_ENV",
    "PRECISION_CEILING",
]

PRECISION_ENV = "BETAHOLE_PRECISION"
DEFAULT_PRECISION = 128
PRECISION_CEILING = 4096


def default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if not raw:
        return DEFAULT_PRECISION
    try:
        bits = int(raw)
    except ValueError:
        raise BetaHoleError(f"{PRECISION_ENV} must be an integer, got {raw!r}", "usage") from None
    if bits < 8:
        raise BetaHoleError(f"{PRECISION_ENV} must be >= 8", "usage")
    return bits


@dataclass(frozen=True)
class RealInterval:
    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        lo, hi = Fraction(self.lower), Fraction(self.upper)
        if lo > hi:
            raise BetaHoleError(f"empty interval [{lo}, {hi}]", "interval")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @classmethod
    def point(cls, x) -> "RealInterval":
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def mid(self) -> Fraction:
        return (self.lower + self.upper) / 2

    @property
    def is_point(self) -> bool:
        return self.lower == self.upper

    def __contains__(self, x) -> bool:
        return self.lower <= x <= self.upper

    def __float__(self) -> float:
        return float(self.mid)

    def overlaps(self, other: "RealInterval") -> bool:
        return self.lower <= other.upper and other.lower <= self.upper

    def cmp(self, other: "RealInterval") -> Order | None:
        """Certified order of two enclosures, or ``None`` when they overlap (points compare exactly)."""
        if self.upper < other.lower:
            return Order.LESS
        if self.lower > other.upper:
            return Order.GREATER
        if self.is_point and other.is_point:
            return Order.EQUAL
        return None

    def fmt(self, digits: int = 12) -> str:
        if self.is_point:
            return _fmt_frac(self.lower, digits)
        return f"[{_fmt_down(self.lower, digits)},{_fmt_up(self.upper, digits)}]"

    def __str__(self) -> str:
        return self.fmt()


def _fmt_frac(x: Fraction, digits: int) -> str:
    if x.denominator == 1 or x.denominator.bit_length() < 40:
        s = str(x)
        return s if "/" not in s else f"{s} ({float(x):.{digits}g})"
    return f"{float(x):.{digits}g}"


def _fmt_down(x: Fraction, digits: int) -> str:
    scale = 10 ** digits
    return _dec(Fraction((x * scale).__floor__(), scale), digits)


def _fmt_up(x: Fraction, digits: int) -> str:
    scale = 10 ** digits
    return _dec(Fraction((x * scale).__ceil__(), scale), digits)


def _dec(x: Fraction, digits: int) -> str:
    s = f"{Decimal(x.numerator) / Decimal(x.denominator):.{digits}f}"
    return s.rstrip("0").rstrip(".") if "." in s else s


def _round_out(iv: RealInterval, bits: int) -> RealInterval:
    """Widen to dyadic endpoints with ``bits`` fractional bits (keeps numbers small)."""
    scale = 1 << bits
    lo = Fraction((iv.lower * scale).__floor__(), scale)
    hi = Fraction((iv.upper * scale).__ceil__(), scale)
    return RealInterval(lo, hi)


_ONE = Fraction(1)
_TWO = Fraction(2)


@dataclass(frozen=True)
class BetaParam:
    """A base in (1, 2]; see the module docstring for the three kinds."""

    kind: str
    value: Fraction | None = None
    word: str | None = None
    radius: Fraction | None = None
    precision: int = field(default_factory=default_precision)

    def __post_init__(self):
        if self.kind == "exact":
            v = Fraction(self.value)
            object.__setattr__(self, "value", v)
            if not _ONE < v <= _TWO:
                raise BetaHoleError(f"beta out of range (1,2]: {v}", "range")
        elif self.kind == "word":
            check_word(self.word or "")
            if len(self.word) < 2 or not is_perron(self.word):
                raise BetaHoleError(f"not a Perron word: {self.word!r}", "not-perron")
        elif self.kind == "approx":
            v, r = Fraction(self.value), Fraction(self.radius)
            if r <= 0:
                raise BetaHoleError("approximate beta needs a positive radius", "range")
            object.__setattr__(self, "value", v)
            object.__setattr__(self, "radius", r)
            if not (v - r > _ONE and v + r <= _TWO):
                raise BetaHoleError(f"beta out of range (1,2]: {v} ± {r}", "range")
        else:
            raise BetaHoleError(f"unknown beta kind {self.kind!r}", "usage")
        if self.precision < 8:
            raise BetaHoleError("precision must be at least 8 bits", "range")

    @classmethod
    def exact(cls, x, precision: int | None = None) -> "BetaParam":
        return cls("exact", value=Fraction(x), precision=precision or default_precision())

    @classmethod
    def from_word(cls, a: str, precision: int | None = None) -> "BetaParam":
        return cls("word", word=a, precision=precision or default_precision())

    @classmethod
    def approx(cls, mid, radius, precision: int | None = None) -> "BetaParam":
        return cls("approx", value=Fraction(mid), radius=Fraction(radius),
                   precision=precision or default_precision())

    @classmethod
    def from_interval(cls, iv: RealInterval, precision: int | None = None) -> "BetaParam":
        if iv.is_point:
            return cls.exact(iv.lower, precision)
        return cls.approx(iv.mid, iv.width / 2, precision)

    def with_precision(self, bits: int) -> "BetaParam":
        return BetaParam(self.kind, self.value, self.word, self.radius, bits)

    def enclosure(self, bits: int | None = None) -> RealInterval:
        if self.kind == "exact":
            return RealInterval.point(self.value)
        if self.kind == "approx":
            return RealInterval(self.value - self.radius, min(self.value + self.radius, _TWO))
        return _word_root(self.word, bits or self.precision)

    @property
    def is_exact(self) -> bool:
        return self.kind != "approx"

    def __str__(self) -> str:
        if self.kind == "exact":
            return str(self.value)
        if self.kind == "word":
            return f"word:{self.word}"
        return f"{float(self.value)}±{float(self.radius):.3g}"


# --------------------------------------------------------------------------
# exact polynomial evaluation


def _scaled_terms(digits: str, p: int, q: int) -> tuple[int, int]:
    """For beta = p/q and n = len(digits) return integers (N, D) with

    N = q^n * sum a_i beta^{n-i}   and   D = q^n * (beta^n - 1),
    so the value of ``digits^inf`` at beta is N / D.
    """
    num = 0
    qpow = 1
    # Horner in p with the q-powers carried alongside: num_i = num_{i-1} * p + a_i * q^i
    for c in digits:
        qpow *= q
        num = num * p + (qpow if c == "1" else 0)
    pn = p ** len(digits)
    return num, pn - qpow


def eval_periodic_at(a, beta: Fraction) -> Fraction:
    """Exact value of ``a^inf`` at a rational base (``a`` is a word or PeriodicSequence)."""
    period = a.period if isinstance(a, PeriodicSequence) else check_word(a)
    beta = Fraction(beta)
    if beta <= 1:
        raise BetaHoleError(f"beta must exceed 1, got {beta}", "range")
    num, den = _scaled_terms(period, beta.numerator, beta.denominator)
    return Fraction(num, den)


def _sign_value_minus_one(period: str, beta: Fraction) -> int:
    num, den = _scaled_terms(period, beta.numerator, beta.denominator)
    diff = num - den
    return (diff > 0) - (diff < 0)


def _as_period(a) -> str:
    if isinstance(a, PeriodicSequence):
        return a.period
    return PeriodicSequence(check_word(a)).period


@lru_cache(maxsize=4096)
def _word_root(a: str, bits: int) -> RealInterval:
    """Dyadic enclosure of the root of (a^inf)_beta = 1 with width <= 2^-bits."""
    return _bisect(a, Fraction(1, 1 << bits))


def _bisect(a: str, tol: Fraction) -> RealInterval:
    lo, hi = Fraction(1), Fraction(2)
    # value(lo+) = +inf > 1 and value(2) <= 1: keep value(lo) > 1 >= value(hi)
    s = _sign_value_minus_one(a, hi)
    if s == 0:
        return RealInterval.point(hi)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        s = _sign_value_minus_one(a, mid)
        if s == 0:
            return RealInterval.point(mid)
        if s > 0:
            lo = mid
        else:
            hi = mid
    return RealInterval(lo, hi)


def beta_from_perron_word(a: str, tol=Fraction(1, 1 << 40)) -> RealInterval:
    """Enclosure of width <= tol of the base ``beta`` with ``delta(beta) = a^inf``."""
    check_word(a)
    if len(a) < 2 or not is_perron(a):
        raise BetaHoleError(f"not a Perron word: {a!r}", "not-perron")
    tol = Fraction(tol)
    if tol <= 0:
        raise BetaHoleError("tol must be positive", "range")
    bits = max(1, ceil(-log2(tol))) if tol < 1 else 1
    return _word_root(a, bits)


# --------------------------------------------------------------------------
# values and comparisons


def _value_enclosure(period: str, beta_iv: RealInterval) -> RealInterval:
    # the value is strictly decreasing in beta
    if beta_iv.is_point:
        return RealInterval.point(eval_periodic_at(period, beta_iv.lower))
    lo_beta = beta_iv.lower
    if lo_beta <= 1:
        raise BetaHoleError("beta enclosure reaches 1", "range")
    return RealInterval(eval_periodic_at(period, beta_iv.upper), eval_periodic_at(period, lo_beta))


def eval_periodic(a, beta: BetaParam, tol=None) -> RealInterval:
    """Enclosure of ``(a^inf)_beta``.

    Exact bases give a point.  Word-defined bases refine their precision
    until the width is at most ``tol`` (when given) or the ceiling is hit.
    """
    period = _as_period(a)
    if beta.kind == "exact":
        return RealInterval.point(eval_periodic_at(period, beta.value))
    if beta.kind == "approx":
        return _value_enclosure(period, beta.enclosure())
    bits = beta.precision
    tol = Fraction(tol) if tol is not None else None
    while True:
        iv = _round_out(_value_enclosure(period, beta.enclosure(bits)), bits + 8)
        if tol is None or iv.width <= tol:
            return iv
        if bits >= PRECISION_CEILING:
            raise PrecisionError(f"cannot reach width {float(tol):.3g} within {PRECISION_CEILING} bits")
        bits = min(2 * bits, PRECISION_CEILING)


def cmp_value_one(a, beta: BetaParam) -> Order:
    """Sign of ``(a^inf)_beta - 1``.

    Exact rational bases are decided on integers.  For a word-defined base
    with defining Perron word ``b`` and a Perron period ``a``, the answer is
    the lexicographic order of ``a^inf`` against ``b^inf`` (the map from a
    base to its quasi-greedy expansion of 1 is increasing).  Other periods
    fall back to interval refinement.  Approximate bases never report
    equality.
    """
    period = _as_period(a)
    if beta.kind == "exact":
        return Order(_sign_value_minus_one(period, beta.value))
    if beta.kind == "word":
        if period == "0":
            return Order.LESS
        if period == "1":
            return Order.GREATER  # word-defined bases are < 2, so 1/(beta-1) > 1
        if len(period) >= 2 and is_perron(period):
            b = PeriodicSequence(beta.word)
            n = len(period) * len(b.period)
            return Order.of(PeriodicSequence(period).prefix(n), b.prefix(n))
        bits = beta.precision
        while True:
            iv = _value_enclosure(period, beta.enclosure(bits))
            if iv.upper < 1:
                return Order.LESS
            if iv.lower > 1:
                return Order.GREATER
            if bits >= PRECISION_CEILING:
                raise PrecisionError(f"cannot decide ({period})^inf against 1 at {beta}")
            bits = min(2 * bits, PRECISION_CEILING)
    iv = _value_enclosure(period, beta.enclosure())
    if iv.upper < 1:
        return Order.LESS
    if iv.lower > 1:
        return Order.GREATER
    raise AmbiguousError(f"beta = {beta} is too coarse to compare ({period})^inf with 1")


# --------------------------------------------------------------------------
# digit generation


def _digits(start: Fraction, beta: BetaParam, n: int, strict: bool) -> str:
    """Greedy-type digit rule; ``strict`` selects ``>`` (quasi-greedy) over ``>=``."""
    if n < 0:
        raise BetaHoleError("n must be >= 0", "range")
    out = []
    if beta.kind == "exact":
        b, x = beta.value, start
        for _ in range(n):
            y = b * x
            d = y > 1 if strict else y >= 1
            out.append("1" if d else "0")
            x = y - d
        return "".join(out)
    bits = beta.precision
    while True:
        try:
            return _digits_interval(start, beta.enclosure(bits), n, strict)
        except PrecisionError:
            if beta.kind == "approx" or bits >= PRECISION_CEILING:
                raise
            bits = min(2 * bits, PRECISION_CEILING)


def _digits_interval(start: Fraction, biv: RealInterval, n: int, strict: bool) -> str:
    lo = hi = start
    out = []
    for i in range(n):
        ylo, yhi = biv.lower * lo, biv.upper * hi
        if ylo > 1 or (not strict and ylo >= 1):
            d = 1
        elif yhi < 1 or (strict and yhi <= 1):
            d = 0
        else:
            raise PrecisionError(f"digit {i + 1} is not certified at this precision")
        out.append(str(d))
        lo, hi = ylo - d, yhi - d
        # keep the state small: outward dyadic rounding
        iv = _round_out(RealInterval(max(lo, Fraction(0)), hi), 64 + 4 * n)
        lo, hi = iv.lower, iv.upper
    return "".join(out)


def quasi_greedy_delta(beta: BetaParam, n: int) -> str:
    """First ``n`` digits of the quasi-greedy expansion of 1 in base ``beta``."""
    if beta.kind == "word":
        return PeriodicSequence(beta.word).prefix(n)
    return _digits(_ONE, beta, n, strict=True)


def greedy_expansion(t, beta: BetaParam, n: int) -> str:
    """First ``n`` digits of the greedy expansion of ``t`` in [0, 1)."""
    t = Fraction(t)
    if not 0 <= t < 1:
        raise BetaHoleError(f"t must lie in [0,1), got {t}", "range")
    return _digits(t, beta, n, strict=False)


# --------------------------------------------------------------------------
# parsing

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")
_DECIMAL = re.compile(r"^\s*(\d*\.\d+|\d+\.\d*|\d+(?:\.\d*)?[eE][+-]?\d+)\s*(?:(?:±|\+-|\+/-)\s*(\S+))?\s*$")


def parse_beta(text: str, tol=None, precision: int | None = None) -> BetaParam:
    """Parse ``p/q``, an integer, ``word:<bits>``, a decimal (optionally ``±r``) or ``kl``.

    A bare decimal gets a radius of half a unit in its last place.  The
    upper end of an approximate enclosure is clipped to 2, the largest
    admissible base.
    """
    s = text.strip()
    if s.lower() == "kl":
        from .critical import komornik_loreti

        return BetaParam.from_interval(komornik_loreti(tol or Fraction(1, 10 ** 9)), precision)
    if s.startswith("word:"):
        return BetaParam.from_word(s[5:], precision)
    m = _RATIONAL.match(s)
    if m:
        if m.group(2) is not None and int(m.group(2)) == 0:
            raise BetaHoleError("zero denominator", "parse")
        return BetaParam.exact(Fraction(int(m.group(1)), int(m.group(2) or 1)), precision)
    m = _DECIMAL.match(s)
    if not m:
        raise BetaHoleError(f"cannot parse beta {text!r}", "parse")
    try:
        d = Decimal(m.group(1))
        mid = Fraction(d)
        if m.group(2):
            radius = Fraction(Decimal(m.group(2)))
        else:
            radius = Fraction(1, 2) * Fraction(10) ** d.as_tuple().exponent
    except (InvalidOperation, ValueError):
        raise BetaHoleError(f"cannot parse beta {text!r}", "parse") from None
    if radius <= 0:
        raise BetaHoleError("radius must be positive", "parse")
    lo, hi = mid - radius, min(mid + radius, _TWO)
    if not (lo > 1 and hi > lo):
        raise BetaHoleError(f"beta out of range (1,2]: {text}", "range")
    return BetaParam.approx((lo + hi) / 2, (hi - lo) / 2, precision)

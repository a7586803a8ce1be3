from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betahole.errors import AmbiguousError, BetaHoleError, PrecisionError
from betahole.numerics import (
    PRECISION_ENV,
    BetaParam,
    RealInterval,
    beta_from_perron_word,
    cmp_value_one,
    default_precision,
    eval_periodic,
    eval_periodic_at,
    greedy_expansion,
    parse_beta,
    quasi_greedy_delta,
)
from betahole.words import Order, PeriodicSequence, cyclic_max, lyndon_words

GOLDEN = 1.6180339887498949

betas = st.fractions(min_value=Fraction(1001, 1000), max_value=2, max_denominator=1000).filter(
    lambda b: b > 1)


def perron_words(max_len):
    return [cyclic_max(w) for n in range(2, max_len + 1) for w in lyndon_words(n)]


class TestRealInterval:
    def test_basics(self):
        iv = RealInterval(Fraction(1, 3), Fraction(1, 2))
        assert iv.width == Fraction(1, 6)
        assert Fraction(2, 5) in iv
        assert RealInterval.point(2).is_point
        with pytest.raises(BetaHoleError):
            RealInterval(1, 0)

    def test_cmp(self):
        a, b = RealInterval(0, 1), RealInterval(2, 3)
        assert a.cmp(b) is Order.LESS and b.cmp(a) is Order.GREATER
        assert a.cmp(RealInterval(1, 2)) is None
        assert RealInterval.point(1).cmp(RealInterval.point(1)) is Order.EQUAL

    def test_format(self):
        assert RealInterval.point(Fraction(127, 255)).fmt().startswith("127/255")
        assert RealInterval(Fraction(1, 3), Fraction(1, 2)).fmt(3) == "[0.333,0.5]"


class TestEval:
    def test_examples(self):
        assert eval_periodic("01", BetaParam.exact(2)) == RealInterval.point(Fraction(1, 3))
        assert eval_periodic("1", BetaParam.exact(2)) == RealInterval.point(1)
        assert eval_periodic(PeriodicSequence("0101"), BetaParam.exact(2)).lower == Fraction(1, 3)
        assert eval_periodic("01111111", BetaParam.exact(2)).lower == Fraction(127, 255)

    def test_closed_form_last_interval(self):
        rng = random.Random(7)
        for _ in range(200):
            m = rng.randint(2, 20)
            b = Fraction(rng.randint(1001, 2000), 1000)
            closed = (b ** (m - 1) - 1) / ((b - 1) * (b ** m - 1))
            assert eval_periodic_at("0" + "1" * (m - 1), b) == closed

    @given(st.text("01", min_size=1, max_size=12).filter(lambda w: "1" in w), betas, betas)
    @settings(max_examples=1000)
    def test_strictly_decreasing(self, w, b1, b2):
        if b1 == b2:
            return
        lo, hi = min(b1, b2), max(b1, b2)
        assert eval_periodic_at(w, lo) > eval_periodic_at(w, hi)

    def test_word_defined_enclosure_and_tol(self):
        beta = BetaParam.from_word("10")
        iv = eval_periodic("10", beta, tol=Fraction(1, 10 ** 30))
        assert 1 in iv and iv.width <= Fraction(1, 10 ** 30)

    def test_approx_enclosure(self):
        beta = BetaParam.approx(Fraction(3, 2), Fraction(1, 10 ** 6))
        iv = eval_periodic("01", beta)
        assert eval_periodic_at("01", Fraction(3, 2)) in iv


class TestCompareWithOne:
    def test_examples(self):
        assert cmp_value_one("10", BetaParam.from_word("10")) is Order.EQUAL
        assert cmp_value_one("10000000", BetaParam.exact(2)) is Order.LESS
        assert cmp_value_one("11111110", BetaParam.from_word("10100100")) is Order.GREATER
        assert cmp_value_one("1", BetaParam.exact(2)) is Order.EQUAL
        assert cmp_value_one("0", BetaParam.from_word("10")) is Order.LESS

    def test_exact_equality_at_rational_root(self):
        # (1)^inf has value exactly 1 at beta = 2
        assert cmp_value_one("11", BetaParam.exact(2)) is Order.EQUAL

    def test_approx_never_equal(self):
        g = beta_from_perron_word("10", Fraction(1, 10 ** 20))
        with pytest.raises(AmbiguousError) as e:
            cmp_value_one("10", BetaParam.approx(g.mid, Fraction(1, 10 ** 6)))
        assert e.value.code == "ambiguous"
        assert cmp_value_one("10", BetaParam.approx(Fraction(17, 10), Fraction(1, 10 ** 6))) is Order.LESS

    def test_non_perron_period_against_word_base(self):
        # (0011)^inf is not a Perron period: decided by interval refinement
        beta = BetaParam.from_word("110")
        num = eval_periodic("0011", beta)
        expect = Order.LESS if num.upper < 1 else Order.GREATER
        assert cmp_value_one("0011", beta) is expect

    @pytest.mark.parametrize("a", perron_words(10))
    def test_round_trip_perron(self, a):
        beta = BetaParam.from_word(a)
        assert cmp_value_one(a, beta) is Order.EQUAL
        enc = beta_from_perron_word(a, Fraction(1, 2 ** 60))
        assert eval_periodic_at(a, enc.upper) <= 1 <= eval_periodic_at(a, enc.lower)


class TestPerronBase:
    def test_golden(self):
        iv = beta_from_perron_word("10", Fraction(1, 10 ** 12))
        assert iv.width <= Fraction(1, 10 ** 12)
        assert abs(float(iv.mid) - GOLDEN) < 1e-12

    def test_errors(self):
        for bad in ("01", "1010", "1", "0"):
            with pytest.raises(BetaHoleError) as e:
                beta_from_perron_word(bad)
            assert e.value.code == "not-perron"
        with pytest.raises(BetaHoleError):
            BetaParam.from_word("0011")

    def test_ordering_example(self):
        tol = Fraction(1, 10 ** 12)
        a = beta_from_perron_word("11010100", tol)
        b = beta_from_perron_word("11011010", tol)
        c = beta_from_perron_word("11110110", tol)
        assert a.upper < b.lower and b.upper < c.lower

    def test_monotone_exhaustive(self):
        words = sorted(perron_words(9), key=lambda w: PeriodicSequence(w).prefix(72))
        encs = [beta_from_perron_word(w, Fraction(1, 2 ** 80)) for w in words]
        for w1, w2, e1, e2 in zip(words, words[1:], encs, encs[1:]):
            if PeriodicSequence(w1).prefix(72) == PeriodicSequence(w2).prefix(72):
                continue
            assert e1.upper < e2.lower, (w1, w2)


class TestDigits:
    def test_quasi_greedy_examples(self):
        assert quasi_greedy_delta(BetaParam.from_word("10"), 6) == "101010"
        assert quasi_greedy_delta(BetaParam.exact(2), 4) == "1111"
        assert quasi_greedy_delta(BetaParam.from_word("11010100"), 16) == "11010100" * 2

    def test_quasi_greedy_avoids_trailing_zeros_at_golden_like_rationals(self):
        # beta = 2: greedy expansion of 1 would be "1" then zeros; quasi-greedy is all ones
        assert quasi_greedy_delta(BetaParam.exact(2), 10) == "1" * 10

    def test_greedy_examples(self):
        assert greedy_expansion(Fraction(1, 2), BetaParam.exact(2), 3) == "100"
        assert greedy_expansion(0, BetaParam.exact(Fraction(3, 2)), 8) == "0" * 8
        assert greedy_expansion(Fraction(1, 3), BetaParam.exact(2), 6) == "010101"
        with pytest.raises(BetaHoleError):
            greedy_expansion(1, BetaParam.exact(2), 3)

    def test_interval_digits_agree_with_exact(self):
        b = Fraction(17, 10)
        approx = BetaParam.approx(b, Fraction(1, 10 ** 40))
        assert quasi_greedy_delta(approx, 40) == quasi_greedy_delta(BetaParam.exact(b), 40)

    def test_precision_error_for_coarse_input(self):
        approx = BetaParam.approx(Fraction(17, 10), Fraction(1, 10 ** 4))
        with pytest.raises(PrecisionError) as e:
            quasi_greedy_delta(approx, 200)
        assert e.value.code == "precision"

    @given(betas)
    @settings(max_examples=1000, deadline=None)
    def test_delta_admissible(self, b):
        n = 200
        d = quasi_greedy_delta(BetaParam.exact(b), n)
        for k in range(1, n):
            assert d[k:] <= d[:n - k]

    @given(betas, st.fractions(min_value=0, max_value=Fraction(999, 1000), max_denominator=1000))
    @settings(max_examples=300, deadline=None)
    def test_greedy_membership(self, b, t):
        n = 120
        d = quasi_greedy_delta(BetaParam.exact(b), n)
        g = greedy_expansion(t, BetaParam.exact(b), n)
        for k in range(n):
            tail = g[k:]
            assert tail <= d[:len(tail)]


class TestParsing:
    def test_kinds(self):
        assert parse_beta("3/2").kind == "exact"
        assert parse_beta("2").value == 2
        assert parse_beta("word:10").word == "10"
        b = parse_beta("1.5")
        assert b.kind == "approx" and b.radius == Fraction(1, 20)
        b = parse_beta("1.5±1e-6")
        assert b.radius == Fraction(1, 10 ** 6)
        assert parse_beta("1.5+-0.001").radius == Fraction(1, 1000)

    def test_clip_at_two(self):
        b = parse_beta("2.0")
        assert b.value + b.radius == 2 and b.value - b.radius == Fraction(195, 100)

    def test_kl(self):
        b = parse_beta("kl", Fraction(1, 10 ** 8))
        assert abs(float(b.value) - 1.78723165) < 1e-7

    def test_errors(self):
        for bad in ("1.0", "1", "3", "0/1", "1/0", "abc", "word:0011", "2.5", "5/2", "2.1"):
            with pytest.raises(BetaHoleError):
                parse_beta(bad)
        with pytest.raises(BetaHoleError) as e:
            parse_beta("1.0")
        assert e.value.code == "range"

    def test_precision_env(self, monkeypatch):
        monkeypatch.setenv(PRECISION_ENV, "256")
        assert default_precision() == 256
        assert BetaParam.from_word("10").precision == 256
        monkeypatch.setenv(PRECISION_ENV, "x")
        with pytest.raises(BetaHoleError):
            default_precision()
        monkeypatch.delenv(PRECISION_ENV)
        assert default_precision() == 128

from __future__ import annotations

from fractions import Fraction
from math import gcd

import pytest

from betahole.chains import (
    Chain,
    chain_anchor,
    chain_cmp,
    chain_from_rationals,
    chain_rationals,
    chain_successor,
    chain_word,
    enumerate_chains,
    interval_type,
    psi,
    rational_vector_cmp,
)
from betahole.errors import BetaHoleError
from betahole.words import Order, PeriodicSequence, is_lyndon, is_perron, lex_cmp_periodic

M8 = [(8, 1), (8, 2, 1), (8, 3), (8, 4, 1), (8, 4, 2, 1), (8, 4, 3), (8, 5), (8, 6, 1), (8, 7)]


def test_m8_order():
    assert [c.vector for c in enumerate_chains(8)] == M8


def test_small_cases():
    assert enumerate_chains(2) == [Chain.of(2, 1)]
    assert [c.vector for c in enumerate_chains(5)] == [(5, 1), (5, 2), (5, 3), (5, 4)]
    with pytest.raises(BetaHoleError):
        enumerate_chains(1)


def test_psi_values():
    assert psi(8) == 9
    assert psi(2) == 1
    assert psi(1) == 1
    for p in (3, 5, 7, 11, 13, 97):
        assert psi(p) == p - 1
    # frozen from the recurrence
    assert [psi(n) for n in range(1, 21)] == [1, 1, 2, 3, 4, 6, 6, 9, 10, 12, 10, 22, 12, 18, 24,
                                              27, 16, 38, 18, 44]
    with pytest.raises(BetaHoleError):
        psi(0)


def _psi_direct(n):
    if n == 1:
        return 1
    return sum(_psi_direct(gcd(n, k)) for k in range(1, n))


def test_psi_matches_unmemoised_recurrence():
    for n in range(1, 41):
        assert psi(n) == _psi_direct(n)


def test_counts_up_to_100():
    for m in range(2, 101):
        assert len(enumerate_chains(m)) == psi(m)


class TestChainType:
    def test_validation(self):
        for bad in [(8, (4, 2)), (8, (8,)), (8, (0,)), (8, (2, 1, 1)), (8, ()), (1, (1,)), (8, (4, 3, 1))]:
            with pytest.raises(BetaHoleError):
                Chain(*bad)

    def test_ladder(self):
        c = Chain.of(8, 4, 2, 1)
        assert c.ms == (8, 4, 2)
        assert str(c) == "8,4,2,1"
        assert Chain.parse("(8,4,2,1)") == c
        assert Chain.of(12, 8, 2, 1).ms == (12, 4, 2)


@pytest.mark.parametrize("vec,word", [
    ((8, 1), "00000001"), ((8, 2, 1), "00001001"), ((8, 3), "00100101"), ((8, 4, 1), "00101011"),
    ((8, 4, 2, 1), "00101101"), ((8, 4, 3), "00110101"), ((8, 5), "01011011"),
    ((8, 6, 1), "01101111"), ((8, 7), "01111111"),
])
def test_m8_words(vec, word):
    assert chain_word(Chain(vec[0], vec[1:])) == word


def test_m8_anchors():
    assert [chain_anchor(c) for c in enumerate_chains(8)] == [
        "10000000", "10010000", "10100100", "11001010", "11010010",
        "11010100", "11011010", "11110110", "11111110"]


def test_trivial_word():
    for m in range(2, 20):
        assert chain_word(Chain.of(m, 1)) == "0" * (m - 1) + "1"


def test_cmp():
    assert chain_cmp(Chain.of(8, 4, 1), Chain.of(8, 4, 2, 1)) is Order.LESS
    assert chain_cmp(Chain.of(8, 4, 3), Chain.of(8, 5)) is Order.LESS
    assert chain_cmp(Chain.of(8, 5), Chain.of(8, 5)) is Order.EQUAL
    with pytest.raises(BetaHoleError) as e:
        chain_cmp(Chain.of(8, 5), Chain.of(7, 5))
    assert e.value.code == "modulus"


def test_successor_examples():
    assert chain_successor(Chain.of(8, 4, 2, 1)) == Chain.of(8, 4, 3)
    assert chain_successor(Chain.of(8, 1)) == Chain.of(8, 2, 1)
    assert chain_successor(Chain.of(10, 5, 4)) == Chain.of(10, 6, 1)
    assert chain_successor(Chain.of(8, 7)) is None


@pytest.mark.parametrize("m", range(2, 61))
def test_successor_walks_enumeration(m):
    chains = enumerate_chains(m)
    for a, b in zip(chains, chains[1:]):
        assert chain_successor(a) == b
        assert chain_cmp(a, b) is Order.LESS
    assert chain_successor(chains[-1]) is None


def test_rationals():
    assert chain_rationals(Chain.of(8, 4, 2, 1)) == [Fraction(1, 2)] * 3
    assert chain_rationals(Chain.of(10, 5, 2)) == [Fraction(1, 2), Fraction(2, 5)]
    assert chain_rationals(Chain.of(5, 2)) == [Fraction(2, 5)]
    assert chain_from_rationals([Fraction(1, 2)] * 3) == Chain.of(8, 4, 2, 1)
    assert chain_from_rationals([Fraction(1, 2), Fraction(2, 5)]) == Chain.of(10, 5, 2)


@pytest.mark.parametrize("m", range(2, 31))
def test_from_rationals_round_trip(m):
    for c in enumerate_chains(m):
        assert chain_from_rationals(chain_rationals(c)) == c


def test_vector_cmp():
    h = Fraction(1, 2)
    assert rational_vector_cmp([h, h, h], [h, h]) is Order.EQUAL
    assert rational_vector_cmp([Fraction(2, 5)], [Fraction(1, 3)]) is Order.GREATER


def test_interval_types_m10():
    types = {c.vector: interval_type(c) for c in enumerate_chains(10)}
    expected = {
        "A": [(10, 5, 1), (10, 5, 2), (10, 5, 3)],
        "B": [(10, 1), (10, 3), (10, 7)],
        "C": [(10, 2, 1), (10, 6, 1), (10, 8, 1)],
        "D": [(10, 4, 1), (10, 5, 4)],
        "last": [(10, 9)],
    }
    for t, vecs in expected.items():
        for v in vecs:
            assert types[v] == t


@pytest.mark.parametrize("m", range(2, 31))
def test_words_and_anchor_order(m):
    prev = None
    for c in enumerate_chains(m):
        w = chain_word(c)
        assert len(w) == m and is_lyndon(w)
        a = chain_anchor(c)
        assert is_perron(a)
        cur = PeriodicSequence(a)
        if prev is not None:
            assert lex_cmp_periodic(prev, cur) is Order.LESS
        prev = cur

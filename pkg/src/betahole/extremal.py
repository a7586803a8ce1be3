"""Extremal Lyndon and Perron words with ``m`` letters and ``k`` ones.

``max_lyndon`` and ``min_perron`` use closed formulas in Farey words and
the substitution operator; ``brute_max_lyndon`` and ``brute_min_perron``
enumerate and serve as the independent check.  The block recodings
``phi_*``/``psi_*`` are renormalisation maps used by the property tests;
the ternary ``phi2_substitute``/``psi2_substitute`` are proof machinery
kept out of ``__all__``.
"""

from __future__ import annotations

from math import gcd

from .bullet import bullet
from .errors import BetaHoleError, OracleBoundError
from .words import check_word, cyclic_max, farey_word, lyndon_words, substitute_U

__all__ = [
    "max_lyndon",
    "min_perron",
    "brute_max_lyndon",
    "brute_min_perron",
    "lyndon_mk",
    "lyndon_all",
    "phi_substitute",
    "phi_inverse",
    "psi_substitute",
    "psi_inverse",
]

ORACLE_BOUND = 18


def _check_mk(m: int, k: int) -> None:
    if m < 2 or not 1 <= k < m:
        raise BetaHoleError(f"need m >= 2 and 1 <= k < m, got m={m}, k={k}", "range")


def max_lyndon(m: int, k: int) -> str:
    _check_mk(m, k)
    d = gcd(m, k)
    w = farey_word(k, m)
    return w if d == 1 else bullet(w, "0" + "1" * (d - 1))


def min_perron(m: int, k: int) -> str:
    _check_mk(m, k)
    d = gcd(m, k)
    w = farey_word(k, m)
    return cyclic_max(w) if d == 1 else bullet(w, "1" + "0" * (d - 1))


def lyndon_mk(m: int, k: int, bound: int = ORACLE_BOUND) -> list[str]:
    """Lyndon words of length ``m`` with exactly ``k`` ones, increasing."""
    if m > bound:
        raise OracleBoundError(f"enumeration of length {m} exceeds the bound {bound}")
    return [w for w in lyndon_words(m) if w.count("1") == k]


def lyndon_all(k: int, bound: int = ORACLE_BOUND) -> list[str]:
    """All Lyndon words of length ``k`` (every count of ones)."""
    if k > bound:
        raise OracleBoundError(f"enumeration of length {k} exceeds the bound {bound}")
    return list(lyndon_words(k))


def brute_max_lyndon(m: int, k: int, bound: int = ORACLE_BOUND) -> str:
    _check_mk(m, k)
    return max(lyndon_mk(m, k, bound))


def brute_min_perron(m: int, k: int, bound: int = ORACLE_BOUND) -> str:
    _check_mk(m, k)
    return min(cyclic_max(w) for w in lyndon_mk(m, k, bound))


def _parse_runs(w: str, table: dict[int, str], leading_one: bool) -> str:
    """Recode ``w`` block by block via the zero-run length of each block.

    Blocks are ``0^i 1`` (or ``1 0^i`` when ``leading_one``); the admissible
    run lengths are the keys of ``table``.
    """
    check_word(w)
    if leading_one:
        if not w or w[0] != "1":
            raise BetaHoleError(f"cannot parse {w!r} into blocks 10^i", "block-parse")
        runs = [len(b) for b in w[1:].split("1")]
    else:
        if not w or w[-1] != "1":
            raise BetaHoleError(f"cannot parse {w!r} into blocks 0^i1", "block-parse")
        runs = [len(b) for b in w[:-1].split("1")]
    try:
        return "".join(table[i] for i in runs)
    except KeyError:
        raise BetaHoleError(f"cannot parse {w!r} with run lengths {sorted(table)}",
                            "block-parse") from None


def _check_q(q: int, least: int = 0) -> None:
    if q < least:
        raise BetaHoleError(f"q must be >= {least}, got {q}", "range")


def phi_substitute(q: int, w: str) -> str:
    """``0^{q+1}1 -> 0`` and ``0^q 1 -> 1``."""
    _check_q(q)
    return _parse_runs(w, {q + 1: "0", q: "1"}, leading_one=False)


def psi_substitute(q: int, w: str) -> str:
    """``1 0^{q+1} -> 0`` and ``1 0^q -> 1``."""
    _check_q(q)
    return _parse_runs(w, {q + 1: "0", q: "1"}, leading_one=True)


def phi_inverse(q: int, w: str) -> str:
    _check_q(q)
    # the inverse block map is U_{0^q 1}
    return substitute_U("0" * q + "1", w)


def psi_inverse(q: int, w: str) -> str:
    _check_q(q)
    check_word(w)
    return "".join("1" + "0" * (q + 1) if c == "0" else "1" + "0" * q for c in w)


def phi2_substitute(q: int, w: str) -> str:
    """Ternary recoding ``0^{q+1}1 -> 0``, ``0^q 1 -> 1``, ``0^{q-1}1 -> 2``."""
    _check_q(q, 1)
    return _parse_runs(w, {q + 1: "0", q: "1", q - 1: "2"}, leading_one=False)


def psi2_substitute(q: int, w: str) -> str:
    """Ternary recoding ``1 0^{q+1} -> 0``, ``1 0^q -> 1``, ``1 0^{q-1} -> 2``."""
    _check_q(q, 1)
    return _parse_runs(w, {q + 1: "0", q: "1", q - 1: "2"}, leading_one=True)

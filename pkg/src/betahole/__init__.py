"""Critical hole sizes for periodic orbits of beta-transformations with a hole at zero.

The package is layered: :mod:`words` (binary words, Farey and Lyndon
words), :mod:`bullet` (the substitution operator), :mod:`extremal`,
:mod:`chains` (admissible chains), :mod:`numerics` (exact and certified
real arithmetic), :mod:`critical` (the critical value) and :mod:`oracle`
(brute-force cross-checks).
"""

from __future__ import annotations

__version__ = "0.1.0"

from .bullet import bullet, bullet_fold, bullet_periodic
from .chains import Chain, chain_anchor, chain_successor, chain_word, enumerate_chains, psi
from .critical import classify_beta, komornik_loreti, partition_table, tau, theta, theta_tilde
from .errors import AmbiguousError, BetaHoleError, OracleBoundError, PrecisionError
from .extremal import max_lyndon, min_perron
from .numerics import BetaParam, RealInterval, beta_from_perron_word, parse_beta
from .words import PeriodicSequence, EventuallyPeriodicSequence, farey_word

__all__ = [
    "AmbiguousError",
    "BetaHoleError",
    "BetaParam",
    "Chain",
    "EventuallyPeriodicSequence",
    "OracleBoundError",
    "PeriodicSequence",
    "PrecisionError",
    "RealInterval",
    "beta_from_perron_word",
    "bullet",
    "bullet_fold",
    "bullet_periodic",
    "chain_anchor",
    "chain_successor",
    "chain_word",
    "classify_beta",
    "enumerate_chains",
    "farey_word",
    "komornik_loreti",
    "max_lyndon",
    "min_perron",
    "parse_beta",
    "partition_table",
    "psi",
    "tau",
    "theta",
    "theta_tilde",
]

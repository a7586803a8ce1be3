"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` (for example
``"digit-bump-domain"`` or ``"ambiguous"``) so the CLI can map failures
to exit codes without string matching on messages.
"""

from __future__ import annotations


class BetaHoleError(ValueError):
    """Base class: a domain or precondition violation."""

    code = "domain"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class AmbiguousError(BetaHoleError):
    """An approximate base is too coarse to decide a comparison."""

    code = "ambiguous"

    def __init__(self, message: str, chain=None):
        super().__init__(message)
        self.chain = chain


class PrecisionError(BetaHoleError):
    """A certified comparison could not be resolved at the precision ceiling."""

    code = "precision"


class OracleBoundError(BetaHoleError):
    """A brute-force enumeration was asked to exceed its configured size."""

    code = "oracle-bound"

"""Series evaluation controls, results, and the error types shared by every engine."""
from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_REL_TOL = 1e-12
DEFAULT_ABS_TOL = 1e-300
DEFAULT_MAX_TERMS = 100_000

# Kernel status codes (returned by _kernels, mapped to exceptions/flags here).
STATUS_OK = 0
STATUS_MAX_TERMS = 1
STATUS_DIVERGED = 2


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ConvergenceError(ArithmeticError):
    """The requested value has no convergent series representation here."""


@dataclass(frozen=True)
class SeriesControl:
    """Termination policy for a series summation.

    rel_tol is measured term-to-partial-sum; abs_tol is an absolute floor;
    max_terms caps each summation index.
    """

    rel_tol: float = DEFAULT_REL_TOL
    abs_tol: float = DEFAULT_ABS_TOL
    max_terms: int = DEFAULT_MAX_TERMS

    def __post_init__(self) -> None:
        if not self.rel_tol > 0.0:
            raise DomainError("rel_tol must be > 0, got %r" % (self.rel_tol,))
        if self.abs_tol < 0.0:
            raise DomainError("abs_tol must be >= 0, got %r" % (self.abs_tol,))
        if self.max_terms < 1:
            raise DomainError("max_terms must be >= 1, got %r" % (self.max_terms,))


@dataclass(frozen=True)
class SeriesResult:
    """Value of a truncated series plus how it was reached.

    est_error is the magnitude of the last accepted term (or a tail bound);
    converged=False means the tolerance was not met within max_terms and the
    value must not be trusted silently.
    """

    value: float
    terms_used: int
    est_error: float
    converged: bool


def default_control() -> SeriesControl:
    """Default SeriesControl, honoring the COMPFADE_MAX_TERMS override."""
    raw = os.environ.get("COMPFADE_MAX_TERMS")
    if raw is None:
        return SeriesControl()
    try:
        max_terms = int(raw)
    except ValueError:
        raise DomainError("COMPFADE_MAX_TERMS must be an integer, got %r" % raw)
    return SeriesControl(max_terms=max_terms)

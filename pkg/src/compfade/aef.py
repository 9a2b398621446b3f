"""Analytical densities of the alpha-eta-F composite fading distribution.

AefDist models the instantaneous SNR with mean gamma_bar: snr_pdf, the
snr_cdf series with controllable truncation, and a closed-form upper bound
on the CDF truncation error. AefEnvelope models the signal envelope R with
mean power omega_power = E[R^2].

The CDF series is summed as a mixture of regularized incomplete beta
functions with positive weights that sum to one, which is an exact
reformulation of the term-by-term integrated PDF series and stays convergent
for arbitrarily large arguments.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import _kernels as _k
from . import params as _params
from .params import AefParams, Geometry
from .series import (
    STATUS_DIVERGED,
    STATUS_OK,
    ConvergenceError,
    DomainError,
    SeriesControl,
    SeriesResult,
    default_control,
)

__all__ = ["AefDist", "AefEnvelope", "validation_grid"]

# Axes of the standard 81-point parameter grid used by the validation
# battery (gamma_bar = 1 throughout; eta is Format I).
VALIDATION_ALPHAS = (1.0, 2.0, 3.5)
VALIDATION_ETAS = (0.2, 1.0, 5.0)
VALIDATION_MUS = (0.5, 1.0, 2.5)
VALIDATION_MS = (2.1, 5.0, 30.0)


def validation_grid() -> tuple:
    """Standard alpha-eta-F parameter grid; points whose mean-power moment
    does not exist (ms <= 2/alpha) are skipped."""
    out = []
    for alpha in VALIDATION_ALPHAS:
        for eta in VALIDATION_ETAS:
            for mu in VALIDATION_MUS:
                for ms in VALIDATION_MS:
                    if ms <= 2.0 / alpha:
                        continue
                    out.append(AefParams(alpha=alpha, eta=eta, mu=mu, ms=ms))
    return tuple(out)


def _lbeta(a: float, b: float) -> float:
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


@dataclass(frozen=True)
class AefDist:
    """alpha-eta-F instantaneous-SNR distribution with mean SNR gamma_bar."""

    params: AefParams
    gamma_bar: float
    geometry: Geometry = field(init=False, repr=False)
    upsilon: float = field(init=False, repr=False)
    _hsq: float = field(init=False, repr=False)
    _ln_lam: float = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not (self.gamma_bar > 0.0 and math.isfinite(self.gamma_bar)):
            raise DomainError(f"gamma_bar must be positive, got {self.gamma_bar}")
        geo = _params.geometry(self.params)
        ups = _params.upsilon(self.params)
        p = self.params
        object.__setattr__(self, "geometry", geo)
        object.__setattr__(self, "upsilon", ups)
        object.__setattr__(self, "_hsq", geo.H * geo.H)
        object.__setattr__(
            self,
            "_ln_lam",
            math.log(p.ms - 1.0)
            + math.log(ups)
            + 0.5 * p.alpha * math.log(self.gamma_bar),
        )

    def _pdf_at_zero(self) -> float:
        p = self.params
        am = p.alpha * p.mu
        if am > 1.0:
            return 0.0
        if am < 1.0:
            return math.inf
        ln_f0 = (
            math.log(p.alpha)
            + (2.0 * p.mu - 1.0) * math.log(2.0)
            + 2.0 * p.mu * math.log(p.mu)
            + p.mu * math.log(self.geometry.h)
            - _lbeta(2.0 * p.mu, p.ms)
            - 2.0 * p.mu * self._ln_lam
        )
        return math.exp(ln_f0)

    def snr_pdf(self, gamma: float, ctrl: SeriesControl | None = None) -> float:
        """Density of the instantaneous SNR at gamma >= 0."""
        if not gamma >= 0.0:
            raise DomainError(f"gamma must be non-negative, got {gamma}")
        if gamma == 0.0:
            return self._pdf_at_zero()
        if ctrl is None:
            ctrl = default_control()
        p = self.params
        value, status = _k.aef_snr_pdf_kernel(
            p.alpha, p.mu, p.ms, self.geometry.h, self._hsq, self._ln_lam,
            float(gamma), ctrl.rel_tol, ctrl.abs_tol, ctrl.max_terms,
        )
        if status != STATUS_OK:
            raise ConvergenceError("snr_pdf: embedded hypergeometric did not converge")
        return value

    def snr_cdf(self, gamma: float, ctrl: SeriesControl | None = None) -> SeriesResult:
        """CDF of the instantaneous SNR at gamma >= 0, as a truncated series.

        The returned value is clamped to [0, 1] after convergence; any
        clamping adjustment is added to est_error.
        """
        if not gamma >= 0.0:
            raise DomainError(f"gamma must be non-negative, got {gamma}")
        if gamma == 0.0:
            return SeriesResult(value=0.0, terms_used=0, est_error=0.0, converged=True)
        if ctrl is None:
            ctrl = default_control()
        p = self.params
        raw, terms, est, status = _k.aef_snr_cdf_kernel(
            p.alpha, p.mu, p.ms, self.geometry.h, self._hsq, self._ln_lam,
            float(gamma), ctrl.rel_tol, ctrl.abs_tol, ctrl.max_terms,
        )
        value = min(max(raw, 0.0), 1.0)
        return SeriesResult(
            value=value,
            terms_used=terms,
            est_error=est + abs(raw - value),
            converged=(status == STATUS_OK),
        )

    def cdf_truncation_bound(self, gamma: float, k0: int) -> float:
        """Upper bound on the CDF-series remainder after its first k0 terms
        (series indices k = 0 .. k0 - 1 kept)."""
        if not gamma >= 0.0:
            raise DomainError(f"gamma must be non-negative, got {gamma}")
        if k0 < 1 or k0 != int(k0):
            raise DomainError(f"k0 must be an integer >= 1, got {k0}")
        if gamma == 0.0:
            return 0.0
        ctrl = default_control()
        p = self.params
        value, status = _k.aef_cdf_bound_kernel(
            p.alpha, p.mu, p.ms, self.geometry.h, self._hsq, self._ln_lam,
            float(gamma), int(k0), ctrl.rel_tol, ctrl.abs_tol, ctrl.max_terms,
        )
        if status == STATUS_DIVERGED:
            raise ConvergenceError(
                "cdf_truncation_bound: the bounding series diverges here "
                "(its hypergeometric argument reaches 1); tighten gamma or "
                "use the direct series remainder"
            )
        if status != STATUS_OK:
            raise ConvergenceError("cdf_truncation_bound: series did not converge")
        return value


@dataclass(frozen=True)
class AefEnvelope:
    """alpha-eta-F signal envelope with mean power omega_power = E[R^2]."""

    params: AefParams
    omega_power: float
    geometry: Geometry = field(init=False, repr=False)
    upsilon: float = field(init=False, repr=False)
    _hsq: float = field(init=False, repr=False)
    _ln_lam: float = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not (self.omega_power > 0.0 and math.isfinite(self.omega_power)):
            raise DomainError(f"omega_power must be positive, got {self.omega_power}")
        geo = _params.geometry(self.params)
        ups = _params.upsilon(self.params)
        p = self.params
        object.__setattr__(self, "geometry", geo)
        object.__setattr__(self, "upsilon", ups)
        object.__setattr__(self, "_hsq", geo.H * geo.H)
        object.__setattr__(
            self,
            "_ln_lam",
            math.log(p.ms - 1.0)
            + math.log(ups)
            + 0.5 * p.alpha * math.log(self.omega_power),
        )

    def envelope_pdf(self, r: float, ctrl: SeriesControl | None = None) -> float:
        """Density of the signal envelope at r >= 0."""
        if not r >= 0.0:
            raise DomainError(f"r must be non-negative, got {r}")
        p = self.params
        if r == 0.0:
            am2 = 2.0 * p.alpha * p.mu
            if am2 > 1.0:
                return 0.0
            if am2 < 1.0:
                return math.inf
            ln_f0 = (
                math.log(p.alpha)
                + 2.0 * p.mu * math.log(2.0)
                + 2.0 * p.mu * math.log(p.mu)
                + p.mu * math.log(self.geometry.h)
                - _lbeta(2.0 * p.mu, p.ms)
                - 2.0 * p.mu * self._ln_lam
            )
            return math.exp(ln_f0)
        if ctrl is None:
            ctrl = default_control()
        value, status = _k.aef_envelope_pdf_kernel(
            p.alpha, p.mu, p.ms, self.geometry.h, self._hsq, self._ln_lam,
            float(r), ctrl.rel_tol, ctrl.abs_tol, ctrl.max_terms,
        )
        if status != STATUS_OK:
            raise ConvergenceError(
                "envelope_pdf: embedded hypergeometric did not converge"
            )
        return value

"""Analytical densities of the alpha-kappa-F composite fading distribution.

AkfDist models the instantaneous SNR with mean gamma_bar: snr_pdf, the
snr_cdf_series (a Poisson-weighted mixture of regularized incomplete betas,
an exact reformulation of the integrated PDF series), and snr_cdf_closed,
which dispatches between two closed forms: a Kampe de Feriet expression on
the small-argument side and a two-term Humbert Psi1 expression on the
large-argument side. AkfEnvelope models the signal envelope R with mean
power omega_power = E[R^2].

kappa below params.KAPPA_ZERO_CUTOFF routes through exact kappa -> 0 limit
forms (the alpha-F distribution).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import _kernels as _k
from . import params as _params
from .params import AkfParams
from .series import (
    STATUS_OK,
    ConvergenceError,
    DomainError,
    SeriesControl,
    SeriesResult,
    default_control,
)

__all__ = ["AkfDist", "AkfEnvelope", "validation_grid"]

# relative half-width of the guard band around the closed-form case boundary
# X1 = 1: inside it the Humbert/Kampe arguments approach magnitude 1 and the
# double series converge arbitrarily slowly, so the mixture series is used
CLOSED_FORM_GUARD = 0.05

# Axes of the standard 81-point parameter grid used by the validation
# battery (gamma_bar = 1 throughout).
VALIDATION_ALPHAS = (1.0, 2.0, 3.5)
VALIDATION_KAPPAS = (0.1, 1.0, 5.0)
VALIDATION_MUS = (0.5, 1.0, 2.5)
VALIDATION_MS = (2.1, 5.0, 30.0)


def validation_grid() -> tuple:
    """Standard alpha-kappa-F parameter grid; points whose mean-power moment
    does not exist (ms <= 2/alpha) are skipped."""
    out = []
    for alpha in VALIDATION_ALPHAS:
        for kappa in VALIDATION_KAPPAS:
            for mu in VALIDATION_MUS:
                for ms in VALIDATION_MS:
                    if ms <= 2.0 / alpha:
                        continue
                    out.append(AkfParams(alpha=alpha, kappa=kappa, mu=mu, ms=ms))
    return tuple(out)


def _lbeta(a: float, b: float) -> float:
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


def _clamped(raw: float, terms: int, est: float, converged: bool) -> SeriesResult:
    value = min(max(raw, 0.0), 1.0)
    return SeriesResult(
        value=value,
        terms_used=terms,
        est_error=est + abs(raw - value),
        converged=converged,
    )


@dataclass(frozen=True)
class AkfDist:
    """alpha-kappa-F instantaneous-SNR distribution with mean SNR gamma_bar."""

    params: AkfParams
    gamma_bar: float
    omega_norm: float = field(init=False, repr=False)
    _ln_lam: float = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not (self.gamma_bar > 0.0 and math.isfinite(self.gamma_bar)):
            raise DomainError(f"gamma_bar must be positive, got {self.gamma_bar}")
        p = self.params
        om = _params.omega(p)
        object.__setattr__(self, "omega_norm", om)
        object.__setattr__(
            self,
            "_ln_lam",
            math.log(p.ms - 1.0)
            + math.log(om)
            + 0.5 * p.alpha * math.log(self.gamma_bar),
        )

    def _pdf_at_zero(self) -> float:
        p = self.params
        am = p.alpha * p.mu
        if am > 2.0:
            return 0.0
        if am < 2.0:
            return math.inf
        ln_f0 = (
            math.log(p.alpha)
            + p.mu * math.log(p.mu)
            - math.log(2.0)
            - _lbeta(p.mu, p.ms)
            - p.mu * self._ln_lam
        )
        if p.kappa >= _params.KAPPA_ZERO_CUTOFF:
            ln_f0 += p.mu * math.log1p(p.kappa) - p.mu * p.kappa
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
        value, status = _k.akf_snr_pdf_kernel(
            p.alpha, p.mu, p.ms, p.kappa, self._ln_lam,
            float(gamma), ctrl.rel_tol, ctrl.abs_tol, ctrl.max_terms,
        )
        if status != STATUS_OK:
            raise ConvergenceError("snr_pdf: embedded hypergeometric did not converge")
        return value

    def snr_cdf_series(
        self, gamma: float, ctrl: SeriesControl | None = None
    ) -> SeriesResult:
        """CDF of the instantaneous SNR as the Poisson-weighted mixture series.

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
        raw, terms, est, status = _k.akf_snr_cdf_kernel(
            p.alpha, p.mu, p.ms, p.kappa, self._ln_lam,
            float(gamma), ctrl.rel_tol, ctrl.abs_tol, ctrl.max_terms,
        )
        return _clamped(raw, terms, est, status == STATUS_OK)

    def _ln_x1(self, gamma: float) -> float:
        p = self.params
        return (
            math.log(p.mu * (1.0 + p.kappa))
            + 0.5 * p.alpha * math.log(gamma)
            - self._ln_lam
        )

    def snr_cdf_closed(
        self, gamma: float, ctrl: SeriesControl | None = None
    ) -> SeriesResult:
        """CDF via the closed forms, dispatched on X1 = mu(1+kappa)gamma^(alpha/2)
        / ((ms-1) omega gamma_bar^(alpha/2)).

        X1 < 1 uses the Kampe de Feriet form, X1 > 1 the two-term Humbert Psi1
        form; within the +-5% guard band around X1 = 1 both double series
        degrade, so the mixture series is evaluated instead.
        """
        if not gamma >= 0.0:
            raise DomainError(f"gamma must be non-negative, got {gamma}")
        if gamma == 0.0:
            return SeriesResult(value=0.0, terms_used=0, est_error=0.0, converged=True)
        if ctrl is None:
            ctrl = default_control()
        p = self.params
        ln_x1 = self._ln_x1(gamma)
        x1 = math.exp(ln_x1)
        mk = p.mu * p.kappa
        if x1 < 1.0 - CLOSED_FORM_GUARD:
            ln_f, sgn, terms, est_rel, status = _k.kdf_2_1_ln(
                p.mu + p.ms, p.mu, p.mu + 1.0, p.mu, mk * x1, -x1,
                ctrl.rel_tol, ctrl.abs_tol, ctrl.max_terms,
            )
            if status == 2:
                raise ConvergenceError("snr_cdf_closed: Kampe de Feriet series diverged")
            ln_lead = -mk - math.log(p.mu) - _lbeta(p.mu, p.ms) + p.mu * ln_x1
            raw = sgn * math.exp(ln_lead + ln_f)
            return _clamped(raw, terms, est_rel * abs(raw), status == STATUS_OK)
        if x1 > 1.0 + CLOSED_FORM_GUARD:
            v = math.exp(-ln_x1)
            ln1, s1, t1, e1, st1 = _k.humbert_psi1_ln(
                p.mu, 0.0, 1.0 - p.ms, p.mu, -v, mk,
                ctrl.rel_tol, ctrl.abs_tol, ctrl.max_terms,
            )
            ln2, s2, t2, e2, st2 = _k.humbert_psi1_ln(
                p.mu + p.ms, p.ms, 1.0 + p.ms, p.mu, -v, mk,
                ctrl.rel_tol, ctrl.abs_tol, ctrl.max_terms,
            )
            if st1 == 2 or st2 == 2:
                raise ConvergenceError("snr_cdf_closed: Humbert series diverged")
            term1 = s1 * math.exp(-mk + ln1)
            ln_c2 = -mk - math.log(p.ms) - _lbeta(p.mu, p.ms) - p.ms * ln_x1
            term2 = s2 * math.exp(ln_c2 + ln2)
            raw = term1 - term2
            est = e1 * abs(term1) + e2 * abs(term2)
            return _clamped(raw, t1 + t2, est, st1 == STATUS_OK and st2 == STATUS_OK)
        return self.snr_cdf_series(gamma, ctrl)


@dataclass(frozen=True)
class AkfEnvelope:
    """alpha-kappa-F signal envelope with mean power omega_power = E[R^2]."""

    params: AkfParams
    omega_power: float
    omega_norm: float = field(init=False, repr=False)
    _ln_lam: float = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not (self.omega_power > 0.0 and math.isfinite(self.omega_power)):
            raise DomainError(f"omega_power must be positive, got {self.omega_power}")
        p = self.params
        om = _params.omega(p)
        object.__setattr__(self, "omega_norm", om)
        object.__setattr__(
            self,
            "_ln_lam",
            math.log(p.ms - 1.0)
            + math.log(om)
            + 0.5 * p.alpha * math.log(self.omega_power),
        )

    def envelope_pdf(self, r: float, ctrl: SeriesControl | None = None) -> float:
        """Density of the signal envelope at r >= 0."""
        if not r >= 0.0:
            raise DomainError(f"r must be non-negative, got {r}")
        p = self.params
        if r == 0.0:
            am = p.alpha * p.mu
            if am > 1.0:
                return 0.0
            if am < 1.0:
                return math.inf
            ln_f0 = (
                math.log(p.alpha)
                + p.mu * math.log(p.mu)
                - _lbeta(p.mu, p.ms)
                - p.mu * self._ln_lam
            )
            if p.kappa >= _params.KAPPA_ZERO_CUTOFF:
                ln_f0 += p.mu * math.log1p(p.kappa) - p.mu * p.kappa
            return math.exp(ln_f0)
        if ctrl is None:
            ctrl = default_control()
        value, status = _k.akf_envelope_pdf_kernel(
            p.alpha, p.mu, p.ms, p.kappa, self._ln_lam,
            float(r), ctrl.rel_tol, ctrl.abs_tol, ctrl.max_terms,
        )
        if status != STATUS_OK:
            raise ConvergenceError(
                "envelope_pdf: embedded hypergeometric did not converge"
            )
        return value

"""Outage probability, high-SNR asymptotics, and coding/diversity gains.

The outage probability at threshold gamma_th is the SNR CDF evaluated there.
The asymptotic forms are the leading power-law terms as gamma_bar -> inf;
gains() factors them as (G_c gamma_bar)^(-G_d) with diversity gain G_d =
alpha mu (alpha-eta-F) or alpha mu / 2 (alpha-kappa-F).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .aef import AefDist
from .akf import AkfDist
from .series import DomainError, SeriesControl, SeriesResult

__all__ = [
    "GainPair",
    "outage",
    "asymptotic_outage_aef",
    "asymptotic_outage_akf",
    "gains",
]


def _lbeta(a: float, b: float) -> float:
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


@dataclass(frozen=True)
class GainPair:
    """Coding gain gc (linear SNR units) and diversity gain gd (slope)."""

    gc: float
    gd: float

    def __post_init__(self) -> None:
        if not (self.gc > 0.0 and self.gd > 0.0):
            raise DomainError(f"gains must be positive, got gc={self.gc}, gd={self.gd}")


def _check_threshold(gamma_th: float) -> None:
    if not (gamma_th > 0.0 and math.isfinite(gamma_th)):
        raise DomainError(f"gamma_th must be positive, got {gamma_th}")


def outage(
    dist: AefDist | AkfDist,
    gamma_th: float,
    ctrl: SeriesControl | None = None,
) -> SeriesResult:
    """Outage probability P[gamma < gamma_th], delegated to the family CDF."""
    _check_threshold(gamma_th)
    if isinstance(dist, AefDist):
        return dist.snr_cdf(gamma_th, ctrl)
    if isinstance(dist, AkfDist):
        return dist.snr_cdf_series(gamma_th, ctrl)
    raise DomainError(f"unsupported distribution type {type(dist).__name__}")


def asymptotic_outage_aef(d: AefDist, gamma_th: float) -> float:
    """Leading high-SNR outage term of the alpha-eta-F distribution:
    (2mu)^(2mu-1) h^mu / B(2mu, ms) * (gamma_th^(alpha/2) / Lambda)^(2mu)
    with Lambda = (ms-1) upsilon gamma_bar^(alpha/2)."""
    _check_threshold(gamma_th)
    p = d.params
    ln_val = (
        (2.0 * p.mu - 1.0) * math.log(2.0 * p.mu)
        + p.mu * math.log(d.geometry.h)
        - _lbeta(2.0 * p.mu, p.ms)
        + 2.0 * p.mu * (0.5 * p.alpha * math.log(gamma_th) - d._ln_lam)
    )
    return math.exp(ln_val)


def asymptotic_outage_akf(d: AkfDist, gamma_th: float) -> float:
    """Leading high-SNR outage term of the alpha-kappa-F distribution:
    mu^(mu-1) e^(-mu kappa) / B(mu, ms) * ((1+kappa) gamma_th^(alpha/2) /
    Lambda)^mu with Lambda = (ms-1) omega gamma_bar^(alpha/2)."""
    _check_threshold(gamma_th)
    p = d.params
    ln_val = (
        (p.mu - 1.0) * math.log(p.mu)
        - p.mu * p.kappa
        - _lbeta(p.mu, p.ms)
        + p.mu
        * (math.log1p(p.kappa) + 0.5 * p.alpha * math.log(gamma_th) - d._ln_lam)
    )
    return math.exp(ln_val)


def gains(dist: AefDist | AkfDist, gamma_th: float) -> GainPair:
    """Coding and diversity gains of the high-SNR outage law
    (G_c gamma_bar)^(-G_d); consistent with the asymptotic outage at any
    gamma_bar by construction."""
    _check_threshold(gamma_th)
    if isinstance(dist, AefDist):
        p = dist.params
        gd = p.alpha * p.mu
        ln_c = (
            (2.0 * p.mu - 1.0) * math.log(2.0 * p.mu)
            + p.mu * math.log(dist.geometry.h)
            - _lbeta(2.0 * p.mu, p.ms)
            - 2.0 * p.mu * (math.log(p.ms - 1.0) + math.log(dist.upsilon))
        )
        gc = math.exp(-ln_c / gd) / gamma_th
        return GainPair(gc=gc, gd=gd)
    if isinstance(dist, AkfDist):
        p = dist.params
        gd = 0.5 * p.alpha * p.mu
        ln_c = (
            (p.mu - 1.0) * math.log(p.mu)
            - p.mu * p.kappa
            - _lbeta(p.mu, p.ms)
            + p.mu
            * (
                math.log1p(p.kappa)
                - math.log(p.ms - 1.0)
                - math.log(dist.omega_norm)
            )
        )
        gc = math.exp(-ln_c / gd) / gamma_th
        return GainPair(gc=gc, gd=gd)
    raise DomainError(f"unsupported distribution type {type(dist).__name__}")

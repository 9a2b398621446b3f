"""Physical-model Monte-Carlo samplers and goodness-of-fit machinery.

The samplers build envelopes directly from the generative model: sums of
squared Gaussians (optionally mean-shifted or correlated), all multiplied by
a single shared inverse-Nakagami-squared shadowing variate per draw, then
raised to 1/alpha. Nothing here evaluates an analytical density, so sampler
output is independent ground truth for the formula modules.

Streams are counter-based (Philox). Each draw consumes a fixed-width row of
uniforms padded to a multiple of 4 (the Philox block size), so generating
draws [start, start+n) yields bitwise the same values regardless of how a
run is partitioned.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import special as sc

from .params import (
    KAPPA_ZERO_CUTOFF,
    AefParams,
    AkfParams,
    Format,
)
from .series import DomainError
from . import specfun

__all__ = [
    "PhysAef",
    "PhysAkf",
    "EmpiricalDist",
    "GofReport",
    "sample_inv_nakagami_sq",
    "sample_aef_envelope",
    "sample_akf_envelope",
    "make_phys",
    "ks_distance",
    "ks_threshold",
    "envelope_alpha_mean",
    "envelope_sq_mean",
]

_CHUNK_ROWS = 1 << 18
_U_FLOOR = 2.0 ** -53  # keep uniforms strictly inside (0, 1)
_KS_SAFETY = 1.2


@dataclass(frozen=True)
class PhysAef:
    """Physical configuration of the alpha-eta-F generative model.

    Format I uses independent in-phase/quadrature Gaussians with variances
    sigma_x2 / sigma_y2 per component; Format II uses equal-variance pairs
    with correlation eta. The model has 2 * mu_int cluster pairs (4 * mu_int
    Gaussians), matching the envelope density's small-argument exponent.
    """

    alpha: float
    mu_int: int
    format: Format
    eta: float
    ms: float
    sigma_x2: float = 1.0
    sigma_y2: float = 1.0
    sigma2: float = 1.0

    def __post_init__(self) -> None:
        if not self.alpha > 0.0:
            raise DomainError(f"alpha must be positive, got {self.alpha}")
        if self.mu_int < 1 or self.mu_int != int(self.mu_int):
            raise DomainError(f"mu_int must be an integer >= 1, got {self.mu_int}")
        if not self.ms > 1.0:
            raise DomainError(f"ms must exceed 1, got {self.ms}")
        if self.format is Format.FORMAT_I:
            if not (self.sigma_x2 > 0.0 and self.sigma_y2 > 0.0):
                raise DomainError("Format I requires positive sigma_x2 and sigma_y2")
            ratio = self.sigma_x2 / self.sigma_y2
            if abs(ratio - self.eta) > 1e-12 * max(1.0, abs(self.eta)):
                raise DomainError(
                    f"Format I requires eta = sigma_x2/sigma_y2; got eta={self.eta}, "
                    f"ratio={ratio}"
                )
        elif self.format is Format.FORMAT_II:
            if not -1.0 < self.eta < 1.0:
                raise DomainError(f"Format II requires |eta| < 1, got {self.eta}")
            if not self.sigma2 > 0.0:
                raise DomainError("Format II requires positive sigma2")
        else:
            raise DomainError(f"format must be a Format, got {self.format!r}")


@dataclass(frozen=True)
class PhysAkf:
    """Physical configuration of the alpha-kappa-F generative model:
    mu_int cluster pairs of variance-sigma2 Gaussians with per-cluster means
    (p_i, q_i); kappa = d^2 / (2 mu sigma2) with d^2 = sum(p_i^2 + q_i^2)."""

    alpha: float
    mu_int: int
    sigma2: float
    kappa: float
    p: tuple
    q: tuple
    ms: float

    def __post_init__(self) -> None:
        if not self.alpha > 0.0:
            raise DomainError(f"alpha must be positive, got {self.alpha}")
        if self.mu_int < 1 or self.mu_int != int(self.mu_int):
            raise DomainError(f"mu_int must be an integer >= 1, got {self.mu_int}")
        if not self.sigma2 > 0.0:
            raise DomainError(f"sigma2 must be positive, got {self.sigma2}")
        if not self.ms > 1.0:
            raise DomainError(f"ms must exceed 1, got {self.ms}")
        if len(self.p) != self.mu_int or len(self.q) != self.mu_int:
            raise DomainError("p and q must each have mu_int entries")
        d2 = self.d2
        kap = d2 / (2.0 * self.mu_int * self.sigma2)
        if abs(kap - self.kappa) > 1e-12 * max(1.0, self.kappa):
            raise DomainError(
                f"kappa={self.kappa} inconsistent with d^2/(2 mu sigma2)={kap}"
            )

    @property
    def d2(self) -> float:
        return float(sum(pi * pi for pi in self.p) + sum(qi * qi for qi in self.q))


@dataclass(frozen=True, eq=False)
class EmpiricalDist:
    """Sorted sample vector with its size."""

    samples: np.ndarray
    n: int

    @classmethod
    def from_samples(cls, samples) -> "EmpiricalDist":
        arr = np.sort(np.asarray(samples, dtype=np.float64))
        if arr.ndim != 1 or arr.size == 0:
            raise DomainError("EmpiricalDist requires a non-empty 1-d sample vector")
        return cls(samples=arr, n=int(arr.size))


@dataclass(frozen=True)
class GofReport:
    """Kolmogorov-Smirnov comparison outcome; passed iff ks_stat <= threshold."""

    ks_stat: float
    n: int
    threshold: float
    passed: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "passed", self.ks_stat <= self.threshold)


def ks_threshold(n: int, safety: float = _KS_SAFETY) -> float:
    """Default KS pass threshold: the asymptotic 1% Kolmogorov quantile
    1.63/sqrt(n) with a safety factor (0.002 at n = 10^6)."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return safety * 1.63 / math.sqrt(n)


def _uniform_rows(seed: int, width: int, start: int, rows: int) -> np.ndarray:
    """Rows [start, start+rows) of the seed's uniform stream, width doubles
    per row; width must be a multiple of 4 so rows align with Philox blocks."""
    if not 0 <= seed < 2**64:
        raise DomainError(f"seed must be a 64-bit unsigned integer, got {seed}")
    bit = np.random.Philox(key=seed)
    bit.advance(start * width // 4)
    u = np.random.Generator(bit).random((rows, width), dtype=np.float64)
    np.maximum(u, _U_FLOOR, out=u)
    return u


def _padded_width(columns: int) -> int:
    return 4 * ((columns + 3) // 4)


def sample_inv_nakagami_sq(ms: float, n: int, seed: int, start: int = 0) -> np.ndarray:
    """n draws of the squared normalized inverse-Nakagami shadowing variate:
    inverse-gamma with shape ms and scale ms-1, so the mean is exactly 1."""
    if not ms > 1.0:
        raise DomainError(f"ms must exceed 1, got {ms}")
    if n < 0 or start < 0:
        raise DomainError("n and start must be non-negative")
    out = np.empty(n, dtype=np.float64)
    done = 0
    while done < n:
        rows = min(_CHUNK_ROWS, n - done)
        u = _uniform_rows(seed, 4, start + done, rows)
        out[done : done + rows] = (ms - 1.0) / sc.gammaincinv(ms, u[:, 0])
        done += rows
    return out


def _aef_width(mu_int: int) -> int:
    return _padded_width(4 * mu_int + 1)


def _akf_width(mu_int: int) -> int:
    return _padded_width(2 * mu_int + 1)


def sample_aef_envelope(p: PhysAef, n: int, seed: int, start: int = 0) -> np.ndarray:
    """n draws of the alpha-eta-F envelope R = (Z^2 sum(X_i^2 + Y_i^2))^(1/alpha)
    over 2 mu_int cluster pairs, one shared Z^2 per draw."""
    if n < 0 or start < 0:
        raise DomainError("n and start must be non-negative")
    m2 = 2 * p.mu_int
    width = _aef_width(p.mu_int)
    inv_alpha = 1.0 / p.alpha
    out = np.empty(n, dtype=np.float64)
    done = 0
    while done < n:
        rows = min(_CHUNK_ROWS, n - done)
        u = _uniform_rows(seed, width, start + done, rows)
        z2 = (p.ms - 1.0) / sc.gammaincinv(p.ms, u[:, 0])
        g = sc.ndtri(u[:, 1 : 1 + 4 * p.mu_int])
        if p.format is Format.FORMAT_I:
            m = np.empty_like(g)
            m[:, :m2] = g[:, :m2] * math.sqrt(p.sigma_x2)
            m[:, m2:] = g[:, m2:] * math.sqrt(p.sigma_y2)
        else:
            sig = math.sqrt(p.sigma2)
            m = np.empty_like(g)
            m[:, :m2] = g[:, :m2] * sig
            m[:, m2:] = (p.eta * g[:, :m2] + math.sqrt(1.0 - p.eta * p.eta) * g[:, m2:]) * sig
        s = np.sum(m * m, axis=1)
        out[done : done + rows] = (z2 * s) ** inv_alpha
        done += rows
    return out


def sample_akf_envelope(p: PhysAkf, n: int, seed: int, start: int = 0) -> np.ndarray:
    """n draws of the alpha-kappa-F envelope
    R = (Z^2 sum((X_i + p_i)^2 + (Y_i + q_i)^2))^(1/alpha) over mu_int cluster
    pairs, one shared Z^2 per draw."""
    if n < 0 or start < 0:
        raise DomainError("n and start must be non-negative")
    width = _akf_width(p.mu_int)
    inv_alpha = 1.0 / p.alpha
    sig = math.sqrt(p.sigma2)
    shift = np.asarray(list(p.p) + list(p.q), dtype=np.float64)
    out = np.empty(n, dtype=np.float64)
    done = 0
    while done < n:
        rows = min(_CHUNK_ROWS, n - done)
        u = _uniform_rows(seed, width, start + done, rows)
        z2 = (p.ms - 1.0) / sc.gammaincinv(p.ms, u[:, 0])
        m = sc.ndtri(u[:, 1 : 1 + 2 * p.mu_int]) * sig + shift
        s = np.sum(m * m, axis=1)
        out[done : done + rows] = (z2 * s) ** inv_alpha
        done += rows
    return out


def _gamma_ratio(ms: float, q: float) -> float:
    """E[(Z^2)^q] for the shadowing variate: (ms-1)^q Gamma(ms-q)/Gamma(ms)."""
    if not ms > q:
        raise DomainError(
            f"ms = {ms} must exceed {q} for the requested power moment to exist"
        )
    return math.exp(
        q * math.log(ms - 1.0) + math.lgamma(ms - q) - math.lgamma(ms)
    )


def _aef_sum_moment(p: PhysAef, q: float) -> float:
    """E[S^q] for S = sum of the 4 mu_int squared (scaled) Gaussians."""
    if p.format is Format.FORMAT_I:
        a, b = p.sigma_x2, p.sigma_y2
    else:
        a = p.sigma2 * (1.0 + p.eta)
        b = p.sigma2 * (1.0 - p.eta)
    mu = float(p.mu_int)
    f = specfun.gauss_2f1(-q, mu, 2.0 * mu, 1.0 - a / b)
    return (
        (2.0 * b) ** q
        * math.exp(math.lgamma(2.0 * mu + q) - math.lgamma(2.0 * mu))
        * f.value
    )


def _akf_sum_moment(p: PhysAkf, q: float) -> float:
    """E[S^q] for S = sum of mu_int mean-shifted squared Gaussian pairs."""
    mu = float(p.mu_int)
    mk = 0.5 * p.d2 / p.sigma2
    f = specfun.kummer_1f1(mu + q, mu, mk)
    return (
        (2.0 * p.sigma2) ** q
        * math.exp(math.lgamma(mu + q) - math.lgamma(mu) - mk)
        * f.value
    )


def envelope_alpha_mean(p: PhysAef | PhysAkf) -> float:
    """E[R^alpha] of the physical model (the pre-nonlinearity mean power)."""
    if isinstance(p, PhysAef):
        return _aef_sum_moment(p, 1.0)
    if isinstance(p, PhysAkf):
        return _akf_sum_moment(p, 1.0)
    raise DomainError(f"unsupported physical model {type(p).__name__}")


def envelope_sq_mean(p: PhysAef | PhysAkf) -> float:
    """Omega = E[R^2] of the physical model."""
    q = 2.0 / p.alpha
    zq = _gamma_ratio(p.ms, q)
    if isinstance(p, PhysAef):
        return zq * _aef_sum_moment(p, q)
    if isinstance(p, PhysAkf):
        return zq * _akf_sum_moment(p, q)
    raise DomainError(f"unsupported physical model {type(p).__name__}")


def make_phys(
    params: AefParams | AkfParams, power_target: float | None = None
) -> PhysAef | PhysAkf:
    """Physical configuration matching an analytical parameter bundle.

    mu must be a positive integer (the generative model sums over whole
    clusters). Base mapping: Format I sigma_y2 = 1, sigma_x2 = eta; Format II
    sigma2 = 1; alpha-kappa-F sigma2 = 1 with the dominant power split
    uniformly, p_i = q_i = sigma sqrt(kappa). If power_target is given, all
    scales are adjusted so E[R^2] equals it exactly.
    """
    mu = params.mu
    if abs(mu - round(mu)) > 1e-9 or round(mu) < 1:
        raise DomainError(
            f"physical sampler requires integer mu (whole clusters), got {mu}"
        )
    mu_int = int(round(mu))
    scale_sq = 1.0
    if isinstance(params, AefParams):
        if params.format is Format.FORMAT_I:
            base = PhysAef(
                alpha=params.alpha, mu_int=mu_int, format=params.format,
                eta=params.eta, ms=params.ms,
                sigma_x2=params.eta, sigma_y2=1.0,
            )
        else:
            base = PhysAef(
                alpha=params.alpha, mu_int=mu_int, format=params.format,
                eta=params.eta, ms=params.ms, sigma2=1.0,
            )
        if power_target is None:
            return base
        if not power_target > 0.0:
            raise DomainError(f"power_target must be positive, got {power_target}")
        scale_sq = (power_target / envelope_sq_mean(base)) ** (0.5 * params.alpha)
        if params.format is Format.FORMAT_I:
            return PhysAef(
                alpha=params.alpha, mu_int=mu_int, format=params.format,
                eta=params.eta, ms=params.ms,
                sigma_x2=params.eta * scale_sq, sigma_y2=scale_sq,
            )
        return PhysAef(
            alpha=params.alpha, mu_int=mu_int, format=params.format,
            eta=params.eta, ms=params.ms, sigma2=scale_sq,
        )
    if isinstance(params, AkfParams):
        def build(s2: float) -> PhysAkf:
            comp = math.sqrt(params.kappa * s2)
            means = tuple([comp] * mu_int)
            return PhysAkf(
                alpha=params.alpha, mu_int=mu_int, sigma2=s2,
                kappa=params.kappa, p=means, q=means, ms=params.ms,
            )

        base = build(1.0)
        if power_target is None:
            return base
        if not power_target > 0.0:
            raise DomainError(f"power_target must be positive, got {power_target}")
        scale_sq = (power_target / envelope_sq_mean(base)) ** (0.5 * params.alpha)
        return build(scale_sq)
    raise DomainError(f"unsupported parameter type {type(params).__name__}")


def ks_distance(emp: EmpiricalDist, cdf) -> float:
    """Two-sided Kolmogorov-Smirnov distance between an empirical sample and
    a model CDF: sup over samples of the gap against both step edges."""
    if emp.n < 1:
        raise DomainError("empirical sample is empty")
    x = emp.samples
    try:
        f = np.asarray(cdf(x), dtype=np.float64)
        if f.shape != x.shape:
            raise ValueError
    except (TypeError, ValueError):
        f = np.asarray([float(cdf(v)) for v in x], dtype=np.float64)
    i = np.arange(1, emp.n + 1, dtype=np.float64)
    d_plus = np.max(i / emp.n - f)
    d_minus = np.max(f - (i - 1.0) / emp.n)
    return float(max(d_plus, d_minus))

"""alpha-kappa-F distribution: density, CDF series, closed-form CDF.

Frozen constants were cross-checked against quadrature of the density and
against 60-digit evaluations of the underlying hypergeometric series.
"""

import math

import pytest
from scipy.integrate import quad

from compfade import (
    AkfDist,
    AkfEnvelope,
    AkfParams,
    CLOSED_FORM_GUARD,
    DomainError,
    SeriesControl,
)
from conftest import rel_err

GOLDEN_TOL = 1e-11


@pytest.fixture
def dist(akf_params):
    return AkfDist(akf_params, gamma_bar=1.0)


def test_snr_pdf_frozen_spot(dist):
    assert rel_err(dist.snr_pdf(1.0), 0.5188845678495663) <= GOLDEN_TOL


def test_snr_cdf_series_frozen_spot(dist):
    assert rel_err(dist.snr_cdf_series(1.0).value, 0.6234834812997958) <= GOLDEN_TOL


def test_snr_cdf_closed_frozen_spots(dist):
    # 0.3 sits on the small-argument closed form, 3.0 on the
    # large-argument one; both must agree with their frozen references.
    assert rel_err(dist.snr_cdf_closed(0.3).value, 0.13718380329128696) <= GOLDEN_TOL
    assert rel_err(dist.snr_cdf_closed(3.0).value, 0.9706655239700187) <= GOLDEN_TOL


def test_snr_pdf_normalizes(dist):
    total, _ = quad(dist.snr_pdf, 0.0, 80.0, limit=400)
    tail, _ = quad(dist.snr_pdf, 80.0, 5000.0, limit=400)
    assert abs(total + tail - 1.0) <= 1e-7


def test_snr_mean_matches_gamma_bar(akf_params):
    d = AkfDist(akf_params, gamma_bar=1.5)
    head, _ = quad(lambda g: g * d.snr_pdf(g), 0.0, 120.0, limit=400)
    tail, _ = quad(lambda g: g * d.snr_pdf(g), 120.0, 30000.0, limit=400)
    assert rel_err(head + tail, 1.5) <= 1e-6


def test_snr_cdf_matches_quadrature(dist):
    for g in (0.3, 1.0, 2.5):
        ref, err = quad(dist.snr_pdf, 0.0, g, limit=400, epsabs=1e-13, epsrel=1e-12)
        assert err < 1e-10
        assert abs(dist.snr_cdf_series(g).value - ref) <= 1e-9


def test_closed_form_agrees_with_series_both_branches(dist):
    # Away from the switch point the closed forms and the incomplete-beta
    # series are two independent routes to the same CDF.
    for g in (0.2, 0.5, 0.9, 1.3, 2.0, 4.0):
        x1 = math.exp(dist._ln_x1(g))
        if abs(x1 - 1.0) <= CLOSED_FORM_GUARD:
            continue
        s = dist.snr_cdf_series(g).value
        c = dist.snr_cdf_closed(g).value
        assert abs(c - s) <= 1e-10


def test_closed_form_guard_band_falls_back_to_series(dist):
    # Inside the guard band around the closed forms' common singular
    # point the implementation must return the series value instead.
    g = 1.05  # x1 close to 1 for this parameter point
    x1 = math.exp(dist._ln_x1(g))
    assert abs(x1 - 1.0) < CLOSED_FORM_GUARD
    assert dist.snr_cdf_closed(g).value == dist.snr_cdf_series(g).value


def test_cdf_monotone_and_bounded(dist):
    grid = [0.05 * 1.35 ** k for k in range(22)]
    vals = [dist.snr_cdf_series(g).value for g in grid]
    assert all(0.0 <= v <= 1.0 for v in vals)
    assert all(b >= a for a, b in zip(vals, vals[1:]))


def test_pdf_cdf_at_zero_and_validation(dist, akf_params):
    assert dist.snr_pdf(0.0) == 0.0
    r = dist.snr_cdf_series(0.0)
    assert r.value == 0.0 and r.converged
    with pytest.raises(DomainError):
        dist.snr_pdf(-1.0)
    with pytest.raises(DomainError):
        AkfDist(akf_params, gamma_bar=0.0)


def test_kappa_zero_continuity():
    # kappa below the cutoff takes an exact limit route; approaching the
    # cutoff from above must land on the same curve.
    base = dict(alpha=2.4, mu=1.6, ms=5.0)
    d0 = AkfDist(AkfParams(kappa=0.0, **base), 1.0)
    d1 = AkfDist(AkfParams(kappa=1e-9, **base), 1.0)
    for g in (0.3, 1.0, 3.0):
        assert rel_err(d1.snr_pdf(g), d0.snr_pdf(g)) <= 1e-7
        assert rel_err(d1.snr_cdf_series(g).value, d0.snr_cdf_series(g).value) <= 1e-7


def test_fisher_spot():
    # alpha = 2, kappa = 0, mu = 1, ms = 2 is the Fisher-Snedecor F
    # channel: f(g) = 2 (1 + g)^(-3), F(g) = 1 - (1 + g)^(-2).
    d = AkfDist(AkfParams(alpha=2.0, kappa=0.0, mu=1.0, ms=2.0), 1.0)
    assert abs(d.snr_pdf(1.0) - 0.25) <= 1e-10
    assert abs(d.snr_cdf_series(1.0).value - 0.75) <= 1e-10
    assert abs(d.snr_cdf_closed(1.0).value - 0.75) <= 1e-10
    for g in (0.4, 2.0, 9.0):
        want = 1.0 - (1.0 + g) ** -2
        assert abs(d.snr_cdf_series(g).value - want) <= 1e-10


def test_unconverged_series_is_flagged(dist):
    r = dist.snr_cdf_series(1.0, SeriesControl(max_terms=2))
    assert not r.converged
    assert r.est_error > 0.0


def test_envelope_frozen_spot(akf_params):
    env = AkfEnvelope(akf_params, 1.0)
    assert rel_err(env.envelope_pdf(0.8), 1.1834289961575029) <= GOLDEN_TOL


def test_envelope_normalizes_and_carries_power(akf_params):
    env = AkfEnvelope(akf_params, 1.5)
    total, _ = quad(env.envelope_pdf, 0.0, 20.0, limit=300)
    power, _ = quad(lambda r: r * r * env.envelope_pdf(r), 0.0, 30.0, limit=300)
    assert abs(total - 1.0) <= 1e-8
    assert rel_err(power, 1.5) <= 1e-9


def test_envelope_matches_snr_change_of_variables(akf_params):
    env = AkfEnvelope(akf_params, 1.5)
    d = AkfDist(akf_params, 1.0)
    for r in (0.5, 1.0, 1.6):
        lhs, _ = quad(env.envelope_pdf, 0.0, r, limit=300, epsabs=1e-13)
        rhs = d.snr_cdf_series(r * r / 1.5).value
        assert abs(lhs - rhs) <= 1e-9

"""Physical-model sampler: determinism, partitioning, moments, KS machinery.

The sampler builds each envelope from explicit Gaussian cluster components
and a common inverse-Nakagami shadowing root, sharing no code with the
analytic densities, which is what makes the KS comparisons in the
acceptance battery meaningful.
"""

import math

import numpy as np
import pytest

from compfade import (
    AefParams,
    AkfParams,
    DomainError,
    EmpiricalDist,
    Format,
    GofReport,
    ks_distance,
    ks_threshold,
    make_phys,
    sample_aef_envelope,
    sample_akf_envelope,
    sample_inv_nakagami_sq,
)
from compfade.mc import PhysAkf, envelope_alpha_mean, envelope_sq_mean
from conftest import rel_err


@pytest.fixture
def phys_aef():
    return make_phys(AefParams(alpha=2.5, eta=0.4, mu=2.0, ms=4.0))


@pytest.fixture
def phys_akf():
    return make_phys(AkfParams(alpha=2.5, kappa=1.5, mu=2.0, ms=4.0))


def test_aef_first_draws_frozen(phys_aef):
    r = sample_aef_envelope(phys_aef, 3, 123)
    want = [1.7278102513131472, 2.3717738129741175, 2.3806444012158403]
    assert np.allclose(r, want, rtol=1e-12, atol=0.0)


def test_akf_first_draws_frozen(phys_akf):
    r = sample_akf_envelope(phys_akf, 3, 123)
    want = [0.9920607063575222, 2.7896020387691993, 3.8487998942047423]
    assert np.allclose(r, want, rtol=1e-12, atol=0.0)


def test_runs_are_byte_identical(phys_aef):
    a = sample_aef_envelope(phys_aef, 5000, 42)
    b = sample_aef_envelope(phys_aef, 5000, 42)
    assert a.tobytes() == b.tobytes()


def test_seed_changes_stream(phys_aef):
    a = sample_aef_envelope(phys_aef, 100, 42)
    b = sample_aef_envelope(phys_aef, 100, 43)
    assert a.tobytes() != b.tobytes()


@pytest.mark.parametrize("splits", [2, 3, 7])
def test_partitioned_sampling_is_byte_identical(phys_aef, phys_akf, splits):
    n = 5000
    edges = np.linspace(0, n, splits + 1).astype(int)
    full_a = sample_aef_envelope(phys_aef, n, 99)
    parts = [sample_aef_envelope(phys_aef, int(e - s), 99, start=int(s))
             for s, e in zip(edges[:-1], edges[1:])]
    assert np.concatenate(parts).tobytes() == full_a.tobytes()
    full_k = sample_akf_envelope(phys_akf, n, 99)
    parts_k = [sample_akf_envelope(phys_akf, int(e - s), 99, start=int(s))
               for s, e in zip(edges[:-1], edges[1:])]
    assert np.concatenate(parts_k).tobytes() == full_k.tobytes()


def test_single_row_offset_matches(phys_aef):
    full = sample_aef_envelope(phys_aef, 10, 7)
    tail = sample_aef_envelope(phys_aef, 9, 7, start=1)
    assert tail.tobytes() == full[1:].tobytes()


def test_cross_family_byte_identity():
    # Balanced eta with mu cluster pairs is physically the same channel
    # as zero-offset kappa fading with 2 mu clusters; the stream layout
    # is aligned so the draws agree byte for byte.
    pa = make_phys(AefParams(alpha=2.5, eta=1.0, mu=1.0, ms=4.0))
    pk = make_phys(AkfParams(alpha=2.5, kappa=0.0, mu=2.0, ms=4.0))
    a = sample_aef_envelope(pa, 2000, 31)
    k = sample_akf_envelope(pk, 2000, 31)
    assert a.tobytes() == k.tobytes()


def test_format_byte_identity():
    # Format I at eta = 1 and Format II at eta = 0 are the same physical
    # configuration.
    p1 = make_phys(AefParams(alpha=2.2, eta=1.0, mu=2.0, ms=5.0))
    p2 = make_phys(AefParams(alpha=2.2, eta=0.0, mu=2.0, ms=5.0, format=Format.FORMAT_II))
    a = sample_aef_envelope(p1, 2000, 17)
    b = sample_aef_envelope(p2, 2000, 17)
    assert a.tobytes() == b.tobytes()


def test_make_phys_field_mapping(phys_aef, phys_akf):
    assert phys_aef.sigma_x2 == pytest.approx(0.4)
    assert phys_aef.sigma_y2 == pytest.approx(1.0)
    assert phys_aef.mu_int == 2
    assert phys_akf.mu_int == 2
    # kappa = d^2 / (2 mu sigma^2) with equal per-cluster offsets
    d2 = sum(p * p for p in phys_akf.p) + sum(q * q for q in phys_akf.q)
    assert rel_err(d2 / (2 * 2 * phys_akf.sigma2), 1.5) <= 1e-12


def test_make_phys_rejects_fractional_mu():
    with pytest.raises(DomainError, match="integer mu"):
        make_phys(AefParams(alpha=2.0, eta=1.0, mu=0.5, ms=4.0))
    with pytest.raises(DomainError, match="integer mu"):
        make_phys(AkfParams(alpha=2.0, kappa=1.0, mu=1.2, ms=4.0))


def test_phys_akf_rejects_inconsistent_kappa():
    with pytest.raises(DomainError):
        PhysAkf(alpha=2.0, mu_int=2, sigma2=1.0, kappa=9.0,
                p=(1.0, 1.0), q=(1.0, 1.0), ms=4.0)


def test_seed_range_validation(phys_aef):
    with pytest.raises(DomainError):
        sample_aef_envelope(phys_aef, 10, -1)
    with pytest.raises(DomainError):
        sample_aef_envelope(phys_aef, 10, 1 << 64)
    # largest valid seed works
    r = sample_aef_envelope(phys_aef, 2, (1 << 64) - 1)
    assert np.all(np.isfinite(r))


def test_inv_nakagami_sq_mean():
    # E[Z^2] = 1 by construction for any ms > 1.
    z = sample_inv_nakagami_sq(4.0, 200000, 99)
    assert abs(z.mean() - 1.0) <= 0.01
    assert np.all(z > 0.0)


def test_analytic_moments_exact_values(phys_aef, phys_akf):
    # Sum power: Format I gives 2 mu (sx^2 + sy^2); uniform offsets give
    # 2 mu sigma^2 (1 + kappa) for the kappa family.
    assert rel_err(envelope_alpha_mean(phys_aef), 2 * 2 * 1.4) <= 1e-12
    assert rel_err(envelope_alpha_mean(phys_akf), 2 * 2 * 1.0 * 2.5) <= 1e-12


def test_moments_match_simulation(phys_aef, phys_akf):
    n = 200000
    ra = sample_aef_envelope(phys_aef, n, 5)
    rk = sample_akf_envelope(phys_akf, n, 5)
    assert rel_err(np.mean(ra ** 2.5), envelope_alpha_mean(phys_aef)) <= 0.02
    assert rel_err(np.mean(ra ** 2), envelope_sq_mean(phys_aef)) <= 0.02
    assert rel_err(np.mean(rk ** 2.5), envelope_alpha_mean(phys_akf)) <= 0.02
    assert rel_err(np.mean(rk ** 2), envelope_sq_mean(phys_akf)) <= 0.02


def test_power_target_rescales_exactly():
    p = make_phys(AkfParams(alpha=2.5, kappa=1.5, mu=2.0, ms=4.0), power_target=2.0)
    assert rel_err(envelope_sq_mean(p), 2.0) <= 1e-12


def test_empirical_dist_sorts():
    e = EmpiricalDist.from_samples(np.array([3.0, 1.0, 2.0]))
    assert list(e.samples) == [1.0, 2.0, 3.0]
    assert e.n == 3
    with pytest.raises(DomainError):
        EmpiricalDist.from_samples(np.array([]))


def test_ks_distance_hand_computed():
    # Samples [1, 2, 3] against F(x) = x / 4: the largest deviation is
    # F(1) - 0/3 = 0.25.
    e = EmpiricalDist.from_samples(np.array([1.0, 2.0, 3.0]))
    d = ks_distance(e, lambda x: x / 4.0)
    assert abs(d - 0.25) <= 1e-15


def test_ks_distance_perfect_fit_is_small():
    n = 2000
    u = (np.arange(n) + 0.5) / n
    e = EmpiricalDist.from_samples(u)
    d = ks_distance(e, lambda x: np.clip(x, 0.0, 1.0))
    assert d <= 1.0 / n


def test_ks_threshold_values():
    assert rel_err(ks_threshold(10 ** 6), 1.2 * 1.63 / 1000.0) <= 1e-12
    assert ks_threshold(10 ** 6) < 0.002


def test_gof_report_pass_logic():
    r = GofReport(ks_stat=0.01, n=100, threshold=0.02)
    assert r.passed
    r2 = GofReport(ks_stat=0.03, n=100, threshold=0.02)
    assert not r2.passed

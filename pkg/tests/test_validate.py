"""Benchmark combination table and the dual-oracle harness itself."""

import numpy as np
import pytest

from cogecon.rng import RngSpec
from cogecon.validate import (
    ComboReport,
    fd_density_error,
    fd_grid_for,
    ks_distance,
    run_density_validation,
    benchmark_combos,
)
from cogecon.wealth import WealthLaw, drift_diffusion, stationary_wealth_density

LAW = WealthLaw(mu=0.2465236032020286, sigma_x=0.4, reset_rate=0.3)


def test_twelve_combos_cover_both_regimes():
    combos = benchmark_combos()
    assert len(combos) == 12
    labels = [label for label, _ in combos]
    assert len(set(labels)) == 12
    assert sum(label.startswith("type1") for label in labels) == 6
    assert sum(label.startswith("type2") for label in labels) == 6
    for label, params in combos:
        if label.startswith("type1"):
            assert params.f_sigma == 1.0
    # the paired regime ties the friction tier to the leverage tier
    paired = {(p.lam, p.f_sigma) for label, p in combos if label.startswith("type2")}
    assert paired == {(5.0, 0.2), (25.0, 0.5), (50.0, 0.8)}


def test_ks_distance_hand_case():
    # single sample at the median of the model law: D = 1/2 exactly
    d = stationary_wealth_density(LAW)
    samples = np.array([0.0])
    expected = max(1.0 - d.cdf(0.0), d.cdf(0.0))
    assert ks_distance(samples, d) == pytest.approx(expected, abs=1e-15)
    with pytest.raises(ValueError):
        ks_distance(np.array([]), d)


def test_ks_distance_of_exact_quantiles_is_small():
    # samples placed at the (i - 1/2)/n model quantiles by bisection
    d = stationary_wealth_density(LAW)
    n = 2000
    targets = (np.arange(n) + 0.5) / n
    lo, hi = np.full(n, -80.0), np.full(n, 80.0)
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        below = d.cdf(mid) < targets
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    assert ks_distance(0.5 * (lo + hi), d) <= 0.5 / n + 1e-9


def test_fd_grid_spans_both_tails():
    grid = fd_grid_for(LAW, 801)
    nodes = grid.nodes()
    d = stationary_wealth_density(LAW)
    assert nodes[0] < -18.0 / d.rate_left
    assert nodes[-1] > 18.0 / d.rate_right
    assert np.any(nodes == 0.0)


def test_fd_error_shrinks_with_resolution():
    coarse = fd_density_error(LAW, n_points=501)
    fine = fd_density_error(LAW, n_points=2001)
    assert fine < coarse
    assert fine < 1e-3


def test_run_density_validation_small_but_passing():
    report = run_density_validation(LAW, RngSpec(11, stream_id=1),
                                    label="smoke", n_points=2001,
                                    n_samples=20_000)
    assert report.passed
    assert report.fd_error < report.fd_tol
    assert report.ks_distance < report.ks_tol


def test_combo_report_pass_logic():
    ok = ComboReport("x", LAW, fd_error=1e-5, fd_tol=1e-3,
                     ks_distance=1e-3, ks_tol=0.02)
    assert ok.passed
    bad_fd = ComboReport("x", LAW, fd_error=2e-3, fd_tol=1e-3,
                         ks_distance=1e-3, ks_tol=0.02)
    bad_ks = ComboReport("x", LAW, fd_error=1e-5, fd_tol=1e-3,
                         ks_distance=0.5, ks_tol=0.02)
    assert not bad_fd.passed and not bad_ks.passed


def test_type2_laws_flip_drift_sign_across_tiers():
    # the paired-friction sweep crosses from negative to positive drift,
    # which is what makes its variance profile U-shaped
    mus = [drift_diffusion(p).mu for label, p in benchmark_combos()
           if label.startswith("type2_") and "theta0.05" in label]
    assert mus[0] < 0.0 < mus[-1]

import numpy as np
import pytest

from orbitgraph.errors import SolverError
from orbitgraph.hyperbolic import laplace_fit


def test_point_mass_recovered():
    ts = np.linspace(1.0, 30.0, 60)
    fit = laplace_fit(lambda t: np.exp(0.5 * np.asarray(t)), n=1,
                      sample_ts=ts, grid_size=11)
    # grid step 0.05; the atom should sit at 0.5 with unit weight
    top = int(np.argmax(fit.weights))
    assert fit.grid[top] == pytest.approx(0.5, abs=0.05)
    assert fit.weights[top] == pytest.approx(1.0, abs=1e-3)
    assert fit.residual < 1e-8


def test_scaled_point_mass():
    ts = np.linspace(1.0, 30.0, 60)
    fit = laplace_fit(lambda t: 2.0 * np.exp(0.3 * np.asarray(t)), n=1,
                      sample_ts=ts, grid_size=11)
    top = int(np.argmax(fit.weights))
    assert fit.grid[top] == pytest.approx(0.3, abs=0.05)
    assert fit.weights[top] == pytest.approx(0.5, abs=1e-3)


def test_off_grid_atom_within_one_step():
    ts = np.linspace(1.0, 30.0, 80)
    fit = laplace_fit(lambda t: np.exp(0.27 * np.asarray(t)), n=1,
                      sample_ts=ts, grid_size=11)  # step 0.05, 0.27 off-grid
    top = int(np.argmax(fit.weights))
    assert abs(fit.grid[top] - 0.27) <= 0.05 + 1e-12
    assert fit.weights.sum() == pytest.approx(1.0, abs=0.02)


def test_sqrt_profile_cumulative_slope():
    # F(T) = sqrt(T) inverts to the measure with density s^{-1/2}/sqrt(pi);
    # its cumulative grows like s^{1/2} near zero
    ts = np.geomspace(1.0, 3000.0, 120)
    grid = np.geomspace(1e-4, 0.5, 60)
    fit = laplace_fit(lambda t: np.sqrt(np.asarray(t)), n=1, sample_ts=ts,
                      grid=grid)
    ss = np.geomspace(1e-3, 0.1, 24)
    cum = fit.cumulative(ss)
    mask = cum > 0
    slope = np.polyfit(np.log(ss[mask]), np.log(cum[mask]), 1)[0]
    assert 0.35 <= slope <= 0.65

    # brute-force oracle: discretize the true measure and measure its slope
    sg = np.linspace(1e-6, 0.5, 20001)
    wts = sg ** -0.5 / np.sqrt(np.pi) * (sg[1] - sg[0])
    cum_true = np.cumsum(wts)
    m = (sg >= 1e-3) & (sg <= 0.1)
    slope_true = np.polyfit(np.log(sg[m]), np.log(cum_true[m]), 1)[0]
    assert abs(slope_true - 0.5) < 0.1
    assert abs(slope - slope_true) < 0.15


def test_transform_inverts_profile():
    ts = np.linspace(1.0, 25.0, 50)
    f = np.exp(0.4 * ts)
    fit = laplace_fit(f, n=1, sample_ts=ts, grid_size=21)
    assert np.allclose(f * fit.transform(ts), 1.0, atol=1e-6)


def test_residual_weakly_decreasing_in_grid_size():
    ts = np.linspace(1.0, 20.0, 50)
    profile = lambda t: np.exp(0.33 * np.asarray(t)) + np.exp(0.11 * np.asarray(t))
    prev = None
    for m in (6, 11, 21, 41):
        fit = laplace_fit(profile, n=1, sample_ts=ts, grid_size=m)
        if prev is not None:
            assert fit.residual <= prev + 1e-9
        prev = fit.residual


def test_degenerate_profile_raises():
    ts = np.linspace(1.0, 10.0, 20)
    with pytest.raises(SolverError, match="degenerate"):
        laplace_fit(lambda t: np.full_like(np.asarray(t, dtype=float),
                                           1e-200), n=1, sample_ts=ts)


def test_grid_validation():
    ts = np.linspace(1.0, 10.0, 20)
    with pytest.raises(ValueError, match="grid"):
        laplace_fit(lambda t: np.exp(np.asarray(t) * 0.2), n=1, sample_ts=ts,
                    grid=np.array([0.0, 0.9]))


def test_support_property():
    ts = np.linspace(1.0, 30.0, 60)
    fit = laplace_fit(lambda t: np.exp(0.5 * np.asarray(t)), n=1,
                      sample_ts=ts, grid_size=11)
    assert 0.5 in fit.support
    assert (fit.support >= 0).all() and (fit.support <= 0.5).all()

"""Fit a discrete nonnegative measure on [0, n/2] whose Laplace transform
inverts the decay profile F(T): minimize the residual of
F(T) * sum_i w_i exp(-s_i T) - 1 over sample times by nonnegative least
squares on a fixed atom grid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import nnls

from ..errors import SolverError


@dataclass(frozen=True)
class SpectralFit:
    grid: np.ndarray  # atom locations in [0, n/2]
    weights: np.ndarray  # nonnegative
    residual: float
    n: int
    sample_ts: np.ndarray

    def transform(self, ts) -> np.ndarray:
        """Laplace transform of the fitted measure at the given times."""
        ts = np.asarray(ts, dtype=float)
        return np.exp(-np.outer(ts, self.grid)) @ self.weights

    def cumulative(self, ss) -> np.ndarray:
        """Fitted measure of [0, s] for each s."""
        ss = np.asarray(ss, dtype=float)
        order = np.argsort(self.grid)
        g, w = self.grid[order], np.cumsum(self.weights[order])
        idx = np.searchsorted(g, ss, side="right")
        out = np.zeros_like(ss, dtype=float)
        out[idx > 0] = w[idx[idx > 0] - 1]
        return out

    @property
    def support(self) -> np.ndarray:
        return self.grid[self.weights > 0]

    def csv(self) -> str:
        lines = ["s,weight"]
        for s, w in zip(self.grid, self.weights):
            lines.append(f"{float(s)!r},{float(w)!r}")
        return "\n".join(lines) + "\n"


def _f_values(profile, ts):
    if callable(profile):
        return np.asarray(profile(ts), dtype=float)
    if hasattr(profile, "F"):
        return np.asarray(profile.F(ts), dtype=float)
    vals = np.asarray(profile, dtype=float)
    if vals.shape != ts.shape:
        raise ValueError("explicit F values must match the sample times")
    return vals


def laplace_fit(profile, n: int, sample_ts, grid=None,
                grid_size: int = 41) -> SpectralFit:
    """Nonnegative atom weights on [0, n/2] inverting a decay profile.

    ``profile`` is a CountingCurve, a callable T -> F(T), or an array of F
    values over ``sample_ts``.  The default atom grid is uniform on
    [0, n/2] with ``grid_size`` points; pass an explicit grid (for example
    geometric, to resolve the measure near 0) to override.
    """
    ts = np.asarray(sample_ts, dtype=float)
    if ts.ndim != 1 or len(ts) < 2:
        raise ValueError("need at least two sample times")
    f = _f_values(profile, ts)
    if (f <= 0).any() or not np.isfinite(f).all():
        raise ValueError("decay profile must be positive and finite")
    if grid is None:
        grid = np.linspace(0.0, n / 2.0, grid_size)
    else:
        grid = np.asarray(grid, dtype=float)
        if (grid < 0).any() or (grid > n / 2.0 + 1e-12).any():
            raise ValueError("atom grid must lie in [0, n/2]")
    design = f[:, None] * np.exp(-np.outer(ts, grid))
    weights, residual = nnls(design, np.ones(len(ts)))
    if not (weights > 0).any():
        raise SolverError("degenerate fit: all atom weights vanish")
    return SpectralFit(grid=grid, weights=weights, residual=float(residual),
                       n=n, sample_ts=ts)

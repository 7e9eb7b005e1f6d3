"""Counting curves N(T), their normalized decay F(T) = e^{nT}/N(T), partial
exponential series, growth-exponent estimation, and counting restricted to
the kernel of an abelianization map.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .orbit import Orbit


@dataclass(frozen=True)
class CountingCurve:
    """Step function N(T) given by sorted displacements, with the dimension
    parameter n fixing the normalization F(T) = e^{nT} / N(T)."""

    displacements: np.ndarray  # sorted ascending
    n: int
    t_max: float
    complete: bool = True

    def __post_init__(self):
        d = np.sort(np.asarray(self.displacements, dtype=float))
        object.__setattr__(self, "displacements", d)

    def count(self, ts) -> np.ndarray:
        return np.searchsorted(self.displacements, np.asarray(ts, dtype=float),
                               side="right")

    def F(self, ts) -> np.ndarray:
        ts = np.asarray(ts, dtype=float)
        counts = self.count(ts)
        if (counts == 0).any():
            raise ValueError("F(T) undefined before the first orbit point")
        return np.exp(self.n * ts) / counts

    def csv(self, num: int = 200) -> str:
        ts = np.linspace(self.t_max / num, self.t_max, num)
        ns = self.count(ts)
        lines = ["T,N,F"]
        for t, c in zip(ts, ns):
            f = math.exp(self.n * t) / c if c else float("inf")
            lines.append(f"{float(t)!r},{int(c)},{float(f)!r}")
        return "\n".join(lines) + "\n"


def counting_curve(orbit: Orbit, n: int | None = None) -> CountingCurve:
    """Exact counting curve of an enumerated orbit.

    Incomplete orbits are truncated at their provable horizon and the curve
    keeps the incompleteness flag.
    """
    n = orbit.model.n if n is None else n
    horizon = orbit.t_max if orbit.complete else orbit.provable_t
    d = orbit.displacements[orbit.displacements <= horizon]
    return CountingCurve(displacements=d, n=n, t_max=horizon,
                         complete=orbit.complete)


@dataclass(frozen=True)
class DeltaEstimate:
    """Least-squares growth exponent of ln N(T) with a 2-sigma interval."""

    delta: float
    ci: float
    window: tuple
    samples: int

    @property
    def low(self):
        return self.delta - self.ci

    @property
    def high(self):
        return self.delta + self.ci


def estimate_delta(curve: CountingCurve, samples: int = 80,
                   min_efoldings: float = 3.0) -> DeltaEstimate:
    """Fit the exponential growth rate of N(T) on the tail half of the curve.

    Requires the curve to span at least ``min_efoldings`` of growth in N;
    small-T transients are suppressed by fitting on [t_max/2, t_max] only.
    """
    d = curve.displacements
    if len(d) < 4:
        raise ValueError("too few orbit points to fit a growth rate")
    total = math.log(len(d))
    if total < min_efoldings:
        raise ValueError(
            f"curve spans only {total:.2f} e-foldings of N; need "
            f"{min_efoldings} (enlarge t_max)")
    lo, hi = curve.t_max / 2.0, curve.t_max
    ts = np.linspace(lo, hi, samples)
    counts = curve.count(ts)
    ts, counts = ts[counts > 0], counts[counts > 0]
    y = np.log(counts)
    design = np.stack([np.ones_like(ts), ts], axis=1)
    coef, *_ = np.linalg.lstsq(design, y, rcond=None)
    resid = y - design @ coef
    dof = max(len(ts) - 2, 1)
    cov = float(resid @ resid) / dof * np.linalg.inv(design.T @ design)
    return DeltaEstimate(delta=float(coef[1]),
                         ci=2.0 * float(np.sqrt(cov[1, 1])),
                         window=(float(lo), float(hi)), samples=len(ts))


def poincare_partial(curve: CountingCurve, s: float) -> tuple:
    """Partial exponential series sum exp(-s d) over enumerated points, with
    a truncation-tail bound from the fitted growth rate.

    The tail bound assumes N keeps growing at the fitted rate beyond the
    horizon; it is infinite when s does not exceed that rate.
    """
    if s < 0:
        raise ValueError("s must be nonnegative")
    d = curve.displacements
    value = float(np.exp(-s * d).sum())
    try:
        est = estimate_delta(curve)
        rate = max(est.delta, 1e-12)
    except ValueError:
        return value, float("inf")
    if s <= rate:
        return value, float("inf")
    n_t = len(d)
    tail = n_t * math.exp(-s * curve.t_max) * rate / (s - rate)
    return value, tail


@dataclass(frozen=True)
class KernelReport:
    full: CountingCurve
    kernel: CountingCurve
    theta_dim: int

    def ratio(self, ts) -> np.ndarray:
        return self.full.count(ts) / np.maximum(self.kernel.count(ts), 1)

    def ratio_exponent(self, t_lo: float | None = None,
                       samples: int = 60) -> tuple:
        """Fitted p in N/N_ker ~ c T^p on [t_lo, t_max], with 2-sigma CI."""
        t_hi = self.kernel.t_max
        if t_lo is None:
            t_lo = t_hi / 2.0
        ts = np.linspace(t_lo, t_hi, samples)
        nk = self.kernel.count(ts)
        nf = self.full.count(ts)
        mask = (nk >= 3) & (nf > nk)
        if mask.sum() < 8:
            raise ValueError("kernel curve too sparse for a ratio fit")
        x = np.log(ts[mask])
        y = np.log(nf[mask] / nk[mask])
        design = np.stack([np.ones_like(x), x], axis=1)
        coef, *_ = np.linalg.lstsq(design, y, rcond=None)
        resid = y - design @ coef
        dof = max(len(x) - 2, 1)
        cov = float(resid @ resid) / dof * np.linalg.inv(design.T @ design)
        return float(coef[1]), 2.0 * float(np.sqrt(cov[1, 1]))


def kernel_counting(orbit: Orbit, n: int | None = None) -> KernelReport:
    """Counting curve restricted to points with zero abelianization image.

    The orbit must have been enumerated with theta tracking, which validates
    the map on every deduplicated word pair along the way.
    """
    if orbit.theta is None:
        raise ValueError("orbit was enumerated without theta tracking")
    n = orbit.model.n if n is None else n
    full = counting_curve(orbit, n=n)
    in_kernel = (orbit.theta == 0).all(axis=1)
    horizon = orbit.t_max if orbit.complete else orbit.provable_t
    d = orbit.displacements[in_kernel]
    kernel = CountingCurve(displacements=d[d <= horizon], n=n,
                           t_max=horizon, complete=orbit.complete)
    return KernelReport(full=full, kernel=kernel,
                        theta_dim=orbit.theta.shape[1])

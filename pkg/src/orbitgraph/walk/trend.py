"""Finite-horizon trend classification for nondecreasing partial-sum
sequences.

Divergence is not decidable from finitely many terms; the classifier fits a
bounded family (constant and approach-to-limit curves c - a/k^q) against
unbounded families (logarithmic, power, linear) on the tail half of the
sequence and certifies an unbounded trend only when the best unbounded model
beats the best bounded one by a decisive residual factor.  Reports always
carry the horizon.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# approach exponents for the bounded family; tails of convergent p-series
# with p in [1.5, 4] land on this grid
_APPROACH_EXPONENTS = (0.5, 0.75, 1.0, 1.5, 2.0, 3.0)
_POWER_EXPONENTS = (0.25, 0.5, 0.75)


@dataclass(frozen=True)
class TrendReport:
    horizon: int
    best_model: str
    certified_unbounded: bool
    rss_bounded: float
    rss_unbounded: float
    improvement: float
    factor: float
    models: dict

    def __str__(self):
        tag = "certified-unbounded" if self.certified_unbounded else "inconclusive"
        return (f"trend[{self.best_model}, {tag}, x{self.improvement:.3g} "
                f"improvement at horizon {self.horizon}]")


def _lstsq_rss(design: np.ndarray, y: np.ndarray, sign_constraint: bool = True):
    coef, *_ = np.linalg.lstsq(design, y, rcond=None)
    if sign_constraint and coef[-1] < 0:
        return None, np.inf
    resid = y - design @ coef
    return coef, float(resid @ resid)


def classify_trend(partial_sums, factor: float = 10.0) -> TrendReport:
    """Classify a partial-sum sequence as bounded or (certified) unbounded.

    ``factor`` is the required RSS improvement of the best growth model over
    the best bounded model, fitted on the tail half by least squares.
    """
    y = np.asarray(partial_sums, dtype=float)
    if y.ndim != 1 or len(y) < 8:
        raise ValueError("need a 1-d sequence with at least 8 terms")
    k = np.arange(1, len(y) + 1, dtype=float)
    lo = len(y) // 2
    kt, yt = k[lo:], y[lo:]
    ones = np.ones_like(kt)
    models: dict = {}

    rss_const = float(np.sum((yt - yt.mean()) ** 2))
    models["constant"] = rss_const
    rss_bounded = rss_const
    for q in _APPROACH_EXPONENTS:
        _, rss = _lstsq_rss(np.stack([ones, -kt ** -q], axis=1), yt)
        models[f"approach(q={q})"] = rss
        rss_bounded = min(rss_bounded, rss)

    rss_unbounded = np.inf
    best_name = "constant"
    for name, col in [("logarithmic", np.log(kt)), ("linear", kt)] + [
            (f"power(p={p})", kt ** p) for p in _POWER_EXPONENTS]:
        _, rss = _lstsq_rss(np.stack([ones, col], axis=1), yt)
        models[name] = rss
        if rss < rss_unbounded:
            rss_unbounded, best_name = rss, name

    scale = max(1.0, float(np.abs(yt).max()))
    if rss_bounded <= (1e-12 * scale) ** 2 * len(yt):
        # numerically flat tail: trivially bounded at this horizon
        certified = False
        improvement = 0.0
    else:
        improvement = rss_bounded / max(rss_unbounded, 1e-300)
        certified = improvement >= factor
    best_model = best_name if certified else "bounded"
    return TrendReport(horizon=len(y), best_model=best_model,
                       certified_unbounded=certified,
                       rss_bounded=rss_bounded, rss_unbounded=rss_unbounded,
                       improvement=improvement, factor=factor, models=models)

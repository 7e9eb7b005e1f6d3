"""Monte Carlo simple random walks with reproducible, counter-based RNG.

Each trial draws from an independent Philox stream keyed by (seed, trial
index), so results do not depend on scheduling and parallel execution is
reproducible.  Walks on the stock lattices (integer line, ladder, Z^d) run
through vectorized trajectory steppers; arbitrary lazy graphs fall back to an
oracle-driven walker that consumes draws in exactly the same order.

A step at a vertex picks uniformly from the neighbor multiset, so a self-loop
(listed twice) carries weight 2, the standard conductance convention.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..graphs import LazyGraph
from .trend import TrendReport, classify_trend

_LADDER_RAIL = np.array([-1, 1, 0], dtype=np.int16)


@dataclass(frozen=True)
class ReturnStats:
    """Return counts of a simple random walk started at the root.

    ``p_hat[t]`` estimates the probability of being back at the root after t
    steps (index 0 unused); ``green_sums`` are the running sums of p_hat from
    step 1, the partial sums of the return series.
    """

    graph: str
    steps: int
    trials: int
    seed: int
    counts: np.ndarray

    @property
    def p_hat(self) -> np.ndarray:
        return self.counts / self.trials

    @property
    def green_sums(self) -> np.ndarray:
        return np.cumsum(self.p_hat[1:])

    def green_trend(self, factor: float = 10.0) -> TrendReport:
        return classify_trend(self.green_sums, factor=factor)

    def csv(self) -> str:
        p = self.p_hat
        g = np.concatenate([[0.0], self.green_sums])
        lines = ["n,p_hat,green_sum"]
        for t in range(1, self.steps + 1):
            lines.append(f"{t},{float(p[t])!r},{float(g[t])!r}")
        return "\n".join(lines) + "\n"


def _trial_rng(seed: int, trial: int) -> np.random.Generator:
    key = np.array([seed, trial], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _returns_zd(d: int, draws: np.ndarray) -> np.ndarray:
    """Boolean at-origin indicators for a chunk of Z^d trajectories.

    draws: (trials, steps) integers in [0, 2d); axis = draw >> 1,
    direction = +-1 by parity.
    """
    at_origin = None
    sign = np.where(draws & 1 == 0, np.int16(1), np.int16(-1))
    for ax in range(d):
        delta = np.where((draws >> 1) == ax, sign, np.int16(0))
        pos = np.cumsum(delta, axis=1, dtype=np.int32)
        here = pos == 0
        at_origin = here if at_origin is None else (at_origin & here)
    return at_origin


def _returns_ladder(draws: np.ndarray) -> np.ndarray:
    """draws in [0,3): 0 left, 1 right, 2 rung."""
    delta = _LADDER_RAIL[draws]
    pos = np.cumsum(delta, axis=1, dtype=np.int32)
    side = np.cumsum((draws == 2).astype(np.int8), axis=1, dtype=np.int32) & 1
    return (pos == 0) & (side == 0)


def _simulate_vectorized(kind, steps, trials, seed, chunk=2048, threads=1):
    if kind[0] == "zd":
        d = kind[1]
        nchoices = 2 * d
        evaluate = lambda dr: _returns_zd(d, dr)
    elif kind[0] == "ladder":
        nchoices = 3
        evaluate = _returns_ladder
    else:
        raise ValueError(f"unknown stepper {kind!r}")

    chunks = [(start, min(chunk, trials - start))
              for start in range(0, trials, chunk)]

    def run_chunk(args):
        start, size = args
        draws = np.empty((size, steps), dtype=np.int8)
        for i in range(size):
            draws[i] = _trial_rng(seed, start + i).integers(
                0, nchoices, size=steps, dtype=np.int8)
        return evaluate(draws).sum(axis=0, dtype=np.int64)

    counts = np.zeros(steps + 1, dtype=np.int64)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(run_chunk, chunks))
    else:
        partials = [run_chunk(c) for c in chunks]
    for part in partials:  # deterministic reduction in chunk order
        counts[1:] += part
    return counts


def _simulate_oracle(g: LazyGraph, steps, trials, seed):
    counts = np.zeros(steps + 1, dtype=np.int64)
    cache = {}
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        v = g.root
        nbrs = cache.get(v)
        if nbrs is None:
            nbrs = cache[v] = sorted(g.neighbors(v))
        # one uniform draw per step over the current neighbor multiset
        for t in range(1, steps + 1):
            if not nbrs:
                raise ValueError(f"dead-end vertex {v!r}: degree 0")
            v = nbrs[rng.integers(0, len(nbrs))]
            if v == g.root:
                counts[t] += 1
            nbrs = cache.get(v)
            if nbrs is None:
                nbrs = cache[v] = sorted(g.neighbors(v))
    return counts


def simulate_srw(g: LazyGraph, steps: int, trials: int, seed: int,
                 threads: int = 1) -> ReturnStats:
    """Estimate return probabilities of the simple random walk on g.

    Identical (graph, steps, trials, seed) always produce identical counts.
    Graphs carrying a vectorized stepper run batched; anything else walks
    through the neighbor oracle.
    """
    if steps < 1 or trials < 1:
        raise ValueError("steps and trials must be positive")
    if g.stepper is not None:
        counts = _simulate_vectorized(g.stepper, steps, trials, seed,
                                      threads=threads)
    else:
        counts = _simulate_oracle(g, steps, trials, seed)
    return ReturnStats(graph=g.name, steps=steps, trials=trials, seed=seed,
                       counts=counts)


def decay_exponent(stats: ReturnStats, t_min: int = 64,
                   min_count: int = 16) -> tuple:
    """Fitted alpha for p_hat(2k) ~ c k^-alpha, with a 2-sigma interval.

    Log-log least squares over even steps >= t_min whose counts clear
    ``min_count`` (noise floor).
    """
    t = np.arange(2, stats.steps + 1, 2)
    counts = stats.counts[2::2]
    mask = (t >= t_min) & (counts >= min_count)
    if mask.sum() < 8:
        raise ValueError("too few usable return counts for an exponent fit")
    x = np.log(t[mask] / 2.0)
    y = np.log(counts[mask] / stats.trials)
    design = np.stack([np.ones_like(x), x], axis=1)
    coef, *_ = np.linalg.lstsq(design, y, rcond=None)
    resid = y - design @ coef
    dof = max(len(x) - 2, 1)
    var = float(resid @ resid) / dof
    cov = var * np.linalg.inv(design.T @ design)
    alpha = -coef[1]
    return float(alpha), 2.0 * float(np.sqrt(cov[1, 1]))

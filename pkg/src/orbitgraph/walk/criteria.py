"""Recurrence criteria from cutset and growth data: disjoint-cutset partial
sums, ball-growth partial sums, and the average-to-step comparison lemma.

All three report exact partial sums plus a finite-horizon trend
classification; none of them ever claims transience.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from ..errors import ConstructionError
from ..graphs import Ball, GrowthProfile
from .trend import TrendReport, classify_trend


@dataclass(frozen=True)
class CutsetReport:
    sizes: tuple
    partial_sums: tuple
    trend: TrendReport

    @property
    def certified_recurrent_trend(self) -> bool:
        return self.trend.certified_unbounded

    def csv(self) -> str:
        lines = ["level,cutset_size,partial_sum"]
        for n, (s, p) in enumerate(zip(self.sizes, self.partial_sums)):
            lines.append(f"{n},{s},{float(p)!r}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GrowthReport:
    balls: tuple
    partial_sums: tuple  # partial sums of n / D(n), n >= 1
    trend: TrendReport

    @property
    def certified_recurrent_trend(self) -> bool:
        return self.trend.certified_unbounded


@dataclass(frozen=True)
class PairedSumReport:
    """Partial sums of n/S_n and of 1/a_n for a positive sequence a."""

    step_sums: tuple  # sums of n / S_n
    reciprocal_sums: tuple  # sums of 1 / a_n
    step_trend: TrendReport
    reciprocal_trend: TrendReport

    @property
    def consistent(self) -> bool:
        """The comparison lemma: a divergent n/S_n trend forces a divergent
        1/a_n trend.  False flags a violation of that implication."""
        if self.step_trend.certified_unbounded:
            return self.reciprocal_trend.certified_unbounded
        return True


def verify_cutsets(ball: Ball, cutsets: list) -> None:
    """Check that explicit edge sets are pairwise disjoint and that each one
    separates the root from the boundary of the materialized ball (hence,
    in the full graph, from all but finitely many vertices).

    Raises ConstructionError naming the offending edge or cutset.
    """
    seen: Counter = Counter()
    normalized = []
    for n, cs in enumerate(cutsets):
        edges = Counter((u, v) if not v < u else (v, u) for u, v in cs)
        for e, m in edges.items():
            avail = ball.edges.get(e, 0)
            if m > avail:
                raise ConstructionError(
                    f"cutset {n} uses edge {e!r} x{m} but the ball has x{avail}")
        normalized.append(edges)
        seen.update(edges)
    for e, m in seen.items():
        if m > ball.edges.get(e, 0):
            raise ConstructionError(
                f"cutsets overlap on edge {e!r} beyond its multiplicity")
    adj = ball.adjacency()
    for n, edges in enumerate(normalized):
        reach = {ball.root}
        stack = [ball.root]
        escaped = None
        while stack and escaped is None:
            v = stack.pop()
            for u, mult in adj[v]:
                key = (u, v) if not v < u else (v, u)
                if mult <= edges.get(key, 0):
                    continue  # every copy of this edge is in the cutset
                if u not in reach:
                    reach.add(u)
                    stack.append(u)
                    if ball.dist[u] == ball.radius:
                        escaped = u
                        break
        if escaped is not None:
            raise ConstructionError(
                f"cutset {n} fails to separate: boundary vertex {escaped!r} "
                f"stays connected to the root")


def nash_williams(cutset_sizes=None, profile: GrowthProfile | None = None,
                  cutsets: list | None = None, ball: Ball | None = None,
                  factor: float = 10.0) -> CutsetReport:
    """Disjoint-cutset partial sums sum 1/#Pi_n with a divergence-trend
    classification.

    Input is one of: explicit ``cutset_sizes``; a GrowthProfile (whose
    sphere-edge sets are the canonical disjoint cutsets); or explicit
    ``cutsets`` as edge lists, verified against ``ball``.
    """
    if cutsets is not None:
        if ball is None:
            raise ValueError("explicit cutsets require the ball for verification")
        verify_cutsets(ball, cutsets)
        sizes = [len(cs) for cs in cutsets]
    elif profile is not None:
        sizes = list(profile.cutsets)
    elif cutset_sizes is not None:
        sizes = [int(s) for s in cutset_sizes]
    else:
        raise ValueError("no cutset data given")
    if any(s <= 0 for s in sizes):
        raise ConstructionError("empty cutset: the graph ends at finite depth")
    sums = np.cumsum([1.0 / s for s in sizes])
    return CutsetReport(sizes=tuple(sizes), partial_sums=tuple(sums),
                        trend=classify_trend(sums, factor=factor))


def growth_criterion(balls, factor: float = 10.0) -> GrowthReport:
    """Partial sums of n / D(n) for a nondecreasing ball-size sequence
    D(0), D(1), ..., classified for a divergence trend."""
    D = np.asarray(balls, dtype=float)
    if (D <= 0).any():
        raise ValueError("ball sizes must be positive")
    if (np.diff(D) < 0).any():
        raise ValueError("ball sizes must be nondecreasing")
    n = np.arange(1, len(D))
    sums = np.cumsum(n / D[1:])
    return GrowthReport(balls=tuple(int(d) for d in D),
                        partial_sums=tuple(sums),
                        trend=classify_trend(sums, factor=factor))


def average_to_step(a, horizon: int | None = None,
                    factor: float = 10.0) -> PairedSumReport:
    """Paired partial sums of the comparison lemma for a positive sequence:
    sum n/S_n (S_n the running sum of a) against sum 1/a_n."""
    a = np.asarray(a, dtype=float)
    if horizon is not None:
        a = a[:horizon]
    if (a <= 0).any():
        raise ValueError("sequence must be positive")
    S = np.cumsum(a)
    n = np.arange(1, len(a) + 1)
    step = np.cumsum(n / S)
    rec = np.cumsum(1.0 / a)
    return PairedSumReport(step_sums=tuple(step), reciprocal_sums=tuple(rec),
                           step_trend=classify_trend(step, factor=factor),
                           reciprocal_trend=classify_trend(rec, factor=factor))

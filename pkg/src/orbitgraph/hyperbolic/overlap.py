"""Volume of the intersection of two hyperbolic balls of equal radius T
whose centers are S apart, by adaptive quadrature in geodesic polar
coordinates.

In polar coordinates around one center, the angular extent of the overlap at
radius rho is k(rho) = arccos((cosh rho cosh S - cosh T)/(sinh rho sinh S)),
clamped to [0, pi]: an argument above 1 means the sphere of radius rho misses
the second ball entirely, below -1 that it lies wholly inside.  The volume is

    vol(S^{n-1}) * int_0^T sinh^n(rho) * int_0^{k(rho)} sin^{n-1} dphi drho,

zero when S > 2T.  The inner integral is closed-form for n = 1, 2 and a
regularized incomplete beta function in general.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import quad
from scipy.special import betainc

from ..errors import SolverError


def _sphere_volume(k: int) -> float:
    """Volume of the unit round sphere S^k."""
    return 2 * math.pi ** ((k + 1) / 2) / math.gamma((k + 1) / 2)


def _sin_power_integral(k: float, n: int) -> float:
    """int_0^k sin^{n-1}(phi) dphi for k in [0, pi]."""
    if n == 1:
        return k
    if n == 2:
        return 1.0 - math.cos(k)
    total = math.sqrt(math.pi) * math.gamma(n / 2) / math.gamma((n + 1) / 2)
    if k <= math.pi / 2:
        return 0.5 * total * betainc(n / 2, 0.5, math.sin(k) ** 2)
    return total - 0.5 * total * betainc(n / 2, 0.5, math.sin(math.pi - k) ** 2)


def hyperbolic_ball_volume(n: int, t: float) -> float:
    """Volume of a radius-t ball in H^{n+1}."""
    val, _ = quad(lambda r: math.sinh(r) ** n, 0.0, t, limit=200)
    return _sphere_volume(n) * val


@dataclass(frozen=True)
class OverlapQuery:
    n: int
    t: float
    s: float
    tol: float = 1e-9

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension parameter n must be >= 1")
        if self.t < 0 or self.s < 0:
            raise ValueError("radii must be nonnegative")


def overlap_volume(query: OverlapQuery | None = None, *, n: int | None = None,
                   t: float | None = None, s: float | None = None,
                   tol: float = 1e-9) -> float:
    """Volume of the overlap of two radius-t balls at center distance s."""
    if query is None:
        query = OverlapQuery(n=n, t=t, s=s, tol=tol)
    n, t, s, tol = query.n, query.t, query.s, query.tol
    if s > 2 * t:
        return 0.0
    if t == 0:
        return 0.0
    if s == 0:
        return hyperbolic_ball_volume(n, t)

    cosh_t, cosh_s, sinh_s = math.cosh(t), math.cosh(s), math.sinh(s)

    def integrand(rho):
        if rho <= 0:
            return 0.0
        x = (math.cosh(rho) * cosh_s - cosh_t) / (math.sinh(rho) * sinh_s)
        k = math.acos(min(1.0, max(-1.0, x)))
        return math.sinh(rho) ** n * _sin_power_integral(k, n)

    lo = max(0.0, s - t)  # below: the sphere misses the far ball, k = 0
    breaks = [p for p in (t - s,) if lo < p < t]  # below: whole sphere inside
    val, err = quad(integrand, lo, t, points=breaks or None, limit=400,
                    epsabs=tol, epsrel=tol)
    scale = max(1.0, abs(val))
    if err > 100 * tol * scale:
        raise SolverError(
            f"overlap quadrature error {err:.2e} above tolerance {tol:.2e}")
    return _sphere_volume(n - 1) * val


def overlap_bound_constant(n: int, ts, ss_step: float = 0.25,
                           s_min: float | None = None) -> tuple:
    """Largest ratio of the overlap volume to exp(n (T - S/2)) over a grid.

    Returns (C, argmax) where C bounds the volume by C e^{n(T - S/2)} on the
    probed grid.
    """
    s_min = math.log(2) if s_min is None else s_min
    worst, arg = 0.0, None
    for t in ts:
        s = s_min
        while s <= 2 * t + 1e-12:
            v = overlap_volume(n=n, t=float(t), s=float(s))
            ratio = v / math.exp(n * (t - s / 2))
            if ratio > worst:
                worst, arg = ratio, (float(t), float(s))
            s += ss_step
    return worst, arg

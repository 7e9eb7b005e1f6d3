import math

import numpy as np
import pytest
from scipy.integrate import quad

from orbitgraph.hyperbolic import (OverlapQuery, hyperbolic_ball_volume,
                                   overlap_volume)
from orbitgraph.hyperbolic.overlap import _sin_power_integral


def test_empty_when_centers_too_far():
    assert overlap_volume(n=1, t=3.0, s=6.5) == 0.0
    assert overlap_volume(n=2, t=1.0, s=2.0001) == 0.0


def test_coincident_centers_full_ball_area():
    # hyperbolic plane: area of a radius-T disc is 2 pi (cosh T - 1)
    for t in (1.0, 3.0, 6.0):
        v = overlap_volume(n=1, t=t, s=0.0)
        exact = 2 * math.pi * (math.cosh(t) - 1)
        assert abs(v - exact) / exact < 1e-6


def test_coincident_centers_h3_volume():
    # H^3 ball volume: pi (sinh(2T) - 2T)
    for t in (1.0, 2.0):
        v = overlap_volume(n=2, t=t, s=0.0)
        exact = math.pi * (math.sinh(2 * t) - 2 * t)
        assert abs(v - exact) / exact < 1e-8


def test_overlap_below_ball_volume():
    for n in (1, 2):
        ball = hyperbolic_ball_volume(n, 3.0)
        assert overlap_volume(n=n, t=3.0, s=1.0) < ball


def test_monotone_decreasing_in_separation():
    for n in (1, 2):
        for t in (3.0, 5.0):
            vals = [overlap_volume(n=n, t=t, s=s)
                    for s in np.arange(0.5, 2 * t, 0.4)]
            for a, b in zip(vals, vals[1:]):
                assert b <= a + 1e-9


def test_monotone_increasing_in_radius():
    for n in (1, 2):
        for s in (1.0, 2.5):
            vals = [overlap_volume(n=n, t=t, s=s)
                    for t in np.arange(1.5, 6.0, 0.5)]
            for a, b in zip(vals, vals[1:]):
                assert b >= a - 1e-9


def test_sin_power_integral_against_quadrature():
    for n in (3, 4, 5):
        for k in (0.3, 1.2, 2.0, math.pi):
            direct, _ = quad(lambda p: math.sin(p) ** (n - 1), 0.0, k)
            assert _sin_power_integral(k, n) == pytest.approx(direct, abs=1e-10)


def test_higher_dimension_consistency():
    # n = 3 volume stays between the n-independent structural bounds
    v = overlap_volume(n=3, t=2.0, s=1.0)
    assert 0 < v < hyperbolic_ball_volume(3, 2.0)


def test_query_validation():
    with pytest.raises(ValueError):
        OverlapQuery(n=0, t=1.0, s=0.5)
    with pytest.raises(ValueError):
        OverlapQuery(n=1, t=-1.0, s=0.5)


def test_symmetric_halfway_case():
    # S = 2T: single tangency point, zero volume (continuity check)
    v = overlap_volume(n=1, t=2.0, s=4.0 - 1e-9)
    assert v < 1e-6

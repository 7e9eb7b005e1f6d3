import math

import numpy as np
import pytest

from orbitgraph.hyperbolic import (Isometry, UpperHalfPlane, counting_curve,
                                   enumerate_orbit, kernel_counting)
from orbit_helpers import axis_translation, schottky_pair

UHP = UpperHalfPlane()

PSL2Z_S = np.array([[0.0, -1.0], [1.0, 0.0]])
PSL2Z_T = np.array([[1.0, 1.0], [0.0, 1.0]])


def brute_force_psl2z_points(t_max: float, word_length: int):
    """Independent oracle: multiply out every word over exact integer
    matrices, dedup points by the exact rational pair (ac+bd, c^2+d^2)."""
    gens = [np.array(m, dtype=np.int64) for m in
            (PSL2Z_S, PSL2Z_T, np.array([[1, -1], [0, 1]]))]
    seen = {}
    frontier = {(1, 0, 0, 1)}
    visited = set(frontier)
    for _ in range(word_length):
        nxt = set()
        for (a, b, c, d) in frontier:
            for g in gens:
                m = np.array([[a, b], [c, d]]) @ g
                key = (int(m[0, 0]), int(m[0, 1]), int(m[1, 0]), int(m[1, 1]))
                if key[0] < 0 or (key[0] == 0 and key[2] < 0):
                    key = tuple(-x for x in key)
                if key not in visited:
                    visited.add(key)
                    nxt.add(key)
        frontier = nxt
    disps = {}
    for (a, b, c, d) in visited:
        point = (a * c + b * d, c * c + d * d)  # exact point identifier
        cosh_d = (a * a + b * b + c * c + d * d) / 2.0
        disps[point] = math.acosh(max(cosh_d, 1.0))
    return sorted(v for v in disps.values() if v <= t_max)


def test_cyclic_orbit_counts():
    length = 2.0
    orbit = enumerate_orbit([axis_translation(length)], t_max=9.0)
    assert orbit.complete
    for t in (0.5, 2.0, 5.0, 8.99):
        assert orbit.count_within(t) == 2 * int(t / length) + 1


def test_psl2z_matches_brute_force_oracle():
    oracle = brute_force_psl2z_points(4.0, word_length=14)
    gens = [Isometry(PSL2Z_S, UHP), Isometry(PSL2Z_T, UHP)]
    orbit = enumerate_orbit(gens, t_max=4.0)
    assert orbit.complete
    mine = sorted(orbit.displacements[orbit.displacements <= 4.0])
    assert len(mine) == len(oracle)
    assert np.allclose(mine, oracle, atol=1e-9)


def test_orbit_monotone_in_horizon():
    gens = [Isometry(PSL2Z_S, UHP), Isometry(PSL2Z_T, UHP)]
    small = enumerate_orbit(gens, t_max=4.0)
    large = enumerate_orbit(gens, t_max=6.0)
    assert len(large) >= len(small)
    for t in (1.0, 2.5, 4.0):
        assert small.count_within(t) == large.count_within(t)


def test_word_cap_flags_incomplete():
    gens = [Isometry(PSL2Z_T, UHP)]
    orbit = enumerate_orbit(gens, t_max=10.0, max_word_length=5)
    assert not orbit.complete
    assert orbit.provable_t < 10.0
    full = enumerate_orbit(gens, t_max=10.0)
    assert full.complete


def test_words_reproduce_points():
    gens = schottky_pair()
    orbit = enumerate_orbit(gens, t_max=8.0)
    name_to_matrix = {}
    mats = [g.matrix for g in gens]
    for i, m in enumerate(mats):
        name_to_matrix[f"g{i}"] = m
        name_to_matrix[f"g{i}~"] = np.linalg.inv(m)
    rng = np.random.default_rng(0)
    for idx in rng.integers(1, len(orbit), size=12):
        word = orbit.word(int(idx))
        mat = np.eye(2)
        for letter in word:
            mat = mat @ name_to_matrix[letter]
        d = UHP.displacements(mat[None])[0]
        assert d == pytest.approx(orbit.displacements[idx], abs=1e-8)


def test_word_lengths_are_bfs_levels():
    gens = schottky_pair()
    orbit = enumerate_orbit(gens, t_max=8.0)
    for idx in (0, 1, len(orbit) // 2, len(orbit) - 1):
        assert orbit.word_lengths[idx] == len(orbit.word(int(idx)))


def test_theta_tracking_consistent_on_free_group():
    gens = schottky_pair()
    orbit = enumerate_orbit(gens, t_max=8.0, theta=[[1], [1]])
    assert orbit.theta is not None
    # exponent sums of the stored words match the tracked images
    for idx in (1, 5, len(orbit) - 1):
        word = orbit.word(int(idx))
        expect = sum(-1 if w.endswith("~") else 1 for w in word)
        assert orbit.theta[idx, 0] == expect


def test_theta_mismatch_detected():
    # S has order two, so exponent-sum 1 on S is not well defined: the
    # relation S.S = identity collides at the base point with image 2 != 0
    gens = [Isometry(PSL2Z_S, UHP), Isometry(PSL2Z_T, UHP)]
    with pytest.raises(ValueError, match="theta"):
        enumerate_orbit(gens, t_max=3.0, theta=[[1], [0]])


def test_kernel_counting_zero_map_keeps_everything():
    gens = schottky_pair()
    orbit = enumerate_orbit(gens, t_max=7.0, theta=[[0], [0]])
    report = kernel_counting(orbit)
    assert report.kernel.count(7.0) == report.full.count(7.0)


def test_kernel_counting_injective_map_keeps_identity():
    orbit = enumerate_orbit([axis_translation(2.0)], t_max=9.0, theta=[[1]])
    report = kernel_counting(orbit)
    assert report.kernel.count(9.0) == 1


def test_kernel_requires_theta():
    orbit = enumerate_orbit(schottky_pair(), t_max=6.0)
    with pytest.raises(ValueError, match="theta"):
        kernel_counting(orbit)


def test_point_budget_flags_incomplete():
    gens = [Isometry(PSL2Z_S, UHP), Isometry(PSL2Z_T, UHP)]
    with pytest.warns(UserWarning, match="budget"):
        orbit = enumerate_orbit(gens, t_max=8.0, max_points=50)
    assert not orbit.complete

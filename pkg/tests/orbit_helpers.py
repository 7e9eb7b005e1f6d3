"""Shared generator constructions for orbit tests."""
import math

import numpy as np

from orbitgraph.hyperbolic import Isometry, UpperHalfPlane

UHP = UpperHalfPlane()


def axis_translation(length: float) -> Isometry:
    lam = math.exp(length / 2)
    return Isometry(np.array([[lam, 0.0], [0.0, 1 / lam]]), UHP)


def conjugated_translation(length: float, a: float, b: float) -> Isometry:
    """Hyperbolic element with axis between boundary points a < b."""
    mobius = np.array([[b, a], [1.0, 1.0]])
    lam = math.exp(length / 2)
    core = np.array([[lam, 0.0], [0.0, 1 / lam]])
    mat = mobius @ core @ np.linalg.inv(mobius)
    return Isometry(mat, UHP)


def schottky_pair(length: float = 2.0):
    return [axis_translation(length),
            conjugated_translation(length, 2.0, 4.0)]

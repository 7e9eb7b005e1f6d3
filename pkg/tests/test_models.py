import math

import numpy as np
import pytest

from orbitgraph.hyperbolic import (Isometry, Lorentz, UpperHalfPlane,
                                   UpperHalfSpace, lorentz_boost,
                                   model_from_name)


def test_identity_displacement_zero():
    for model in (UpperHalfPlane(), UpperHalfSpace(), Lorentz(3)):
        g = Isometry(model.identity(), model)
        assert g.displacement() == pytest.approx(0.0, abs=1e-12)


def test_diagonal_displacement():
    # diag(2, 1/2) moves i to 4i: distance 2 ln 2 along the axis
    g = Isometry(np.array([[2.0, 0.0], [0.0, 0.5]]), UpperHalfPlane())
    assert g.displacement() == pytest.approx(2 * math.log(2), rel=1e-12)


def test_boost_displacement_is_rapidity():
    for n in (1, 2, 3):
        for t in (0.3, 1.0, 2.5):
            g = Isometry(lorentz_boost(n, t), Lorentz(n))
            assert g.displacement() == pytest.approx(t, rel=1e-12)


def test_halfspace_diagonal_displacement():
    lam = complex(math.e, 0)
    g = Isometry(np.array([[lam, 0], [0, 1 / lam]]), UpperHalfSpace())
    assert g.displacement() == pytest.approx(2.0, rel=1e-12)


def test_translation_point_coordinates():
    m = UpperHalfPlane()
    g = Isometry(np.array([[1.0, 1.0], [0.0, 1.0]]), m)
    # point 1 + i embeds at (1/2, 1, 3/2); cosh(d) = 3/2
    assert np.allclose(g.point(), [0.5, 1.0, 1.5])
    assert g.displacement() == pytest.approx(math.acosh(1.5))


def test_determinant_normalization():
    g = Isometry(np.array([[2.0, 2.0], [0.0, 2.0]]), UpperHalfPlane())
    assert np.allclose(g.matrix, [[1.0, 1.0], [0.0, 1.0]])


def test_non_isometry_rejected():
    with pytest.raises(ValueError):
        Isometry(np.array([[1.0, 0.0], [0.0, -1.0]]), UpperHalfPlane())
    bad = np.eye(4)
    bad[0, 1] = 0.5
    with pytest.raises(ValueError):
        Isometry(bad, Lorentz(2))


def test_composition_and_inverse():
    m = UpperHalfPlane()
    a = Isometry(np.array([[2.0, 0.0], [0.0, 0.5]]), m)
    b = Isometry(np.array([[1.0, 3.0], [0.0, 1.0]]), m)
    prod = a @ b
    expect = a.matrix @ b.matrix
    assert np.allclose(prod.matrix, expect)
    ident = prod @ prod.inverse()
    assert np.allclose(ident.matrix, np.eye(2), atol=1e-12)


def test_displacement_symmetric_under_inverse():
    rng = np.random.default_rng(0)
    m = UpperHalfPlane()
    a = Isometry(np.array([[math.e, 0.0], [0.0, 1 / math.e]]), m)
    c = math.cosh(1.0)
    s = math.sinh(1.0)
    b = Isometry(np.array([[c, s], [s, c]]), m)
    word = Isometry(m.identity(), m)
    for _ in range(20):
        word = word @ (a if rng.random() < 0.5 else b)
        assert abs(word.displacement() - word.inverse().displacement()) < 1e-9


def test_lorentz_form_preserved_over_long_words():
    n = 2
    model = Lorentz(n)
    gens = [lorentz_boost(n, 1.0, axis=0), lorentz_boost(n, 1.0, axis=1)]
    rng = np.random.default_rng(1)
    mat = model.identity()
    for _ in range(30):
        mat = mat @ gens[rng.integers(0, 2)]
        if model.drift(mat[None]) > 1e-10:
            mat = model.project(mat)
    assert model.drift(mat[None]) < 1e-6


def test_lorentz_projection_restores_form():
    model = Lorentz(2)
    mat = lorentz_boost(2, 2.0) + 1e-8 * np.ones((4, 4))
    fixed = model.project(mat)
    assert model.drift(fixed[None]) < 1e-12


def test_model_from_name():
    assert model_from_name("uhp").n == 1
    assert model_from_name("halfspace").n == 2
    assert model_from_name("lorentz3").n == 3
    with pytest.raises(ValueError):
        model_from_name("poincare-disk")


def test_shape_mismatch_rejected():
    with pytest.raises(ValueError, match="shape"):
        Isometry(np.eye(3), UpperHalfPlane())


def test_embedded_coordinates_separate_points():
    # hyperboloid embedding keeps nearby distinct orbit points apart:
    # coordinate distance at least the hyperbolic distance, at any scale
    m = UpperHalfPlane()
    base = Isometry(np.array([[math.e ** 2, 0], [0, math.e ** -2]]), m)
    probe = Isometry(np.array([[1.0, 0.05], [0.0, 1.0]]), m)
    p1 = (base @ probe).point()
    p2 = base.point()
    hyp = abs((base @ probe).displacement() - base.displacement())
    assert np.linalg.norm(p1 - p2) > hyp

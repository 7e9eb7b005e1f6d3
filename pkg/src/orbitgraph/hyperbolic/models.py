"""Isometry models of hyperbolic (n+1)-space with a common numerical
interface.

Three models are provided: 2x2 real matrices on the upper half-plane (n = 1),
2x2 complex matrices on upper half-space (n = 2), and (n+2)x(n+2) Lorentz
matrices on the hyperboloid for any n.  All of them expose batched
composition, inversion, drift measurement with re-projection, and canonical
point coordinates: whatever the matrix model, points are reported in
hyperboloid coordinates (x_1, ..., x_{n+1}, x_0) with x_0 = cosh of the
distance to the base point.  In these coordinates the Euclidean separation of
two nearby points is at least their hyperbolic separation, which is what
makes quantized dedup sound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class HyperbolicModel:
    """Shared interface; subclasses fix n, the matrix shape and the base point."""

    name: str = ""
    n: int = 0  # space is H^{n+1}; critical exponents live in [0, n]

    def matrix_shape(self) -> tuple:
        raise NotImplementedError

    def identity(self) -> np.ndarray:
        raise NotImplementedError

    def multiply(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        return A @ B

    def inverse(self, mats: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def drift(self, mats: np.ndarray) -> float:
        """Max deviation from the model's defining constraint."""
        raise NotImplementedError

    def project(self, mats: np.ndarray) -> np.ndarray:
        """Re-project near-isometries back onto the group."""
        raise NotImplementedError

    def points(self, mats: np.ndarray) -> np.ndarray:
        """Hyperboloid coordinates of mat . basepoint, shape (..., n+2)."""
        raise NotImplementedError

    def displacements(self, mats: np.ndarray) -> np.ndarray:
        x0 = self.points(mats)[..., -1]
        return np.arccosh(np.clip(x0, 1.0, None))

    def validate(self, mat: np.ndarray, tol: float | None = None) -> None:
        d = self.drift(np.asarray(mat)[None])
        limit = tol if tol is not None else self.drift_tolerance
        if not np.isfinite(d) or d > limit:
            raise ValueError(
                f"matrix is not a {self.name} isometry (drift {d:.3e})")

    def canonicalize(self, mat: np.ndarray) -> np.ndarray:
        """Reject non-isometries, then polish roundoff drift."""
        self.validate(mat, tol=1e-6)
        out = self.project(mat[None])[0]
        self.validate(out)
        return out

    drift_tolerance = 1e-9


class _TwoByTwo(HyperbolicModel):
    """Common 2x2 machinery: unit determinant, adjugate inverse."""

    dtype = np.float64
    drift_tolerance = 1e-12

    def matrix_shape(self):
        return (2, 2)

    def identity(self):
        return np.eye(2, dtype=self.dtype)

    def inverse(self, mats):
        out = np.empty_like(mats)
        out[..., 0, 0] = mats[..., 1, 1]
        out[..., 1, 1] = mats[..., 0, 0]
        out[..., 0, 1] = -mats[..., 0, 1]
        out[..., 1, 0] = -mats[..., 1, 0]
        return out

    def _det(self, mats):
        return (mats[..., 0, 0] * mats[..., 1, 1]
                - mats[..., 0, 1] * mats[..., 1, 0])

    def drift(self, mats):
        return float(np.abs(self._det(mats) - 1.0).max())

    def project(self, mats):
        det = self._det(mats)
        return mats / np.sqrt(det)[..., None, None]

    def canonicalize(self, mat):
        # any nonzero scalar multiple represents the same Moebius action
        out = self.project(mat[None].astype(self.dtype))[0]
        self.validate(out)
        return out


class UpperHalfPlane(_TwoByTwo):
    """Real Moebius action on the upper half-plane; base point i."""

    name = "uhp"
    n = 1

    def project(self, mats):
        det = self._det(mats)
        if np.any(det <= 0):
            raise ValueError("matrix has nonpositive determinant; "
                             "not an orientation-preserving isometry")
        return mats / np.sqrt(det)[..., None, None]

    def points(self, mats):
        a, b = mats[..., 0, 0], mats[..., 0, 1]
        c, d = mats[..., 1, 0], mats[..., 1, 1]
        den = c * c + d * d
        x = (a * c + b * d) / den
        y = 1.0 / den
        r2 = x * x + y * y
        return np.stack([(r2 - 1.0) / (2 * y), x / y, (r2 + 1.0) / (2 * y)],
                        axis=-1)


class UpperHalfSpace(_TwoByTwo):
    """Complex Moebius action on upper half-space H^3; base point (0, 0, 1)."""

    name = "halfspace"
    n = 2
    dtype = np.complex128

    def drift(self, mats):
        return float(np.abs(self._det(mats) - 1.0).max())

    def project(self, mats):
        det = self._det(mats)
        if np.any(np.abs(det) == 0):
            raise ValueError("singular matrix")
        return mats / np.sqrt(det.astype(np.complex128))[..., None, None]

    def points(self, mats):
        a, b = mats[..., 0, 0], mats[..., 0, 1]
        c, d = mats[..., 1, 0], mats[..., 1, 1]
        den = (c * c.conj() + d * d.conj()).real
        z = (a * c.conj() + b * d.conj()) / den
        t = 1.0 / den
        r2 = (z * z.conj()).real + t * t
        return np.stack([(r2 - 1.0) / (2 * t), z.real / t, z.imag / t,
                         (r2 + 1.0) / (2 * t)], axis=-1)


class Lorentz(HyperbolicModel):
    """Orthochronous Lorentz matrices acting on the upper hyperboloid sheet
    in R^{n+1,1}; base point (0, ..., 0, 1), form diag(1, ..., 1, -1)."""

    drift_tolerance = 1e-9

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = int(n)
        self.name = f"lorentz{n}"
        self._j = np.ones(n + 2)
        self._j[-1] = -1.0

    def matrix_shape(self):
        return (self.n + 2, self.n + 2)

    def identity(self):
        return np.eye(self.n + 2)

    def inverse(self, mats):
        # G^-1 = J G^T J
        return self._j[:, None] * np.swapaxes(mats, -1, -2) * self._j[None, :]

    def drift(self, mats):
        gram = np.einsum("...ji,j,...jk->...ik", mats, self._j, mats)
        gram[..., np.arange(self.n + 2), np.arange(self.n + 2)] -= self._j
        return float(np.abs(gram).max())

    def project(self, mats):
        """Gram-Schmidt in the Lorentz form: fix the timelike column first,
        then the spacelike ones in order."""
        out = np.array(mats, dtype=float, copy=True)
        single = out.ndim == 2
        if single:
            out = out[None]
        j = self._j
        t = out[..., :, -1]
        norm = np.sqrt(np.maximum(-(np.einsum("...i,i,...i->...", t, j, t)), 1e-30))
        out[..., :, -1] = t / norm[..., None]
        for col in range(self.n + 1):
            u = out[..., :, col]
            tcol = out[..., :, -1]
            u = u + np.einsum("...i,i,...i->...", u, j, tcol)[..., None] * tcol
            for prev in range(col):
                p = out[..., :, prev]
                u = u - np.einsum("...i,i,...i->...", u, j, p)[..., None] * p
            norm = np.sqrt(np.maximum(np.einsum("...i,i,...i->...", u, j, u), 1e-30))
            out[..., :, col] = u / norm[..., None]
        if np.any(out[..., -1, -1] <= 0):
            raise ValueError("matrix reverses the hyperboloid sheets")
        return out[0] if single else out

    def points(self, mats):
        return np.asarray(mats)[..., :, -1]


def model_from_name(name: str) -> HyperbolicModel:
    key = name.strip().lower()
    if key in ("uhp", "halfplane", "h2"):
        return UpperHalfPlane()
    if key in ("halfspace", "h3"):
        return UpperHalfSpace()
    if key.startswith("lorentz"):
        suffix = key[len("lorentz"):]
        return Lorentz(int(suffix) if suffix else 1)
    raise ValueError(f"unknown model {name!r}")


def lorentz_boost(n: int, rapidity: float, axis: int = 0) -> np.ndarray:
    """Pure boost of the given rapidity along a spatial axis."""
    m = np.eye(n + 2)
    c, s = math.cosh(rapidity), math.sinh(rapidity)
    m[axis, axis] = c
    m[-1, -1] = c
    m[axis, -1] = s
    m[-1, axis] = s
    return m


@dataclass(frozen=True)
class Isometry:
    """A validated isometry in a chosen model."""

    matrix: np.ndarray
    model: HyperbolicModel

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=self.model.identity().dtype)
        if mat.shape != self.model.matrix_shape():
            raise ValueError(
                f"matrix shape {mat.shape} does not fit model {self.model.name}")
        object.__setattr__(self, "matrix", self.model.canonicalize(mat))

    def __matmul__(self, other: "Isometry") -> "Isometry":
        if other.model.name != self.model.name:
            raise ValueError("cannot compose isometries across models")
        return Isometry(self.model.multiply(self.matrix, other.matrix), self.model)

    def inverse(self) -> "Isometry":
        return Isometry(self.model.inverse(self.matrix), self.model)

    def displacement(self) -> float:
        """Hyperbolic distance by which the base point moves."""
        return float(self.model.displacements(self.matrix[None])[0])

    def point(self) -> np.ndarray:
        return self.model.points(self.matrix[None])[0]

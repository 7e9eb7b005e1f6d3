from .models import (Isometry, Lorentz, UpperHalfPlane, UpperHalfSpace,
                     lorentz_boost, model_from_name)
from .orbit import Orbit, enumerate_orbit
from .counting import (CountingCurve, DeltaEstimate, KernelReport,
                       counting_curve, estimate_delta, kernel_counting,
                       poincare_partial)
from .overlap import OverlapQuery, hyperbolic_ball_volume, overlap_volume
from .laplace import SpectralFit, laplace_fit
from .files import read_generator_file, write_generator_file

__all__ = [
    "Isometry", "Lorentz", "UpperHalfPlane", "UpperHalfSpace",
    "lorentz_boost", "model_from_name",
    "Orbit", "enumerate_orbit",
    "CountingCurve", "DeltaEstimate", "KernelReport", "counting_curve",
    "estimate_delta", "kernel_counting", "poincare_partial",
    "OverlapQuery", "hyperbolic_ball_volume", "overlap_volume",
    "SpectralFit", "laplace_fit",
    "read_generator_file", "write_generator_file",
]

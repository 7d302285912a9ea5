"""Exact classification and solution of X P X* + X Q + R X* = S over the quaternions."""

from .quaternion import Quaternion, ZeroDivisor
from .sets import Circle, Empty, Point, SolutionSet, ThreeSphere, TwoPoints, emit_samples
from .solver import (
    EquationCoefficients,
    InvalidCoefficients,
    Tolerances,
    residual,
    solve,
)

__all__ = [
    "Circle",
    "Empty",
    "EquationCoefficients",
    "InvalidCoefficients",
    "Point",
    "Quaternion",
    "SolutionSet",
    "ThreeSphere",
    "Tolerances",
    "TwoPoints",
    "ZeroDivisor",
    "emit_samples",
    "residual",
    "solve",
]

__version__ = "0.1.0"

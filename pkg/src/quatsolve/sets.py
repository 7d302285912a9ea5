"""Solution-set values: empty, one point, two points, a circle or a 3-sphere."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import ClassVar, Union

import numpy as np

from .geometry import SolutionCircle, circle_point, distance_to_circle
from .quaternion import Quaternion, modulus


@dataclass(frozen=True)
class Empty:
    kind: ClassVar[str] = "empty"

    def members(self) -> tuple[Quaternion, ...]:
        return ()

    def distance(self, q: Quaternion) -> float:
        return math.inf


@dataclass(frozen=True)
class Point:
    x: Quaternion
    kind: ClassVar[str] = "point"

    def members(self) -> tuple[Quaternion, ...]:
        return (self.x,)

    def distance(self, q: Quaternion) -> float:
        return modulus(q - self.x)


@dataclass(frozen=True)
class TwoPoints:
    first: Quaternion
    second: Quaternion
    kind: ClassVar[str] = "two_points"

    def members(self) -> tuple[Quaternion, ...]:
        return (self.first, self.second)

    def distance(self, q: Quaternion) -> float:
        return min(modulus(q - self.first), modulus(q - self.second))


@dataclass(frozen=True)
class Circle:
    circle: SolutionCircle
    kind: ClassVar[str] = "circle"

    def members(self) -> tuple[Quaternion, ...]:
        return ()

    def distance(self, q: Quaternion) -> float:
        return distance_to_circle(self.circle, q)


@dataclass(frozen=True)
class ThreeSphere:
    center: Quaternion
    radius: float
    kind: ClassVar[str] = "three_sphere"

    def members(self) -> tuple[Quaternion, ...]:
        return ()

    def distance(self, q: Quaternion) -> float:
        return abs(modulus(q - self.center) - self.radius)


SolutionSet = Union[Empty, Point, TwoPoints, Circle, ThreeSphere]

KINDS = ("empty", "point", "two_points", "circle", "three_sphere")


def is_finite(sol: SolutionSet) -> bool:
    return not isinstance(sol, (Circle, ThreeSphere))


def emit_samples(sol: SolutionSet, n: int, seed: int = 0) -> list[Quaternion]:
    """Return ``n`` members of an infinite set, or every member of a finite one.

    Circles are sampled at equispaced angles ``2 pi k / n``; 3-spheres at
    seeded uniformly distributed directions.
    """
    if n < 0:
        raise ValueError("sample count must be nonnegative")
    if isinstance(sol, Circle):
        return [circle_point(sol.circle, 2.0 * math.pi * k / n) for k in range(n)]
    if isinstance(sol, ThreeSphere):
        rng = np.random.default_rng(seed)
        dirs = rng.standard_normal((n, 4))
        dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
        return [sol.center + Quaternion(*d) * sol.radius for d in dirs]
    return list(sol.members())


def circle_to_dict(c: SolutionCircle) -> dict:
    return {
        "center": c.center.to_list(),
        "radius": c.radius,
        "frame": [c.plane.e1.to_list(), c.plane.e2.to_list()],
    }


def to_dict(sol: SolutionSet) -> dict:
    out: dict = {"kind": sol.kind}
    if isinstance(sol, (Empty, Point, TwoPoints)):
        out["members"] = [m.to_list() for m in sol.members()]
    elif isinstance(sol, Circle):
        out["circle"] = circle_to_dict(sol.circle)
    elif isinstance(sol, ThreeSphere):
        out["sphere"] = {"center": sol.center.to_list(), "radius": sol.radius}
    return out


def same_set(a: SolutionSet, b: SolutionSet, tol: float) -> bool:
    """Set equality up to ``tol``; finite sets compare as unordered collections."""
    if a.kind != b.kind:
        return False
    if isinstance(a, Empty):
        return True
    if isinstance(a, ThreeSphere):
        return modulus(a.center - b.center) <= tol and abs(a.radius - b.radius) <= tol
    if isinstance(a, Circle):
        ca, cb = a.circle, b.circle
        if modulus(ca.center - cb.center) > tol or abs(ca.radius - cb.radius) > tol:
            return False
        # same plane: each frame of one lies in the span of the other
        probes = emit_samples(a, 8) + emit_samples(b, 8)
        return all(a.distance(q) <= tol and b.distance(q) <= tol for q in probes)
    return all(b.distance(m) <= tol for m in a.members()) and all(
        a.distance(m) <= tol for m in b.members()
    )

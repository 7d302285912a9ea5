"""Planes, circles, lines and hyperplanes in quaternion space.

Both reductions of the quadratic equation end in one of two intersection
problems: a 3-sphere against an affine line, or a circle lying in a 2-plane
through the origin against a hyperplane.  This module holds those objects and
their intersections.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .quaternion import (
    ONE,
    Quaternion,
    Vector3,
    dot4,
    modulus,
    mul,
    norm_sq,
    normalize,
)

#: default tolerance for calling a quadratic discriminant zero
TANGENCY_TOL = 1e-10


class ZeroVector(ValueError):
    """A direction that must be nonzero has zero modulus."""


class DegenerateDirection(ValueError):
    """An affine line was given a zero direction."""


@dataclass(frozen=True)
class BisectorPlane:
    """The 2-plane through the origin solving ``V p_hat = s_hat V``.

    ``e1`` and ``e2`` are an orthonormal frame of the plane.
    """

    e1: Quaternion
    e2: Quaternion
    p_hat: Quaternion
    s_hat: Quaternion

    def point(self, a: float, b: float) -> Quaternion:
        return self.e1 * a + self.e2 * b

    def bisector_residual(self, v: Quaternion) -> float:
        return modulus(mul(v, self.p_hat) - mul(self.s_hat, v))

    def project(self, q: Quaternion) -> tuple[float, float]:
        return dot4(q, self.e1), dot4(q, self.e2)


@dataclass(frozen=True)
class SolutionCircle:
    plane: BisectorPlane
    radius: float
    center: Quaternion = Quaternion()

    def translated(self, offset: Quaternion) -> SolutionCircle:
        return SolutionCircle(self.plane, self.radius, self.center + offset)


@dataclass(frozen=True)
class AffineLine:
    """The line ``xi -> point + xi * direction``."""

    point: Quaternion
    direction: Quaternion

    def __post_init__(self):
        if norm_sq(self.direction) == 0.0:
            raise DegenerateDirection("affine line direction has zero modulus")

    def at(self, xi: float) -> Quaternion:
        return self.point + self.direction * xi


@dataclass(frozen=True)
class Hyperplane:
    """The set ``{Z : <Z, normal> = offset}``."""

    normal: Quaternion
    offset: float

    def __post_init__(self):
        if norm_sq(self.normal) == 0.0:
            raise ZeroVector("hyperplane normal has zero modulus")

    def signed_residual(self, z: Quaternion) -> float:
        return dot4(z, self.normal) - self.offset


class Contained:
    """Marker returned when a circle lies entirely inside a hyperplane."""

    __slots__ = ()

    def __repr__(self):
        return "CONTAINED"


CONTAINED = Contained()


def _unit_pure(v: Quaternion, name: str) -> Quaternion:
    v = Quaternion(0.0, v.x, v.y, v.z)
    n = modulus(v)
    if n == 0.0:
        raise ZeroVector(f"{name} must be a nonzero pure vector")
    return v / n


def _orthogonal_unit(v: Vector3) -> Vector3:
    # cross with the axis least aligned with v
    ax = min(range(3), key=lambda k: abs(v[k]))
    axis = Vector3(*(1.0 if k == ax else 0.0 for k in range(3)))
    w = v.cross(axis)
    n = w.norm()
    return Vector3(w.x / n, w.y / n, w.z / n)


def bisector_plane(p: Quaternion, s: Quaternion) -> BisectorPlane:
    """Frame of the plane of quaternions ``V`` with ``V p_hat - s_hat V = 0``.

    Only the vector parts of ``p`` and ``s`` are used.  When ``s_hat`` is
    closer to ``p_hat`` than to ``-p_hat``, the first frame vector is the
    unit bisector ``u = (p_hat + s_hat)/|p_hat + s_hat|`` and the second is
    ``u p_hat``.  Otherwise ``u`` is badly conditioned, so the first frame
    vector is built from a pure ``w`` orthogonal to ``p_hat - s_hat``,
    which stays accurate all the way to ``s_hat = -p_hat``; there it reduces
    to the plane of pure vectors orthogonal to ``p_hat``.

    >>> from quatsolve.quaternion import I
    >>> plane = bisector_plane(I, -I)
    >>> abs(plane.e1.w) + abs(plane.e1.x) + abs(plane.e2.w) + abs(plane.e2.x)
    0.0
    """
    p_hat = _unit_pure(p, "p")
    s_hat = _unit_pure(s, "s")
    plus = p_hat + s_hat
    minus = p_hat - s_hat
    if norm_sq(plus) >= norm_sq(minus):
        e1 = normalize(plus)
    else:
        m = Vector3.of(minus)
        w = _orthogonal_unit(m)
        nxw = Vector3.of(plus).cross(w)
        v0 = nxw.dot(m) / m.dot(m)
        e1 = normalize(Quaternion(v0, w.x, w.y, w.z))
    e2 = mul(e1, p_hat)
    e2 = normalize(e2 - e1 * dot4(e2, e1))
    return BisectorPlane(e1, e2, p_hat, s_hat)


def solution_circle(p: Quaternion, s: Quaternion, tol: float = 0.0) -> SolutionCircle | Quaternion:
    """Solutions of ``X p X* = s`` for pure ``p != 0`` and pure ``s``.

    Returns the zero quaternion when ``|s| <= tol |p|``; otherwise the circle of
    radius ``sqrt(|s|/|p|)`` about the origin in :func:`bisector_plane`.
    """
    p = Quaternion(0.0, p.x, p.y, p.z)
    s = Quaternion(0.0, s.x, s.y, s.z)
    mp = modulus(p)
    if mp == 0.0:
        raise ZeroVector("p must be a nonzero pure vector")
    ms = modulus(s)
    if ms <= tol * mp:
        return Quaternion()
    return SolutionCircle(bisector_plane(p, s), math.sqrt(ms / mp))


def circle_point(c: SolutionCircle, phi: float) -> Quaternion:
    pl = c.plane
    return c.center + (pl.e1 * math.cos(phi) + pl.e2 * math.sin(phi)) * c.radius


def distance_to_circle(c: SolutionCircle, q: Quaternion) -> float:
    d = q - c.center
    a, b = c.plane.project(d)
    in_plane = math.hypot(a, b)
    out = modulus(d - c.plane.point(a, b))
    return math.hypot(out, in_plane - c.radius)


def _half_disc_roots(a: float, bh: float, c: float, scale: float, tol: float) -> list[float]:
    """Real roots of ``a t^2 + 2 bh t + c`` (``a > 0``), larger root first.

    A reduced discriminant ``bh^2 - a c`` within ``tol * scale`` of zero
    yields a single double root.
    """
    disc = bh * bh - a * c
    if abs(disc) <= tol * scale:
        return [-bh / a]
    if disc < 0.0:
        return []
    sq = math.sqrt(disc)
    big = -(bh + math.copysign(sq, bh))
    if big == 0.0:
        return [0.0]
    r1, r2 = big / a, c / big
    return [max(r1, r2), min(r1, r2)]


def intersect_sphere_line(rho: float, line: AffineLine, tol: float = TANGENCY_TOL) -> list[Quaternion]:
    """Points of ``line`` on the 3-sphere ``|Y|^2 = rho`` about the origin."""
    if rho < 0.0:
        return []
    a = norm_sq(line.direction)
    bh = dot4(line.point, line.direction)
    b2 = norm_sq(line.point)
    scale = bh * bh + a * (b2 + rho)
    return [line.at(xi) for xi in _half_disc_roots(a, bh, b2 - rho, scale, tol)]


def intersect_circle_hyperplane(
    c: SolutionCircle,
    h: Hyperplane,
    tol: float = 1e-9,
    tangency_tol: float = TANGENCY_TOL,
) -> Contained | list[Quaternion]:
    """Intersect a circle with a hyperplane.

    Writing ``Z = center + a e1 + b e2``, the hyperplane becomes the line
    ``alpha a + beta b = gap`` in the ``(a, b)`` chart.  When the normal is
    orthogonal to the circle's plane (``|alpha|, |beta| <= tol |normal|``)
    the answer is :data:`CONTAINED` if the center lies on the hyperplane and
    empty otherwise.  Intersection points come out in descending order of
    the parameter along the chart line.
    """
    n_mod = modulus(h.normal)
    alpha = dot4(c.plane.e1, h.normal)
    beta = dot4(c.plane.e2, h.normal)
    gap = h.offset - dot4(c.center, h.normal)
    if abs(alpha) <= tol * n_mod and abs(beta) <= tol * n_mod:
        lhs_scale = max(1.0, abs(h.offset), n_mod * modulus(c.center))
        return CONTAINED if abs(gap) <= tol * lhs_scale else []
    g = math.hypot(alpha, beta)
    dist = gap / g
    foot = (alpha / g * dist, beta / g * dist)
    along = (-beta / g, alpha / g)
    r2, d2 = c.radius * c.radius, dist * dist
    ts = _half_disc_roots(1.0, 0.0, d2 - r2, d2 + r2, tangency_tol)
    return [
        c.center + c.plane.point(foot[0] + t * along[0], foot[1] + t * along[1])
        for t in ts
    ]


def plane_complement(plane: BisectorPlane) -> tuple[Quaternion, Quaternion]:
    """An orthonormal basis of the orthogonal complement of ``plane`` in R^4."""
    basis = [plane.e1, plane.e2]
    out: list[Quaternion] = []
    for cand in (ONE, Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1)):
        v = cand
        for b in basis + out:
            v = v - b * dot4(v, b)
        if modulus(v) > 0.5:
            out.append(normalize(v))
        if len(out) == 2:
            break
    return out[0], out[1]

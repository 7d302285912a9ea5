"""Closed-form solution of ``X P X* + X Q + R X* = S``.

Real ``P = p0`` translates to ``Y = X + (Q* + R)/(2 p0)`` and the equation
splits into a 3-sphere ``|Y|^2 = rho`` and an affine line.  Nonreal ``P``
translates to ``Z = X + (R - Q*)(P - P*)^-1``; the vector part then pins
``Z`` to a circle in a bisector plane and the scalar part to a hyperplane.

Exact conditions such as ``Q = R*`` become comparisons against
``eps_class * scale`` where ``scale = max(1, |P|, |Q|, |R|, |S|)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .geometry import (
    TANGENCY_TOL,
    Hyperplane,
    SolutionCircle,
    intersect_circle_hyperplane,
    solution_circle,
)
from .quaternion import Quaternion, conjugate, dot4, inverse, modulus, mul, norm_sq
from .sets import Circle, Empty, Point, SolutionSet, ThreeSphere, TwoPoints

EPS_CLASS = 1e-9


class InvalidCoefficients(ValueError):
    """The quadratic coefficient ``P`` is zero."""


class Branch(enum.Enum):
    REAL = "real"
    NONREAL = "nonreal"


@dataclass(frozen=True)
class Tolerances:
    #: relative tolerance for the exact equalities in the case trees
    eps_class: float = EPS_CLASS
    #: relative tolerance for a zero chart discriminant (nonreal branch)
    tangency: float = TANGENCY_TOL


DEFAULT_TOLERANCES = Tolerances()

QuaternionLike = Union[Quaternion, Sequence[float], float, int]


def as_quaternion(v: QuaternionLike) -> Quaternion:
    if isinstance(v, Quaternion):
        return v
    if isinstance(v, (int, float)):
        return Quaternion.real(v)
    return Quaternion.from_list(v)


@dataclass(frozen=True)
class EquationCoefficients:
    """Coefficients of ``X P X* + X Q + R X* = S``; ``P`` must be nonzero."""

    P: Quaternion
    Q: Quaternion
    R: Quaternion
    S: Quaternion

    def __post_init__(self):
        for name in "PQRS":
            object.__setattr__(self, name, as_quaternion(getattr(self, name)))
        if any(not math.isfinite(v) for name in "PQRS" for v in getattr(self, name)):
            raise InvalidCoefficients("coefficients must be finite")
        if norm_sq(self.P) == 0.0:
            raise InvalidCoefficients("the quadratic coefficient P must be nonzero")

    @property
    def scale(self) -> float:
        return max(1.0, modulus(self.P), modulus(self.Q), modulus(self.R), modulus(self.S))

    def scaled(self, lam: float) -> EquationCoefficients:
        return EquationCoefficients(self.P * lam, self.Q * lam, self.R * lam, self.S * lam)

    def conjugated(self) -> EquationCoefficients:
        """Coefficients of the conjugated equation ``X P* X* + X R* + Q* X* = S*``."""
        return EquationCoefficients(
            conjugate(self.P), conjugate(self.R), conjugate(self.Q), conjugate(self.S)
        )


def lhs(c: EquationCoefficients, x: Quaternion) -> Quaternion:
    xs = conjugate(x)
    return mul(mul(x, c.P), xs) + mul(x, c.Q) + mul(c.R, xs)


def residual(c: EquationCoefficients, x: Quaternion) -> float:
    """``|X P X* + X Q + R X* - S|``."""
    return modulus(lhs(c, x) - c.S)


def residual_scale(c: EquationCoefficients, x: Quaternion) -> float:
    """Size of the terms in the residual at ``x``; used to make residuals relative."""
    return c.scale * max(1.0, norm_sq(x))


def classify_p(c: EquationCoefficients, eps: float = EPS_CLASS) -> Branch:
    if modulus(c.P.vector) <= eps * modulus(c.P):
        return Branch.REAL
    return Branch.NONREAL


@dataclass(frozen=True)
class ReducedRealForm:
    """``p0 |Y|^2 + Y Q_tilde - Q_tilde* Y* = S_tilde`` with ``Y = X + shift``."""

    p0: float
    Q_tilde: Quaternion
    S_tilde: Quaternion
    rho: float
    shift: Quaternion
    Q_minus_Rc: Quaternion
    Delta: Optional[float]

    def residual(self, y: Quaternion) -> Quaternion:
        return (
            Quaternion.real(self.p0 * norm_sq(y))
            + mul(y, self.Q_tilde)
            - mul(conjugate(self.Q_tilde), conjugate(y))
            - self.S_tilde
        )


@dataclass(frozen=True)
class ReducedNonrealForm:
    """``Z P Z* + Z R_tilde* + R_tilde Z* = S_tilde`` with ``Z = X + shift``."""

    P: Quaternion
    R_tilde: Quaternion
    S_tilde: Quaternion
    shift: Quaternion
    hyperplane_offset: Optional[float]

    def residual(self, z: Quaternion) -> Quaternion:
        zs = conjugate(z)
        return (
            mul(mul(z, self.P), zs)
            + mul(z, conjugate(self.R_tilde))
            + mul(self.R_tilde, zs)
            - self.S_tilde
        )


def reduce_real(c: EquationCoefficients, tol: Tolerances = DEFAULT_TOLERANCES) -> ReducedRealForm:
    """Translate away the mixed linear terms when ``P`` is real.

    Only the scalar part of ``P`` is used.
    """
    p0 = c.P.w
    if p0 == 0.0:
        raise InvalidCoefficients("real branch needs a nonzero scalar part of P")
    Q, R, S = c.Q, c.R, c.S
    Qc, Rc = conjugate(Q), conjugate(R)
    sum_ = Qc + R
    shift = sum_ / (2.0 * p0)
    q_minus = Q - Rc
    S_tilde = (
        S
        + norm_sq(sum_) / (4.0 * p0)
        + (mul(R, Q) - mul(Qc, Rc)) / (2.0 * p0)
    )
    rho = S_tilde.w / p0
    delta = None
    if modulus(q_minus) > tol.eps_class * c.scale:
        delta = rho * norm_sq(q_minus) - norm_sq(S_tilde.vector)
    return ReducedRealForm(p0, q_minus * 0.5, S_tilde, rho, shift, q_minus, delta)


def solve_real_p(c: EquationCoefficients, tol: Tolerances = DEFAULT_TOLERANCES) -> SolutionSet:
    red = reduce_real(c, tol)
    t = tol.eps_class * c.scale
    s_vec = red.S_tilde.vector
    s_vec_mod = modulus(s_vec)
    st0 = red.S_tilde.w
    centre = -red.shift

    if abs(st0) <= t:
        return Point(centre) if s_vec_mod <= t else Empty()
    if red.rho < 0.0:
        return Empty()
    if red.Delta is None:
        if s_vec_mod <= t:
            return ThreeSphere(centre, math.sqrt(red.rho))
        return Empty()

    delta = red.Delta
    inv = inverse(red.Q_minus_Rc)
    band = tol.eps_class * (red.rho * norm_sq(red.Q_minus_Rc) + s_vec_mod * s_vec_mod)
    if abs(delta) <= band:
        return Point(mul(s_vec, inv) + centre)
    if delta < 0.0:
        return Empty()
    root = math.sqrt(delta)
    return TwoPoints(
        mul(s_vec + root, inv) + centre,
        mul(s_vec - root, inv) + centre,
    )


def reduce_nonreal(c: EquationCoefficients) -> ReducedNonrealForm:
    P, Q, R, S = c.P, c.Q, c.R, c.S
    Pc, Qc, Rc = conjugate(P), conjugate(Q), conjugate(R)
    diff = P - Pc
    if norm_sq(diff) == 0.0:
        raise InvalidCoefficients("nonreal branch needs a nonzero vector part of P")
    diff_inv = inverse(diff)
    n = norm_sq(diff)
    R_tilde = mul(mul(Qc, P) - mul(R, Pc), diff_inv)
    correction = (
        mul(mul(Qc, P), Rc)
        + mul(mul(R, Pc), Q)
        + mul(mul(R, Pc - P), Q)
        - mul(mul(Qc, Pc), Q)
        - mul(mul(R, Pc), Rc)
    )
    S_tilde = S + correction / n
    shift = mul(R - Qc, diff_inv)
    s_vec_mod = modulus(S_tilde.vector)
    offset = None
    if s_vec_mod > 0.0:
        p_mod = modulus(P.vector)
        offset = (S_tilde.w * p_mod - P.w * s_vec_mod) / (2.0 * p_mod)
    return ReducedNonrealForm(P, R_tilde, S_tilde, shift, offset)


def solve_nonreal_p(c: EquationCoefficients, tol: Tolerances = DEFAULT_TOLERANCES) -> SolutionSet:
    red = reduce_nonreal(c)
    t = tol.eps_class * c.scale
    back = -red.shift
    St = red.S_tilde
    if modulus(St) <= t:
        return Point(back)
    s_vec = St.vector
    if modulus(s_vec) <= t:
        return Empty()

    circle = solution_circle(c.P.vector, s_vec)
    assert isinstance(circle, SolutionCircle)
    offset = red.hyperplane_offset
    Rt = red.R_tilde
    alpha = dot4(circle.plane.e1, Rt)
    beta = dot4(circle.plane.e2, Rt)
    if abs(alpha) <= t and abs(beta) <= t:
        if abs(2.0 * offset) <= t:
            return Circle(circle.translated(back))
        return Empty()

    hits = intersect_circle_hyperplane(
        circle, Hyperplane(Rt, offset), tol=t / modulus(Rt), tangency_tol=tol.tangency
    )
    pts = [z + back for z in hits]
    if len(pts) == 2:
        return TwoPoints(pts[0], pts[1])
    if len(pts) == 1:
        return Point(pts[0])
    return Empty()


def solve(c: EquationCoefficients, tol: Tolerances = DEFAULT_TOLERANCES) -> SolutionSet:
    """Complete solution set of ``X P X* + X Q + R X* = S``.

    >>> sol = solve(EquationCoefficients(1, 1, 1, -1))
    >>> sol.kind, sol.x.w
    ('point', -1.0)
    >>> solve(EquationCoefficients(1, 0, 0, -1))
    Empty()
    """
    if classify_p(c, tol.eps_class) is Branch.REAL:
        return solve_real_p(c, tol)
    return solve_nonreal_p(c, tol)

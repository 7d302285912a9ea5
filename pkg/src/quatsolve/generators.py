"""Random coefficient generators, including the measure-zero degenerate families.

Circle and 3-sphere solution sets only occur on thin subsets of coefficient
space, so random sampling never reaches them.  These generators build such
instances backwards from the reduced form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import SolutionCircle, bisector_plane, plane_complement
from .quaternion import Quaternion, conjugate, inverse, modulus, mul, norm_sq
from .sets import Circle, SolutionSet, ThreeSphere
from .solver import EquationCoefficients


@dataclass(frozen=True)
class DegenerateInstance:
    coefficients: EquationCoefficients
    expected: SolutionSet


def random_quaternion(rng: np.random.Generator, low: float = -2.0, high: float = 2.0) -> Quaternion:
    return Quaternion(*rng.uniform(low, high, 4))


def random_unit(rng: np.random.Generator) -> Quaternion:
    v = rng.standard_normal(4)
    return Quaternion(*(v / np.linalg.norm(v)))


def random_coefficients(rng: np.random.Generator, low: float = -2.0, high: float = 2.0,
                        min_p: float = 0.1) -> EquationCoefficients:
    """Components uniform in ``[low, high]``; ``P`` is redrawn while ``|P| < min_p``."""
    while True:
        P = random_quaternion(rng, low, high)
        if modulus(P) >= min_p:
            break
    return EquationCoefficients(P, random_quaternion(rng, low, high),
                                random_quaternion(rng, low, high),
                                random_quaternion(rng, low, high))


def three_sphere_instance(rng: np.random.Generator) -> DegenerateInstance:
    """Real ``P``, ``R = Q*`` and real ``S`` chosen so the sphere radius is positive."""
    p0 = rng.choice([-1.0, 1.0]) * rng.uniform(0.5, 2.0)
    Q = random_quaternion(rng)
    R = conjugate(Q)
    rho = rng.uniform(0.25, 4.0)
    s0 = p0 * rho - norm_sq(Q) / p0
    coeffs = EquationCoefficients(Quaternion.real(p0), Q, R, Quaternion.real(s0))
    centre = -(conjugate(Q) + R) / (2.0 * p0)
    return DegenerateInstance(coeffs, ThreeSphere(centre, math.sqrt(rho)))


def circle_instance(rng: np.random.Generator) -> DegenerateInstance:
    """Nonreal ``P`` with ``R`` and ``S`` back-solved so the solution set is a circle.

    Picks a pure ``s`` for the reduced right-hand side with scalar part
    ``p0 |s| / |p|``, a reduced linear coefficient orthogonal to the bisector
    plane of ``p`` and ``s``, and an arbitrary ``Q``; then recovers ``R`` and
    ``S`` from the definitions of the reduced coefficients.
    """
    while True:
        P = random_quaternion(rng)
        if modulus(P.vector) >= 0.3:
            break
    p = P.vector
    s = Quaternion.pure(*rng.standard_normal(3))
    s = s * (rng.uniform(0.3, 2.0) / modulus(s))
    st0 = P.w * modulus(s) / modulus(p)
    S_tilde = s + st0

    plane = bisector_plane(p, s)
    f1, f2 = plane_complement(plane)
    a, b = rng.uniform(-2.0, 2.0, 2)
    R_tilde = f1 * a + f2 * b

    Q = random_quaternion(rng)
    Pc, Qc = conjugate(P), conjugate(Q)
    diff = P - Pc
    R = mul(mul(Qc, P) - mul(R_tilde, diff), inverse(Pc))
    Rc = conjugate(R)
    correction = (
        mul(mul(Qc, P), Rc)
        + mul(mul(R, Pc), Q)
        + mul(mul(R, Pc - P), Q)
        - mul(mul(Qc, Pc), Q)
        - mul(mul(R, Pc), Rc)
    )
    S = S_tilde - correction / norm_sq(diff)
    shift = mul(R - Qc, inverse(diff))
    circle = SolutionCircle(plane, math.sqrt(modulus(s) / modulus(p)), -shift)
    return DegenerateInstance(EquationCoefficients(P, Q, R, S), Circle(circle))


def perturb_s(c: EquationCoefficients, rng: np.random.Generator, size: float = 1e-3) -> EquationCoefficients:
    """Move ``S`` by ``size`` in a random direction."""
    return EquationCoefficients(c.P, c.Q, c.R, c.S + random_unit(rng) * size)

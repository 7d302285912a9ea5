import numpy as np
from hypothesis import strategies as st

from quatsolve.quaternion import Quaternion

# products of basis units: (a, b) -> (sign, index) with 0=1, 1=i, 2=j, 3=k
UNIT_TABLE = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def table_mul(a, b):
    """Bilinear expansion over the basis-unit table; independent of quatsolve.mul."""
    out = [0.0] * 4
    for ia, ca in enumerate(a):
        for ib, cb in enumerate(b):
            sign, idx = UNIT_TABLE[(ia, ib)]
            out[idx] += sign * ca * cb
    return Quaternion(*out)


components = st.floats(min_value=-100, max_value=100, allow_nan=False, allow_infinity=False)
quaternions = st.builds(Quaternion, components, components, components, components)
pure_vectors = st.builds(Quaternion.pure, components, components, components)


# ---------------------------------------------------------------------------
# worked examples with their stated solution sets

import math  # noqa: E402

from quatsolve.geometry import BisectorPlane, SolutionCircle  # noqa: E402
from quatsolve.quaternion import I, J, K, ONE, ZERO  # noqa: E402
from quatsolve.sets import Circle, Empty, Point, ThreeSphere, TwoPoints, same_set  # noqa: E402
from quatsolve.solver import EquationCoefficients  # noqa: E402


def _real_line_family():
    cases = []
    hats = {"i": I, "j": J, "(i+k)/sqrt2": (I + K) / math.sqrt(2)}
    for theta_name, theta in (("pi/6", math.pi / 6), ("pi/2", math.pi / 2)):
        for hat_name, hat in hats.items():
            S = ONE + hat * (2 * math.sin(theta))
            a = hat * math.sin(theta) + math.cos(theta)
            b = hat * math.sin(theta) - math.cos(theta)
            want = Point(a) if theta == math.pi / 2 else TwoPoints(a, b)
            cases.append((f"sphere-line theta={theta_name} s={hat_name}",
                          EquationCoefficients(1, 1, -1, S), want))
    return cases


def _slice_family():
    cases = []
    for name, phi0 in (("0", 0.0), ("pi/3", math.pi / 3)):
        S = I + 2 * math.cos(phi0)
        a = I * math.sin(phi0) + math.cos(phi0)
        b = I * -math.sin(phi0) + math.cos(phi0)
        want = Point(a) if phi0 == 0.0 else TwoPoints(a, b)
        cases.append((f"circle-hyperplane phi0={name}", EquationCoefficients(I, 1, 1, S), want))
    return cases


JK_CIRCLE = Circle(SolutionCircle(BisectorPlane(J, K, I, -I), 1.0, ZERO))

GOLDEN = [
    ("|X|^2 + 1 = 0", EquationCoefficients(1, 0, 0, -1), Empty()),
    ("|X + 1|^2 = 0", EquationCoefficients(1, 1, 1, -1), Point(-ONE)),
    ("|X + 1|^2 = 1", EquationCoefficients(1, 1, 1, 0), ThreeSphere(-ONE, 1.0)),
    ("|X|^2 + X + X* = i", EquationCoefficients(1, 1, 1, I), Empty()),
    *_real_line_family(),
    ("sphere-line |s| = 3", EquationCoefficients(1, 1, -1, ONE + J * 3), Empty()),
    ("X i X* + X + X* = 0", EquationCoefficients(I, 1, 1, 0), Point(ZERO)),
    ("X i X* + X + X* = 1", EquationCoefficients(I, 1, 1, 1), Empty()),
    ("X i X* + X + X* = -i", EquationCoefficients(I, 1, 1, -I), JK_CIRCLE),
    ("X i X* + X + X* = 1 - i", EquationCoefficients(I, 1, 1, ONE - I), Empty()),
    *_slice_family(),
]


def matches(sol, expected, tol=1e-10):
    return same_set(sol, expected, tol)

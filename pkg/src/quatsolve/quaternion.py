"""Double-precision quaternion arithmetic.

Quaternions are immutable ``(w, x, y, z)`` tuples with the scalar part first.
Component equality (``==``) is exact; use :func:`isclose` for tolerant
comparisons.
"""

from __future__ import annotations

import math
from collections import namedtuple
from typing import Iterable, NamedTuple

#: reciprocal of anything below this squared modulus is refused
ZERO_FLOOR = 1e-300


class ZeroDivisor(ZeroDivisionError):
    """Raised when inverting a quaternion whose squared modulus is below the floor."""


class Quaternion(namedtuple("Quaternion", "w x y z")):
    """Quaternion ``w + x i + y j + z k``.

    >>> i, j = Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0)
    >>> i * j
    Quaternion(w=0.0, x=0.0, y=0.0, z=1.0)
    >>> (Quaternion(1, 1, 0, 0) * Quaternion(1, 0, 1, 0)).to_list()
    [1.0, 1.0, 1.0, 1.0]
    """

    __slots__ = ()

    def __new__(cls, w=0.0, x=0.0, y=0.0, z=0.0):
        return super().__new__(cls, float(w), float(x), float(y), float(z))

    @classmethod
    def real(cls, w: float) -> Quaternion:
        return cls(w, 0.0, 0.0, 0.0)

    @classmethod
    def pure(cls, x: float, y: float, z: float) -> Quaternion:
        return cls(0.0, x, y, z)

    @classmethod
    def from_list(cls, values: Iterable[float]) -> Quaternion:
        values = list(values)
        if len(values) != 4:
            raise ValueError(f"a quaternion needs 4 components, got {len(values)}")
        return cls(*values)

    def to_list(self) -> list[float]:
        return [self.w, self.x, self.y, self.z]

    # tuple defines + and * as concatenation/repetition; override both.
    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w + other.w, self.x + other.x,
                              self.y + other.y, self.z + other.z)
        if isinstance(other, (int, float)):
            return Quaternion(self.w + other, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w - other.w, self.x - other.x,
                              self.y - other.y, self.z - other.z)
        if isinstance(other, (int, float)):
            return Quaternion(self.w - other, self.x, self.y, self.z)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(other - self.w, -self.x, -self.y, -self.z)
        return NotImplemented

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, other)
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.w / other, self.x / other,
                              self.y / other, self.z / other)
        return NotImplemented

    def conjugate(self) -> Quaternion:
        return conjugate(self)

    def norm_sq(self) -> float:
        return norm_sq(self)

    def modulus(self) -> float:
        return modulus(self)

    def inverse(self) -> Quaternion:
        return inverse(self)

    @property
    def scalar(self) -> float:
        return self.w

    @property
    def vector(self) -> Quaternion:
        return Quaternion(0.0, self.x, self.y, self.z)

    def is_real(self) -> bool:
        return self.x == 0.0 and self.y == 0.0 and self.z == 0.0

    def __repr__(self):
        return f"Quaternion(w={self.w!r}, x={self.x!r}, y={self.y!r}, z={self.z!r})"


class Vector3(NamedTuple):
    """A 3-vector identified with the pure quaternion ``x i + y j + z k``."""

    x: float
    y: float
    z: float

    @classmethod
    def of(cls, q: Quaternion) -> Vector3:
        return cls(q.x, q.y, q.z)

    def quaternion(self) -> Quaternion:
        return Quaternion(0.0, self.x, self.y, self.z)

    def dot(self, other: Vector3) -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: Vector3) -> Vector3:
        return Vector3(self.y * other.z - self.z * other.y,
                       self.z * other.x - self.x * other.z,
                       self.x * other.y - self.y * other.x)

    def norm(self) -> float:
        return math.sqrt(self.dot(self))


ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)
ZERO = Quaternion(0.0, 0.0, 0.0, 0.0)


def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product ``a b``."""
    aw, ax, ay, az = a
    bw, bx, by, bz = b
    return Quaternion(
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    )


def conjugate(a: Quaternion) -> Quaternion:
    return Quaternion(a.w, -a.x, -a.y, -a.z)


def norm_sq(a: Quaternion) -> float:
    return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z


def modulus(a: Quaternion) -> float:
    return math.sqrt(norm_sq(a))


def inverse(a: Quaternion) -> Quaternion:
    n = norm_sq(a)
    if n < ZERO_FLOOR:
        raise ZeroDivisor(f"cannot invert {a!r}: squared modulus {n!r} below {ZERO_FLOOR}")
    return Quaternion(a.w / n, -a.x / n, -a.y / n, -a.z / n)


def scalar_part(a: Quaternion) -> float:
    return a.w


def vector_part(a: Quaternion) -> Quaternion:
    return Quaternion(0.0, a.x, a.y, a.z)


def dot4(a: Quaternion, b: Quaternion) -> float:
    """Euclidean inner product of ``a`` and ``b`` as points of R^4."""
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z


def normalize(a: Quaternion) -> Quaternion:
    return a / modulus(a)


def isclose(a: Quaternion, b: Quaternion, rel_tol: float = 1e-9, abs_tol: float = 0.0) -> bool:
    """Tolerant comparison by 4D distance, relative to the larger modulus."""
    return modulus(a - b) <= max(rel_tol * max(modulus(a), modulus(b)), abs_tol)


def vec_mul_identity_check(x: Quaternion, y: Quaternion) -> tuple[float, Quaternion]:
    """Return ``(-<x, y>, x × y)`` for pure vectors and check it against ``x y``.

    The product of two pure vectors splits into the negated dot product as
    its scalar part and the cross product as its vector part.
    """
    if x.w != 0.0 or y.w != 0.0:
        raise ValueError("both arguments must be pure vectors")
    vx, vy = Vector3.of(x), Vector3.of(y)
    scalar = -vx.dot(vy)
    vector = vx.cross(vy).quaternion()
    product = mul(x, y)
    expected = vector + scalar
    if not isclose(product, expected, rel_tol=1e-12, abs_tol=1e-300):
        raise AssertionError(f"x y = {product!r} but -<x,y> + x×y = {expected!r}")
    return scalar, vector


def extract_components(a: Quaternion) -> tuple[float, float, float, float]:
    """Recover the four real components using quaternion products only.

    Uses the sandwich sums ``a - i a i - j a j - k a k`` and friends, so the
    result is a check on :func:`mul` as much as a way to read the fields.
    """
    iai = mul(mul(I, a), I)
    jaj = mul(mul(J, a), J)
    kak = mul(mul(K, a), K)
    x0 = (a - iai - jaj - kak) * 0.25
    x1 = mul(I, (-a + iai - jaj - kak) * 0.25)
    x2 = mul(J, (-a - iai + jaj - kak) * 0.25)
    x3 = mul(K, (-a - iai - jaj + kak) * 0.25)
    return x0.w, x1.w, x2.w, x3.w

import math

import numpy as np
import pytest
from hypothesis import given

from helpers import pure_vectors, quaternions, table_mul
from quatsolve.quaternion import (
    I,
    J,
    K,
    ONE,
    ZERO,
    Quaternion,
    Vector3,
    ZeroDivisor,
    conjugate,
    dot4,
    extract_components,
    inverse,
    isclose,
    modulus,
    mul,
    norm_sq,
    scalar_part,
    vec_mul_identity_check,
    vector_part,
)


def test_unit_table():
    assert mul(I, J) == K
    assert mul(J, I) == -K
    assert mul(J, K) == I
    assert mul(K, I) == J
    for u in (I, J, K):
        assert mul(u, u) == -ONE


def test_one_is_identity():
    q = Quaternion(1.5, -2, 3.25, 4)
    assert mul(ONE, q) == q
    assert mul(q, ONE) == q


def test_product_matches_table_expansion():
    a, b = Quaternion(1, 1, 0, 0), Quaternion(1, 0, 1, 0)
    assert table_mul(a, b) == Quaternion(1, 1, 1, 1)
    assert mul(a, b) == Quaternion(1, 1, 1, 1)


@given(quaternions, quaternions)
def test_mul_agrees_with_table(a, b):
    assert isclose(mul(a, b), table_mul(a, b), rel_tol=1e-14, abs_tol=1e-12)


@pytest.mark.parametrize("q, expected", [
    (I, -I),
    (Quaternion.real(3), Quaternion.real(3)),
    (Quaternion(1, 2, 3, 4), Quaternion(1, -2, -3, -4)),
])
def test_conjugate(q, expected):
    assert conjugate(q) == expected
    assert conjugate(conjugate(q)) == q


def test_norms():
    assert norm_sq(Quaternion(1, 1, 1, 1)) == 4.0
    assert modulus(Quaternion(1, 1, 1, 1)) == 2.0
    assert modulus(ZERO) == 0.0


def test_inverse():
    assert inverse(Quaternion.real(2)) == Quaternion.real(0.5)
    assert inverse(I) == -I
    with pytest.raises(ZeroDivisor):
        inverse(ZERO)
    with pytest.raises(ZeroDivisionError):
        inverse(Quaternion(1e-160, 0, 0, 0))
    # tiny but above the floor is fine
    assert inverse(Quaternion(1e-140, 0, 0, 0)).w == pytest.approx(1e140)


@given(quaternions)
def test_inverse_both_sides(a):
    if norm_sq(a) < 1e-6:
        return
    assert isclose(mul(a, inverse(a)), ONE, abs_tol=1e-13)
    assert isclose(mul(inverse(a), a), ONE, abs_tol=1e-13)


@pytest.mark.parametrize("q, s, v", [
    (Quaternion(1, 2, 0, 0), 1.0, Quaternion(0, 2, 0, 0)),
    (Quaternion.real(5), 5.0, ZERO),
    (I + J, 0.0, I + J),
])
def test_scalar_vector_split(q, s, v):
    assert scalar_part(q) == s
    assert vector_part(q) == v
    assert scalar_part(q) + vector_part(q) == q


def test_dot4_basis():
    assert dot4(I, I) == 1.0
    assert dot4(ONE, I) == 0.0


@given(quaternions, quaternions)
def test_dot4_is_scalar_of_product_with_conjugate(a, b):
    lhs = dot4(a, b)
    rhs = mul(a, conjugate(b)).w
    assert abs(lhs - rhs) <= 1e-14 * max(1.0, modulus(a) * modulus(b))


def test_vec_mul_identity_examples():
    assert vec_mul_identity_check(I, J) == (-0.0, K) or vec_mul_identity_check(I, J) == (0.0, K)
    s, v = vec_mul_identity_check(I, I)
    assert s == -1.0 and v == ZERO
    with pytest.raises(ValueError):
        vec_mul_identity_check(ONE, I)


@given(pure_vectors, pure_vectors)
def test_vec_mul_identity_random(x, y):
    s, v = vec_mul_identity_check(x, y)
    assert isclose(mul(x, y), v + s, rel_tol=1e-12, abs_tol=1e-9)


@given(quaternions, quaternions)
def test_modulus_multiplicative(a, b):
    assert abs(modulus(mul(a, b)) - modulus(a) * modulus(b)) <= 1e-12 * modulus(a) * modulus(b)


@given(quaternions, quaternions)
def test_conjugate_anti_homomorphism(a, b):
    lhs, rhs = conjugate(mul(a, b)), mul(conjugate(b), conjugate(a))
    assert all(abs(u - v) <= 1e-13 * max(1.0, modulus(a) * modulus(b)) for u, v in zip(lhs, rhs))


@given(quaternions)
def test_times_conjugate_is_real(a):
    p = mul(a, conjugate(a))
    assert modulus(p.vector) <= 1e-13 * norm_sq(a)
    assert p.w == pytest.approx(norm_sq(a), rel=1e-14)


@given(quaternions, quaternions, quaternions)
def test_associative(a, b, c):
    lhs, rhs = mul(mul(a, b), c), mul(a, mul(b, c))
    assert modulus(lhs - rhs) <= 1e-12 * max(1e-300, modulus(a) * modulus(b) * modulus(c))


@pytest.mark.parametrize("q, expected", [
    (ONE, (1.0, 0.0, 0.0, 0.0)),
    (Quaternion(0, 2, 0, 3), (0.0, 2.0, 0.0, 3.0)),
])
def test_extract_components_examples(q, expected):
    assert extract_components(q) == expected


def test_extract_components_random(rng):
    for row in rng.uniform(-10, 10, size=(10_000, 4)):
        q = Quaternion(*row)
        got = extract_components(q)
        for g, f in zip(got, q):
            assert abs(g - f) <= 1e-14 * (1 + abs(f)) * 10


def test_operators_and_serialisation():
    q = Quaternion(1, 2, 3, 4)
    assert q + 1 == Quaternion(2, 2, 3, 4)
    assert 1 - q == Quaternion(0, -2, -3, -4)
    assert 2 * q == q * 2 == Quaternion(2, 4, 6, 8)
    assert q / 2 == Quaternion(0.5, 1, 1.5, 2)
    assert Quaternion.from_list(q.to_list()) == q
    assert Vector3.of(q).quaternion() == q.vector
    assert Vector3(1, 0, 0).cross(Vector3(0, 1, 0)) == Vector3(0, 0, 1)
    with pytest.raises(ValueError):
        Quaternion.from_list([1, 2, 3])
    assert not isclose(q, q + 1e-3)
    assert math.isclose(Vector3(3, 4, 0).norm(), 5.0)


def test_shortest_repr_round_trip(rng):
    import json
    for row in rng.standard_normal((200, 4)) * 10.0 ** rng.integers(-20, 20, (200, 1)):
        q = Quaternion(*row)
        assert Quaternion.from_list(json.loads(json.dumps(q.to_list()))) == q

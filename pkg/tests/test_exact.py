from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from index2poly.exact import (
    ONE,
    PHI,
    SQRT2,
    SQRT5,
    ZERO,
    Mat3,
    QuadExt,
    Vec3,
    as_quad,
    triple,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=50)
elements = st.builds(QuadExt, rationals, rationals, st.just(5))


def test_constants():
    assert ZERO == 0
    assert ONE == 1
    assert SQRT2 * SQRT2 == 2
    assert SQRT5 * SQRT5 == 5
    assert PHI == (1 + SQRT5) / 2


def test_constants_match_high_precision_floats():
    mpmath.mp.dps = 30
    assert abs(float(PHI) - float(mpmath.phi)) < 1e-15
    assert abs(float(SQRT2) - float(mpmath.sqrt(2))) < 1e-15
    assert abs(float(SQRT5) - float(mpmath.sqrt(5))) < 1e-15


def test_golden_ratio_identities():
    assert PHI * PHI == PHI + 1
    assert 1 / PHI == PHI - 1
    assert SQRT5 == 2 * PHI - 1
    assert PHI ** 3 == 2 * PHI + 1


def test_rational_embedding():
    assert QuadExt(2) == 2
    assert as_quad(Fraction(1, 3)) == Fraction(1, 3)
    assert hash(QuadExt(2)) == hash(2)
    # sqrt(1) folds into the rational part, sqrt(4) does not exist as input
    assert QuadExt(1, 2, 1) == 3


def test_mixing_different_radicands_raises():
    with pytest.raises(ValueError):
        SQRT2 + SQRT5
    with pytest.raises(ValueError):
        SQRT2 < PHI


def test_ordering_is_exact():
    assert PHI > 1
    assert PHI < 2
    assert SQRT2 < as_quad(2)
    assert sorted([PHI * PHI, as_quad(1), PHI]) == [as_quad(1), PHI, PHI * PHI]
    # 1/2 + 1/2*sqrt(5) vs 161/100: phi = 1.6180..., so strictly greater
    assert PHI > Fraction(161, 100)
    assert PHI < Fraction(162, 100)


def test_repr_shows_field_elements():
    assert repr(PHI) == "(1/2 + 1/2*sqrt(5))"
    assert repr(QuadExt(0, -1, 2)) == "-1*sqrt(2)"
    assert repr(QuadExt(3)) == "3"


@given(elements, elements, elements)
def test_field_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(elements)
def test_additive_and_multiplicative_inverse(x):
    assert x + (-x) == 0
    if x != 0:
        assert x * (1 / x) == 1


@given(elements)
def test_float_is_a_homomorphism_approximately(x):
    expected = float(x.a) + float(x.b) * 5 ** 0.5
    assert float(x) == pytest.approx(expected, abs=1e-9)


def test_vec3_arithmetic():
    e1 = Vec3((1, 0, 0))
    e2 = Vec3((0, 1, 0))
    e3 = Vec3((0, 0, 1))
    assert e1.cross(e2) == e3
    assert e2.cross(e3) == e1
    assert e1.dot(e2) == 0
    assert e1 + e2 - e2 == e1
    assert -e1 == Vec3((-1, 0, 0))
    v = Vec3((1, 2, 2))
    assert v.norm2() == 9
    assert v.scale(2).norm2() == 36
    assert triple(e1, e2, e3) == 1
    assert v.dot(v.cross(e1)) == 0


def test_vec3_rejects_wrong_arity():
    with pytest.raises(ValueError):
        Vec3((1, 2))


def test_mat3_algebra():
    m = Mat3.identity()
    assert m.det() == 1
    assert m.inverse() == m
    assert m.transpose() == m
    assert m.trace() == 3
    v = Vec3((PHI, 1, 0))
    assert m.apply(v) == v


def test_mat3_inverse_of_generic_matrix():
    m = Mat3.from_columns([Vec3((2, 0, 1)), Vec3((0, 1, 0)), Vec3((1, 0, 1))])
    assert m.column(0) == Vec3((2, 0, 1))
    assert m.det() == 1
    assert m.inverse().det() == 1
    v = Vec3((3, -1, 7))
    assert m.inverse().apply(m.apply(v)) == v


def test_seed_rotations_are_special_orthogonal():
    from index2poly.seeds import seed

    s = seed("icosahedron")
    for m in s.rotations[:10]:
        assert m.is_orthogonal()
        assert m.det() == 1
        assert m.transpose() == m.inverse()

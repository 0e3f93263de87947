import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from relhup.core import (
    KinematicState,
    MeasuredScalar,
    MeasuredVector3,
    PhysicalConstants,
    vec_dot,
    vec_norm,
)

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)
triples = st.tuples(finite, finite, finite)


@pytest.mark.parametrize("v, expected", [
    ((3, 4, 0), 5.0),
    ((0, 0, 0), 0.0),
    ((1, 1, 1), math.sqrt(3)),
])
def test_vec_norm(v, expected):
    assert vec_norm(MeasuredVector3(v)) == pytest.approx(expected, rel=1e-15)
    assert vec_norm(v) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("a, b, expected", [
    ((1, 0, 0), (0, 1, 0), 0.0),
    ((1, 1, 1), (0.5, 0.5, 0.5), 1.5),
    ((3, 4, 0), (3, 4, 0), 25.0),
])
def test_vec_dot(a, b, expected):
    assert vec_dot(a, b) == expected


@given(triples, triples)
def test_cauchy_schwarz(a, b):
    lhs = abs(vec_dot(a, b))
    rhs = vec_norm(a) * vec_norm(b)
    assert lhs <= rhs + 1e-12 * max(rhs, 1e-300)


@given(triples)
def test_norm_squared_is_self_dot(v):
    n2 = vec_norm(v) ** 2
    assert n2 == pytest.approx(vec_dot(v, v), rel=1e-12, abs=1e-300)


def test_natural_constants_are_exactly_one():
    k = PhysicalConstants.natural()
    assert k.hbar == 1.0 and k.c == 1.0
    assert k.mode == "natural"


def test_si_defaults():
    k = PhysicalConstants.si()
    assert k.hbar == 1.054571817e-34
    assert k.c == 299792458.0
    assert k.h == pytest.approx(6.62607015e-34, rel=1e-9)


@pytest.mark.parametrize("kwargs", [
    dict(hbar=-1.0), dict(c=0.0), dict(hbar=2.0, c=1.0, mode="natural"), dict(mode="cgs"),
])
def test_constants_validation(kwargs):
    with pytest.raises(ValueError):
        PhysicalConstants(**kwargs)


def test_measured_scalar_rejects_negative_sigma():
    with pytest.raises(ValueError):
        MeasuredScalar(1.0, -0.1)
    with pytest.raises(ValueError):
        MeasuredScalar(math.inf, 0.1)
    assert str(MeasuredScalar(1.0, 0.5, "m")) == "1.0 +/- 0.5 m"


def test_measured_vector_validation_and_indexing():
    v = MeasuredVector3((1, 2, 3), (0.1, 0.2, 0.3), "m")
    assert v.components == (1.0, 2.0, 3.0)
    assert v[1] == MeasuredScalar(2.0, 0.2, "m")
    with pytest.raises(ValueError):
        MeasuredVector3((1, 2), (0, 0))
    with pytest.raises(ValueError):
        MeasuredVector3((1, 2, 3), (0, -1, 0))
    with pytest.raises(ValueError):
        MeasuredVector3((1, math.nan, 3))


def test_kinematic_state_validation():
    s = KinematicState(m0=1, v=0.5, t=2)
    assert s.q == 1.0
    for bad in (dict(m0=0), dict(v=-0.1), dict(t=0), dict(dt=-1)):
        kwargs = dict(m0=1, v=0.5, t=2) | bad
        with pytest.raises(ValueError):
            KinematicState(**kwargs)

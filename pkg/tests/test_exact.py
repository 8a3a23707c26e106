from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from simlat.exact import (
    LatticeSpec,
    QuadElem,
    format_rational,
    minimal_polynomial,
    parse_rational,
)
from simlat.orders import order_from_discriminant, quadelem_norm

rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 100)
positive = st.fractions(min_value=F(1, 50), max_value=100, max_denominator=50)


@pytest.mark.parametrize(
    "alpha, beta_sq, expected",
    [
        (0, 1, (1, 0, 1)),
        (F(1, 2), F(3, 4), (1, -1, 1)),
        (0, F(9, 4), (4, 0, 9)),
    ],
)
def test_minimal_polynomial_examples(alpha, beta_sq, expected):
    assert minimal_polynomial(LatticeSpec.tau(alpha, beta_sq)) == expected


def test_minimal_polynomial_rejects_generic():
    with pytest.raises(ValueError):
        minimal_polynomial(LatticeSpec.make_generic())


@given(rationals, positive)
def test_minimal_polynomial_vanishes_at_tau(alpha, beta_sq):
    s, p, q = minimal_polynomial(LatticeSpec.tau(alpha, beta_sq))
    assert s > 0
    from math import gcd

    assert gcd(gcd(s, p), q) == 1
    # real and imaginary parts of s tau^2 + p tau + q, the latter divided by beta
    assert s * (alpha**2 - beta_sq) + p * alpha + q == 0
    assert 2 * s * alpha + p == 0


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6), st.integers(1, 1000))
def test_rational_canonical_round_trip(n, d, k):
    assert F(k * n, k * d) == F(n, d)
    x = parse_rational(format_rational(F(n, d)))
    assert x == F(n, d)
    assert x.denominator > 0


def test_rational_format():
    assert format_rational(F(6, 3)) == "2"
    assert format_rational(F(-3, 6)) == "-1/2"
    assert parse_rational("9/4") == F(9, 4)
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("x")


def test_lattice_spec_json():
    spec = LatticeSpec.tau(F(1, 2), F(3, 4))
    assert spec.to_dict() == {"kind": "tau", "alpha": "1/2", "beta_sq": "3/4"}
    assert LatticeSpec.from_json(spec.to_json()) == spec
    assert LatticeSpec.make_generic().to_dict() == {"kind": "generic"}
    assert LatticeSpec.from_json('{"kind":"generic"}').generic


def test_lattice_spec_rejects_lower_half_plane():
    with pytest.raises(ValueError):
        LatticeSpec.tau(0, 0)
    with pytest.raises(ValueError):
        LatticeSpec.tau(0, -1)


@pytest.mark.parametrize(
    "D, x, expected",
    [(-4, (1, 1), 2), (-196, (1, 1), 50), (-144, (0, 1), 36)],
)
def test_quadelem_norm(D, x, expected):
    assert quadelem_norm(order_from_discriminant(D), QuadElem(*x)) == expected


@given(st.sampled_from([-3, -4, -7, -24, -144, -196]), st.integers(-50, 50), st.integers(-50, 50))
def test_quadelem_norm_positive_definite(D, u, v):
    n = quadelem_norm(order_from_discriminant(D), QuadElem(u, v))
    assert n >= 0
    assert (n == 0) == (u == 0 and v == 0)

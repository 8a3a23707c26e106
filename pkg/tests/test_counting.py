from fractions import Fraction as F
from math import gcd, isqrt

import pytest

from simlat.arith import divisors, mobius
from simlat.counting import (
    count_representations,
    denominator,
    hnf_ssl_count,
    hnf_sublattices,
    representation_table,
    ssl_counts,
    strict_supermultiplicative_pairs,
    supermultiplicativity_check,
)
from simlat.exact import IntegralityError, LatticeSpec, QuadElem
from simlat.mulring import GENERIC, multiplier_ring
from simlat.orders import BinaryQuadraticForm, order_from_discriminant, total_representation_count


def reps_box(form, m, primitive):
    """Oracle: scan a box that certainly contains the ellipse form(x, y) <= m."""
    a, b, c = form
    R = isqrt(4 * max(a, c) * m) + 2
    n = 0
    for x in range(-R, R + 1):
        for y in range(-R, R + 1):
            if form(x, y) == m and (not primitive or gcd(x, y) == 1):
                n += 1
    return n


@pytest.mark.parametrize(
    "form, m, prim, expected",
    [((1, 0, 1), 5, False, 8), ((1, 0, 49), 50, True, 4), ((1, 0, 6), 5, False, 0)],
)
def test_count_representations_examples(form, m, prim, expected):
    assert count_representations(BinaryQuadraticForm(*form), m, prim) == expected


@pytest.mark.parametrize("form", [(1, 0, 1), (1, 1, 1), (1, 1, 7), (2, 1, 3), (1, -2, 2), (3, 2, 5)])
def test_count_representations_against_box(form):
    q = BinaryQuadraticForm(*form)
    for m in range(0, 60):
        for prim in (False, True):
            assert count_representations(q, m, prim) == reps_box(q, m, prim)


def test_representation_table_agrees_with_scan():
    q = BinaryQuadraticForm(1, 1, 7)
    total, prim = representation_table(q, 500)
    for m in range(1, 501):
        assert total[m] == count_representations(q, m)
        assert prim[m] == count_representations(q, m, True)


def test_ssl_counts_examples():
    r = ssl_counts(order_from_discriminant(-4), 25)
    assert (r[24].f, r[24].f_pr) == (3, 2)
    assert total_representation_count(-4, 25) == 3
    r = ssl_counts(order_from_discriminant(-144), 36)
    assert (r[3].f, r[8].f, r[35].f) == (1, 1, 2)
    r = ssl_counts(order_from_discriminant(-196), 130)
    got = [r[m - 1].f_pr for m in (49, 50, 53, 58, 65, 74, 85, 98, 113, 130)]
    assert got == [1, 2, 2, 2, 2, 2, 2, 2, 2, 2]


def test_ssl_counts_generic():
    rows = ssl_counts(GENERIC, 50)
    assert [r.m for r in rows if r.f] == [1, 4, 9, 16, 25, 36, 49]
    assert [r.m for r in rows if r.f_pr] == [1]


def test_ssl_counts_detects_unit_bug():
    from dataclasses import replace

    broken = replace(order_from_discriminant(-4), w=3)
    with pytest.raises(IntegralityError):
        ssl_counts(broken, 10)


@pytest.mark.parametrize(
    "tau, m, expected",
    [((0, 1), 2, (3, 1)), ((0, 1), 3, (4, 0)), ((0, F(9, 4)), 4, (7, 1))],
)
def test_hnf_examples(tau, m, expected):
    assert hnf_ssl_count(LatticeSpec.tau(*tau), m) == expected


def test_hnf_enumeration_is_complete():
    # independent oracle: enumerate sublattices as sets of integer points in a window
    def canonical(basis):
        (a1, b1), (a2, b2) = basis
        pts = set()
        for x in range(-6, 7):
            for y in range(-6, 7):
                u, v = x * a1 + y * a2, x * b1 + y * b2
                if abs(u) <= 12 and abs(v) <= 12:
                    pts.add((u, v))
        return frozenset(pts)

    for m in range(1, 13):
        hnfs = {canonical(((a, 0), (b, d))) for a, b, d in hnf_sublattices(m)}
        assert len(hnfs) == sum(divisors(m))


def test_hnf_oracle_small_battery(battery):
    for spec in battery.values():
        rows = ssl_counts(multiplier_ring(spec), 120)
        for row in rows:
            total, ssl = hnf_ssl_count(spec, row.m)
            assert total == sum(divisors(row.m))
            assert ssl == row.f, (spec, row)


def _denominator_bruteforce(order, w):
    """Oracle: smallest integer t with t*w in Z + f*O_K, i.e. f divides the omega_K coordinate."""
    K = order.maximal_order()
    for t in range(1, 10**4):
        if (t * w[1]) % order.f == 0:
            return t * t * K.norm(w)


@pytest.mark.parametrize(
    "tau, w, expected",
    [((0, 9), (1, 3), 10), ((0, 9), (-3, 1), 90)],
)
def test_denominator_examples(tau, w, expected):
    o = multiplier_ring(LatticeSpec.tau(*tau))
    assert denominator(o, QuadElem(*w)) == expected


def test_denominator_maximal_is_norm():
    o = order_from_discriminant(-4)
    for w in [(1, 0), (2, 1), (3, 4), (5, 2)]:
        assert denominator(o, QuadElem(*w)) == o.norm(w)


@pytest.mark.parametrize("D", [-36, -100, -196, -16, -27, -12, -28, -144])
def test_denominator_against_bruteforce(D):
    o = order_from_discriminant(D)
    for u in range(-12, 13):
        for v in range(-12, 13):
            if gcd(u, v) == 1:
                assert denominator(o, QuadElem(u, v)) == _denominator_bruteforce(o, (u, v))


def test_denominator_rejects():
    o = order_from_discriminant(-36)
    with pytest.raises(ValueError):
        denominator(o, QuadElem(0, 0))
    with pytest.raises(ValueError):
        denominator(o, QuadElem(2, 4))


def test_denominator_gives_primitive_ssl_indices():
    # every primitive SSL index of Z[3i] is a squared denominator of a direction of Z[i]
    o = order_from_discriminant(-36)
    rows = ssl_counts(o, 400)
    dens = {}
    for u in range(-25, 26):
        for v in range(-25, 26):
            if gcd(u, v) == 1:
                d2 = denominator(o, QuadElem(u, v))
                dens[d2] = dens.get(d2, 0) + 1
    for row in rows:
        # units of Z[3i] are +-1, so w and -w give the same SSL
        assert row.f_pr == dens.get(row.m, 0) // 2


def test_supermultiplicativity():
    assert supermultiplicativity_check(ssl_counts(order_from_discriminant(-4), 100)) == []
    rows = ssl_counts(order_from_discriminant(-144), 100)
    assert supermultiplicativity_check(rows) == []
    assert (4, 9) in strict_supermultiplicative_pairs(rows)
    assert supermultiplicativity_check(ssl_counts(order_from_discriminant(-196), 200)) == []


@pytest.mark.parametrize("D", [-3, -4, -7, -16, -24, -36, -144, -196])
def test_moebius_inversion(D):
    rows = ssl_counts(order_from_discriminant(D), 10**4)
    f = [0] + [r.f for r in rows]
    for r in rows:
        m = r.m
        inv = sum(mobius(k) * f[m // (k * k)] for k in range(1, isqrt(m) + 1) if m % (k * k) == 0)
        assert inv == r.f_pr


@pytest.mark.parametrize("D", [-3, -4, -7, -8, -11, -19, -43, -67, -163])
def test_class_number_one_counts_match_character_sums(D):
    rows = ssl_counts(order_from_discriminant(D), 10**4)
    from simlat.dirichlet import dedekind_zeta_rule, euler_expand

    zk = euler_expand(dedekind_zeta_rule(D), 10**4)
    for r in rows:
        assert r.f == zk[r.m]
    for m in range(1, 2000):
        assert rows[m - 1].f == total_representation_count(D, m)

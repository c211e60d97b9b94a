from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from geomkit.numeric import (Dyadic, DyadicInterval, QuadraticValue, arccos_enclose,
                             archimedes_bound, compare, dyadic_approx, encloses_pi,
                             fmt_rational, parse_rational, pi_enclose, separate,
                             sqrt_enclose)

small = st.fractions(min_value=-50, max_value=50, max_denominator=60)
nonneg = st.fractions(min_value=0, max_value=80, max_denominator=60)
orders = st.integers(min_value=0, max_value=40)


@given(small)
def test_rational_text_round_trip(q):
    assert parse_rational(fmt_rational(q)) == q


def test_rational_formatting_always_has_denominator():
    assert fmt_rational(Fraction(3)) == "3/1"
    assert fmt_rational(Fraction(-1, 2)) == "-1/2"


@pytest.mark.parametrize("text", ["1/0", "-7/0"])
def test_zero_denominator_rejected(text):
    with pytest.raises(ZeroDivisionError):
        parse_rational(text)


@pytest.mark.parametrize("text", ["", "1//2", "x", "1.5"])
def test_malformed_rational_rejected(text):
    with pytest.raises(ValueError):
        parse_rational(text)


@given(small, nonneg, st.sampled_from([1, -1]), small, nonneg, st.sampled_from([1, -1]))
def test_quadratic_compare_matches_high_precision(a, r, s, b, u, t):
    x, y = QuadraticValue(a, r, s), QuadraticValue(b, u, t)
    ref = oracles.quad(a, r, s) - oracles.quad(b, u, t)
    got = compare(x, y)
    if got == 0:
        assert abs(ref) < mpmath.mpf(2) ** -300
    else:
        assert got == (1 if ref > 0 else -1)


@given(small, nonneg, st.sampled_from([1, -1]))
def test_quadratic_floor_matches_high_precision(a, r, s):
    assert QuadraticValue(a, r, s).floor() == int(mpmath.floor(oracles.quad(a, r, s)))


def test_quadratic_collapses_perfect_squares():
    q = QuadraticValue(1, Fraction(9, 4), -1)
    assert q.is_rational and q.to_fraction() == Fraction(-1, 2)


def test_sqrt2_square_compares_exactly():
    s = QuadraticValue.sqrt(2)
    assert compare(s, Fraction(1414, 1000)) > 0
    assert compare(s, Fraction(1415, 1000)) < 0


def test_dyadic_canonical_form():
    assert Dyadic(6, 3) == Dyadic(3, 2)
    assert Dyadic(6, 3).k == 3 and Dyadic(6, 3).m == 2
    assert str(Dyadic(1, 1)) == "1/2^1"


@given(small, orders)
def test_dyadic_approx_width_and_containment(x, m):
    iv = dyadic_approx(x, m)
    assert iv.width == Fraction(1, 2 ** m)
    assert iv.lo.value <= x < iv.hi.value


@given(small, st.integers(min_value=0, max_value=30))
def test_dyadic_approx_nests(x, m):
    assert dyadic_approx(x, m).contains_interval(dyadic_approx(x, m + 1))


@given(nonneg, st.sampled_from([1, -1]), st.integers(min_value=0, max_value=30))
def test_dyadic_approx_of_quadratic(r, s, m):
    x = QuadraticValue(1, r, s)
    iv = dyadic_approx(x, m)
    ref = oracles.quad(1, r, s)
    assert oracles.mp(iv.lo.value) <= ref < oracles.mp(iv.hi.value)


def test_one_third_anchor_nests_to_order_30():
    prev = None
    for m in range(1, 31):
        iv = dyadic_approx(Fraction(1, 3), m)
        assert iv.width == Fraction(1, 2 ** m)
        if prev is not None:
            assert prev.contains_interval(iv)
        prev = iv


def test_separate_examples():
    assert separate(0, 1) <= 1
    assert separate(Fraction(1, 3), Fraction(2, 5)) <= 5


@given(small, small)
def test_separate_order_is_sufficient(x, y):
    if x == y:
        return
    x, y = min(x, y), max(x, y)
    n = separate(x, y)
    for m in range(n + 1, n + 8):
        assert dyadic_approx(x, m).hi < dyadic_approx(y, m).lo


def test_separate_rejects_wrong_order():
    with pytest.raises(ValueError):
        separate(1, 1)


@given(nonneg, orders)
def test_sqrt_enclose_matches_bisection(r, m):
    iv = sqrt_enclose(r, m)
    if iv.is_exact:
        assert iv.lo.value ** 2 == r
    else:
        assert (iv.lo.value, iv.hi.value) == oracles.sqrt_bisect(r, m)
        assert iv.lo.value ** 2 <= r < iv.hi.value ** 2


def test_sqrt_enclose_degenerate_only_for_binary_roots():
    assert sqrt_enclose(Fraction(9, 16), 1).is_exact
    assert not sqrt_enclose(Fraction(1, 9), 10).is_exact
    iv = sqrt_enclose(2, 30)
    assert iv.lo.value ** 2 < 2 <= iv.hi.value ** 2


@pytest.mark.parametrize("m", [0, 1, 10, 53, 120])
def test_pi_enclosure(m):
    iv = pi_enclose(m)
    assert iv.width <= Fraction(1, 2 ** m)
    assert oracles.mp(iv.lo.value) <= mpmath.pi <= oracles.mp(iv.hi.value)


@settings(max_examples=60, deadline=None)
@given(st.fractions(min_value=-1, max_value=1, max_denominator=40), st.integers(0, 30))
def test_arccos_enclosure_rational(c, m):
    iv = arccos_enclose(c, m)
    assert iv.width <= Fraction(1, 2 ** m)
    ref = oracles.acos(c)
    assert oracles.mp(iv.lo.value) <= ref <= oracles.mp(iv.hi.value)


@settings(max_examples=40, deadline=None)
@given(st.fractions(min_value=0, max_value=1, max_denominator=30), st.sampled_from([1, -1]),
       st.integers(1, 24))
def test_arccos_enclosure_quadratic(r, s, m):
    c = QuadraticValue(0, r, s)
    iv = arccos_enclose(c, m)
    ref = mpmath.acos(oracles.quad(0, r, s))
    assert oracles.mp(iv.lo.value) <= ref <= oracles.mp(iv.hi.value)


def test_arccos_special_values():
    assert arccos_enclose(1, 10).is_exact and arccos_enclose(1, 10).lo.value == 0
    straight, pi = arccos_enclose(-1, 10), pi_enclose(10)
    assert (straight.lo, straight.hi) == (pi.lo, pi.hi)
    half = arccos_enclose(0, 12)
    assert oracles.mp(half.lo.value) <= mpmath.pi / 2 <= oracles.mp(half.hi.value)


def test_arccos_domain():
    with pytest.raises(ValueError):
        arccos_enclose(Fraction(3, 2), 4)


def test_encloses_pi():
    assert encloses_pi(pi_enclose(20))
    assert encloses_pi(DyadicInterval(Dyadic(3), Dyadic(4), 0))
    assert not encloses_pi(DyadicInterval(Dyadic(0), Dyadic(3), 0))


@given(small, nonneg)
def test_archimedes_bound(a, r):
    x = QuadraticValue(a, r)
    n = archimedes_bound(x)
    assert compare(x, n) < 0 and compare(x, n - 1) >= 0


def test_interval_arithmetic_widths_add():
    a, b = sqrt_enclose(2, 10), sqrt_enclose(3, 12)
    assert (a + b).width == a.width + b.width
    assert (a - b).contains(Fraction(0)) is False

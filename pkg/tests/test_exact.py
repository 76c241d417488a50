from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from reciprocity.exact import (DenominatorVanishesAtZero, LinRec, NonExtendable, NotProper, RatFunc,
                               UniPoly, linrec_eval, linrec_from_ratfunc, negative_series,
                               poly_gcd, ratfunc_series)

small = st.integers(-6, 6)
polys = st.lists(small, min_size=0, max_size=5).map(UniPoly)
nonzero_const = st.integers(1, 5) | st.integers(-5, -1)
dens = st.tuples(nonzero_const, st.lists(small, max_size=3)).map(lambda t: UniPoly([t[0]] + t[1]))


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@given(polys, polys.filter(lambda p: not p.is_zero()))
def test_divmod(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(polys, polys)
def test_gcd_divides(a, b):
    g = poly_gcd(a, b)
    if not g.is_zero():
        assert (a % g).is_zero() and (b % g).is_zero()


@given(polys, dens)
def test_series_times_denominator_is_numerator(num, den):
    f = RatFunc(num, den)
    order = 8
    ser = UniPoly(ratfunc_series(f, order))
    prod = ser * f.den
    assert all(prod[i] == f.num[i] for i in range(order + 1))


def test_ratfunc_is_reduced():
    f = RatFunc(UniPoly([1, -1]), UniPoly([1, 0, -1]))   # (1-x)/(1-x^2)
    assert f == RatFunc(1, UniPoly([1, 1]))
    assert str(f) == "1/(1 + x)"


def test_fibonacci_recurrence():
    f = RatFunc(1, UniPoly([1, -1, -1]))
    rec = linrec_from_ratfunc(f)
    assert [linrec_eval(rec, n) for n in range(8)] == [1, 1, 2, 3, 5, 8, 13, 21]
    # backwards: a_{-1} = 0, a_{-2} = 1, a_{-3} = -1
    assert [linrec_eval(rec, -n) for n in range(1, 5)] == [0, 1, -1, 2]
    # with initial values 0, 1 the value at -1 is 1
    shifted = linrec_from_ratfunc(RatFunc(UniPoly([0, 1]), UniPoly([1, -1, -1])))
    assert [linrec_eval(shifted, n) for n in range(-1, 4)] == [1, 0, 1, 1, 2]


@settings(max_examples=60)
@given(polys, dens)
def test_backward_recurrence_matches_reciprocal_series(num, den):
    # proper part only; the backward continuation reads -f(1/x)
    f = RatFunc(num, den)
    if not f.is_proper():
        return
    rec = linrec_from_ratfunc(f)
    if rec.order and rec.coefficients[-1] == 0:
        return
    assert [linrec_eval(rec, -n) for n in range(1, 9)] == negative_series(f, 8)


def test_improper_constant_is_flagged():
    # bounded Dyck paths in [0, 2]: (1 - x^2) / (1 - 2x^2) has equal degrees
    f = RatFunc(UniPoly([1, 0, -1]), UniPoly([1, 0, -2]))
    rec = linrec_from_ratfunc(f)
    assert rec.special
    with pytest.raises(NonExtendable):
        linrec_eval(rec, -1)
    # the recurrence would predict 1/2 for the constant term
    assert linrec_eval(rec, 0, extend_special=True) == Fraction(1, 2)
    assert linrec_eval(rec, 0) == 1


def test_negative_series_rejects_improper():
    with pytest.raises(NotProper):
        negative_series(RatFunc(UniPoly([1, 0, -1]), UniPoly([1, 0, -2])), 4)


def test_denominator_vanishing_at_zero():
    with pytest.raises(DenominatorVanishesAtZero):
        ratfunc_series(RatFunc(1, UniPoly([0, 1])), 3)


def test_linrec_needs_initial_terms():
    with pytest.raises(ValueError):
        LinRec([1, 1], [1])

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from reciprocity.multipoly import (MultiPoly, NonUnitFactor, XPoly, XRatFunc, bav_rules,
                                   extended_product, parse, reflect_op, render, shift_op,
                                   specialize, xratfunc_series)

fams = st.sampled_from(["A", "V", "B"])
monos = st.tuples(fams, st.integers(1, 3), st.integers(-2, 3), st.integers(-3, 3))


def _poly(terms):
    out = MultiPoly()
    for f, i, e, c in terms:
        out = out + MultiPoly.var(f, i, e) * c
    return out


polys = st.lists(monos, max_size=4).map(_poly)


@given(polys, polys, polys)
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a - a == MultiPoly()


@given(fams, st.integers(1, 4), st.integers(-3, 3), st.integers(1, 5))
def test_monomial_inverse(f, i, e, c):
    m = MultiPoly.var(f, i, e) * c
    assert m * m.inverse() == MultiPoly.const(1)


@given(polys)
def test_render_parse_round_trip(p):
    assert parse(render(p)) == p


@given(polys)
def test_reflection_is_an_involution(p):
    assert reflect_op(reflect_op(p, 4), 4) == p


def test_render_is_canonical():
    a1, v2 = MultiPoly.var("A", 1), MultiPoly.var("V", 2)
    assert render(v2 * 2 + a1) == render(a1 + 2 * v2) == "A1 + 2*V2"
    assert render(a1 ** -2 - 3) == "-3 + A1^-2"


def test_bav_substitution():
    b = bav_rules()["B"]
    A, V = MultiPoly.var, MultiPoly.var
    assert b(3) == (A("A", 2) * V("V", 2)).inverse()
    assert b(4) == (A("A", 2) * V("V", 3)).inverse()


def test_extended_product_reversed_range():
    A = lambda i: MultiPoly.var("A", i)
    assert extended_product(2, 4, A) == A(2) * A(3)
    assert extended_product(4, 2, A) == (A(2) * A(3)).inverse()
    assert extended_product(3, 3, A) == MultiPoly.const(1)
    with pytest.raises(NonUnitFactor):
        extended_product(1, 2, lambda i: A(i) + 1)


def test_specialize_and_shift():
    p = MultiPoly.var("B", 1) * MultiPoly.var("B", 2)
    q = MultiPoly.var("Q")
    assert specialize(p, {"B": lambda i: q ** (i - 1)}) == q
    assert shift_op(p) == MultiPoly.var("B", 2) * MultiPoly.var("B", 3)


def test_xratfunc_series_geometric():
    b = MultiPoly.var("B", 1)
    f = XRatFunc(XPoly([1]), XPoly([1, -b]))
    ser = xratfunc_series(f, 4)
    assert ser == [b ** i for i in range(5)]


def test_fraction_coefficients():
    p = MultiPoly.const(Fraction(1, 3)) * MultiPoly.var("A", 1)
    assert render(p) == "1/3*A1"

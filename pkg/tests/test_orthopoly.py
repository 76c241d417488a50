from math import comb

from hypothesis import given, strategies as st

from reciprocity.exact import UniPoly
from reciprocity.multipoly import MultiPoly, VarId, XPoly
from reciprocity.orthopoly import (chebyshev_t, chebyshev_t_sum, chebyshev_u, chebyshev_u_sum,
                                   ones_x, poly_p, poly_q, q_binomial, q_even_closed, q_int,
                                   reflect_x, specialize_x, u_half, u_reversed)

ns = st.integers(0, 12)


@given(ns)
def test_u_explicit_sum(n):
    assert chebyshev_u(n) == chebyshev_u_sum(n)


@given(st.integers(1, 12))
def test_t_explicit_sum(n):
    assert chebyshev_t(n) == chebyshev_t_sum(n)


@given(ns)
def test_u_at_one(n):
    # U_n(1) = n + 1
    assert chebyshev_u(n)(1) == n + 1


def test_u_half_small():
    assert u_half(3) == UniPoly([0, -2, 0, 1])        # x^3 - 2x
    assert u_reversed(3) == UniPoly([1, 0, -2])       # 1 - 2x^2


@given(st.integers(0, 9))
def test_p_with_unit_weights_is_reversed_chebyshev(n):
    assert ones_x(poly_p(n)).coeffs == XPoly.from_unipoly(u_half(n)).coeffs


@given(st.integers(0, 8))
def test_q_reflection_is_an_involution(n):
    j = (n + 1) // 2 + 1
    assert reflect_x(reflect_x(poly_q(n), j), j).coeffs == poly_q(n).coeffs


@given(st.integers(0, 7), st.integers(0, 7))
def test_q_binomial_symmetry_and_q1(n, k):
    if k > n:
        return
    b = q_binomial(n, k)
    assert b == q_binomial(n, n - k)
    assert b.evaluate({VarId("Q", 0): 1}) == comb(n, k)


def test_q_int():
    q = MultiPoly.var("Q")
    assert q_int(3) == 1 + q + q ** 2


@given(st.integers(1, 6))
def test_q_even_constant_term(k):
    assert q_even_closed(k).coeffs[0] == MultiPoly.const((-1) ** k)


def test_specialize_x_identity():
    p = poly_p(3)
    assert specialize_x(p, {}).coeffs == p.coeffs

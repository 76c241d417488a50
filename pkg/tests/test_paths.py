from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from reciprocity.exact import ratfunc_series
from reciprocity.multipoly import MultiPoly
from reciprocity.paths import (BoundViolation, UpDownPath, corrected_constant, count_paths,
                               dyck_bounded, endpoint_sum_value, enumerate_paths,
                               motzkin_count, motzkin_gf_unweighted, motzkin_value, path_area,
                               path_gf_unweighted, path_value, path_weight,
                               sum_over_endpoints, weighted_path_poly)


def brute(n, k, r, s, steps=(1, -1)):
    """Count step words directly, without the library's DP."""
    total = 0
    for word in product(steps, repeat=n):
        h, ok = r, True
        for d in word:
            h += d
            if not 0 <= h <= k:
                ok = False
                break
        total += ok and h == s
    return total


grid = st.tuples(st.integers(0, 10), st.integers(0, 5)).flatmap(
    lambda t: st.tuples(st.just(t[0]), st.just(t[1]), st.integers(0, t[1]), st.integers(0, t[1])))


@given(grid)
def test_count_matches_brute(args):
    n, k, r, s = args
    assert count_paths(n, k, r, s) == brute(n, k, r, s)
    assert len(enumerate_paths(n, k, r, s)) == brute(n, k, r, s)


@given(grid)
def test_motzkin_matches_brute(args):
    n, k, r, s = args
    if n > 7:
        return
    assert motzkin_count(n, k, r, s) == brute(n, k, r, s, (1, 0, -1))


def test_frozen_values():
    # oracle values from the brute counter above
    assert count_paths(4, 3, 0, 0) == 2
    assert count_paths(10, 5, 0, 0) == 42            # Catalan: bound never binds
    assert [count_paths(2 * n, 2, 0, 0) for n in range(1, 6)] == [1, 2, 4, 8, 16]
    assert [motzkin_count(n, 10) for n in range(7)] == [1, 1, 2, 4, 9, 21, 51]
    assert dyck_bounded(2, 3) == brute(5, 3, 0, 3) == 3
    assert [sum_over_endpoints(n, 4) for n in range(2, 5)] == [2, 3, 6]


def test_negative_indices():
    # backward continuation of C_n^(3)(0 -> 0), checked against the reciprocal series
    assert path_value(-2, 3) == 2
    assert path_value(-4, 3) == 5
    f = path_gf_unweighted(3, 0, 0)
    assert f.is_proper()


def test_even_bound_correction():
    # for even bounds the constant term of the Dyck GF lies off the recurrence
    for k in (2, 4, 6):
        assert corrected_constant(k) == Fraction(k // 2, k // 2 + 1)
    assert endpoint_sum_value(0, 4, corrected=True) == Fraction(2 * 1, 2 * 1 + 1)


@given(st.integers(0, 8), st.integers(1, 4))
def test_weights_specialize_to_counts(n, k):
    w = weighted_path_poly(n, k, 0, 0, "B")
    one = {v: 1 for v in w.variables()}
    assert w.evaluate(one) == count_paths(n, k, 0, 0)


def test_path_weight_and_area():
    p = UpDownPath.from_string(0, "UUDD")
    B = lambda i: MultiPoly.var("B", i)
    assert path_weight(p, "B") == B(1) * B(2)
    assert path_area(p) >= 0
    assert str(p) == "UUDD" and p.end == 0 and p.is_valid(2) and not p.is_valid(1)


def test_motzkin_gf_series():
    assert ratfunc_series(motzkin_gf_unweighted(2), 6) == [motzkin_count(n, 2) for n in range(7)]
    assert motzkin_value(3, 2) == motzkin_count(3, 2)


def test_bound_violation():
    with pytest.raises(BoundViolation):
        count_paths(2, 2, 0, 3)

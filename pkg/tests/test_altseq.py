from itertools import product

import pytest
from hypothesis import given, strategies as st

from reciprocity.altseq import (BadBound, altseq_gf_unweighted, altseq_weight, count_altseq,
                                cumulative_gf, cumulative_gf_split, enumerate_altseqs,
                                is_alternating, series_by_length, weighted_altseq_poly)
from reciprocity.exact import ratfunc_series
from reciprocity.multipoly import MultiPoly


def brute(n, k, r=None, s=None):
    out = 0
    for seq in product(range(1, k + 1), repeat=n):
        up = all(seq[i] <= seq[i + 1] if i % 2 == 0 else seq[i] >= seq[i + 1]
                 for i in range(n - 1))
        if up and (r is None or seq[0] == r) and (s is None or seq[-1] == s):
            out += 1
    return out


@given(st.integers(1, 7), st.integers(1, 4), st.data())
def test_counts_match_brute(n, k, data):
    r = data.draw(st.none() | st.integers(1, k))
    s = data.draw(st.none() | st.integers(1, k))
    assert count_altseq(n, k, r, s) == brute(n, k, r, s)
    assert len(list(enumerate_altseqs(n, k, r, s))) == brute(n, k, r, s)


@given(st.lists(st.integers(1, 5), max_size=8))
def test_is_alternating_agrees_with_definition(seq):
    n = len(seq)
    expect = all(seq[i] <= seq[i + 1] if i % 2 == 0 else seq[i] >= seq[i + 1] for i in range(n - 1))
    assert is_alternating(seq) == expect


def test_cumulative_gf_is_fibonacci_for_k2():
    f = cumulative_gf(2)
    assert str(f) == "1/(1 - x - x^2)"
    assert ratfunc_series(f, 8) == [1, 1, 2, 3, 5, 8, 13, 21, 34]
    assert ratfunc_series(f, 8)[1:] == [count_altseq(n, 2) for n in range(8)]


@pytest.mark.parametrize("k", range(1, 6))
def test_cumulative_split(k):
    assert cumulative_gf(k) == cumulative_gf_split(k)


def test_frozen_counts_k3():
    # values from the brute counter above
    assert [count_altseq(n, 3) for n in range(6)] == [1, 3, 6, 14, 31, 70]


@pytest.mark.parametrize("k,r,s", [(3, 1, 2), (4, 2, 2), (2, 2, 1)])
def test_constrained_gf(k, r, s):
    f = altseq_gf_unweighted(k, "odd", r, s)
    ser = series_by_length(f, "odd", True, 9)
    for n, c in ser.items():
        assert c == brute(n, k, r, s)


def test_weight_of_sequence():
    A, V = (lambda i: MultiPoly.var("A", i)), (lambda i: MultiPoly.var("V", i))
    assert altseq_weight((1, 2, 1)) == V(1) * A(2) * V(1)
    w = weighted_altseq_poly(3, 2)
    assert w.evaluate({v: 1 for v in w.variables()}) == count_altseq(3, 2)


def test_length_one_needs_equal_ends():
    assert count_altseq(1, 3, 2, 2) == 1
    assert count_altseq(1, 3, 1, 2) == 0


def test_bad_bound():
    with pytest.raises(BadBound):
        count_altseq(3, 2, 3, 1)

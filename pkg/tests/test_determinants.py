from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from reciprocity.determinants import (NonSquare, det, det_cofactor, det_exact, det_poly, hankel,
                                      lgv_matrix, lgv_signed_sum)
from reciprocity.multipoly import MultiPoly


@st.composite
def int_matrices(draw, max_n=5):
    n = draw(st.integers(0, max_n))
    return [[draw(st.integers(-4, 4)) for _ in range(n)] for _ in range(n)]


@given(int_matrices())
def test_bareiss_matches_laplace(M):
    assert det_exact(M) == (det_cofactor(M) if M else 1)


@given(int_matrices(4), int_matrices(4))
def test_multiplicative(A, B):
    if len(A) != len(B):
        return
    n = len(A)
    AB = [[sum(A[i][t] * B[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
    assert det_exact(AB) == det_exact(A) * det_exact(B)


@given(int_matrices(4))
def test_poly_det_on_constants(M):
    assert det_poly(M) == MultiPoly.const(det_exact(M))


def test_symbolic_2x2():
    a, b = MultiPoly.var("A", 1), MultiPoly.var("V", 1)
    assert det([[a, b], [b, a]]) == a * a - b * b


def test_fraction_entries():
    assert det([[Fraction(1, 2), 1], [1, 4]]) == 1


def test_hankel_catalan():
    cat = [1, 1, 2, 5, 14, 42, 132]
    for n in range(1, 4):
        assert det(hankel(lambda i: cat[i], n)) == 1


def test_non_square():
    with pytest.raises(NonSquare):
        det_exact([[1, 2]])


@pytest.mark.parametrize("bound", [3, 5])
def test_lgv_brute_equals_determinant(bound):
    # two Dyck paths, starts (0,0), (-2,0), ends (6,0), (8,0), inside [0, bound]
    starts = [(0, 0), (-2, 0)]
    ends = [(6, 0), (8, 0)]
    assert lgv_signed_sum(starts, ends, bound) == det(lgv_matrix(starts, ends, bound))

from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from reciprocity import tableaux as tab


def brute_count(lam, mu, k, flags=None):
    """Fill every cell independently and test the row and interlacing rules."""
    cells = [(i, c) for i in range(len(lam)) for c in range(mu[i] + 1, lam[i] + 1)]
    total = 0
    for vals in product(range(1, k + 1), repeat=len(cells)):
        a = dict(zip(cells, vals))
        ok = True
        for (i, c), v in a.items():
            right = a.get((i, c + 1))
            if right is not None and (v > right if c % 2 else v < right):
                ok = False
            below_right = a.get((i + 1, c + 1))
            if c % 2 and below_right is not None and not v > below_right:
                ok = False
        for i in range(len(lam)):
            for c in range(0, max(lam) + 1, 2):
                below, right = a.get((i + 1, c)), a.get((i, c + 1))
                if below is not None and right is not None and not below < right:
                    ok = False
        if ok and flags is not None:
            r, s = flags
            for i in range(len(lam)):
                if lam[i] > mu[i] and (a[(i, mu[i] + 1)] != r[i] or a[(i, lam[i])] != s[i]):
                    ok = False
        total += ok
    return total


shapes = st.integers(1, 2).flatmap(lambda m: st.tuples(
    st.lists(st.integers(0, 5), min_size=m, max_size=m),
    st.lists(st.sampled_from([0, 2]), min_size=m, max_size=m)))


@settings(max_examples=60, deadline=None)
@given(shapes, st.integers(1, 3))
def test_transfer_count_matches_brute(shape, k):
    lam, mu = shape
    if any(l < u for l, u in zip(lam, mu)) or sum(l - u for l, u in zip(lam, mu)) > 7:
        return
    sh = tab.TableauShape(lam, mu)
    expect = brute_count(lam, mu, k)
    assert tab.tableau_gf(sh, k) == expect
    assert len(list(tab.enumerate_alt_tableaux(sh, k))) == expect
    assert all(tab.is_alt_tableau(t, k) for t in tab.enumerate_alt_tableaux(sh, k))


def test_flagged_count_matches_brute():
    sh = tab.TableauShape((3, 3), (0, 0))
    for flags in [((2, 1), (2, 1)), ((3, 1), (2, 1))]:
        assert tab.tableau_gf(sh, 3, flags) == brute_count((3, 3), (0, 0), 3, flags)


def test_weighted_specializes_to_count():
    sh = tab.TableauShape((3, 5), (0, 2))
    w = tab.tableau_gf(sh, 3, weighted=True)
    assert w.evaluate({v: 1 for v in w.variables()}) == tab.tableau_gf(sh, 3)


def test_render():
    sh = tab.TableauShape((3, 3), (0, 0))
    t = next(iter(tab.enumerate_alt_tableaux(sh, 2)))
    assert len(t.render().splitlines()) == 2


def test_bad_shape():
    with pytest.raises(tab.BadShape):
        tab.TableauShape((3,), (1,))


@pytest.mark.parametrize("which", ["trapezoidal", "rhomboidal"])
@pytest.mark.parametrize("n,k,m", [(1, 1, 1), (2, 1, 1), (1, 2, 1), (2, 1, 2)])
def test_family_tableau_round_trip(which, n, k, m):
    st_ = tab.setting(which, n, k, m)
    fams = tab.enumerate_families(st_)
    tabs = {tab.paths_to_tableau(st_, f) for f in fams}
    assert len(tabs) == len(fams) == tab.setting_tableaux_gf(st_)
    for f in fams:
        assert tab.tableau_to_paths(st_, tab.paths_to_tableau(st_, f)) == f


@pytest.mark.parametrize("which", ["trapezoidal", "rhomboidal"])
@pytest.mark.parametrize("n,k,m", [(1, 1, 1), (2, 2, 1), (3, 1, 2)])
def test_plane_partitions(which, n, k, m):
    st_ = tab.setting(which, n, k, m)
    outer, inner = tab.plane_partition_shape(which, n, m)
    pps = set()
    for t in tab.enumerate_setting_tableaux(st_):
        pp = tab.tableau_to_plane_partition(t)
        assert tab.is_plane_partition(pp)
        pps.add(tuple(sorted(pp.items())))
    assert len(pps) == tab.count_plane_partitions(outer, inner, k)
    assert len(pps) == tab.binomial_det(which, n, k, m)


def test_complement():
    assert tab.complement((1, 3), 4) == (2, 4)

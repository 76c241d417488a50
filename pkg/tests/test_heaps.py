import pytest
from hypothesis import given, strategies as st

from reciprocity import heaps as hp
from reciprocity.altseq import altseq_weight
from reciprocity.multipoly import MultiPoly, xratfunc_series
from reciprocity.paths import UpDownPath, path_weight

LONG_SEQ = (4, 4, 3, 3, 1, 1, 1, 3, 2, 6, 6, 8, 4, 7, 4, 4, 2, 3, 2, 2, 2, 5, 5, 6, 3, 6, 5, 8, 6)


@st.composite
def bounded_paths(draw):
    k = draw(st.integers(1, 5))
    h = r = draw(st.integers(0, k))
    steps = []
    for _ in range(draw(st.integers(0, 12))):
        choices = [d for d in (1, -1) if 0 <= h + d <= k]
        d = draw(st.sampled_from(choices))
        steps.append(d)
        h += d
    return k, UpDownPath(r, steps)


@given(bounded_paths())
def test_path_heap_round_trip(kp):
    k, p = kp
    if p.start > p.end:
        return
    h = hp.path_to_dimer_heap(p, k)
    assert hp.dimer_heap_to_path(h, k, p.start, p.end) == p
    assert len(h.pieces) == (len(p) - (p.end - p.start)) // 2
    assert hp.heap_weight(h, True) == path_weight(p, "B")
    assert all(p.start - 1 <= d.lo <= p.end for d in h.maximal_pieces())


@st.composite
def altseqs(draw):
    k = draw(st.integers(1, 6))
    n = draw(st.integers(0, 6))
    seq = [draw(st.integers(1, k))]
    for i in range(2 * n):
        lo, hi = (seq[-1], k) if i % 2 == 0 else (1, seq[-1])
        seq.append(draw(st.integers(lo, hi)))
    return k, tuple(seq)


@given(altseqs())
def test_segment_heap_round_trips(ka):
    k, a = ka
    m5 = hp.altseq_to_segment_heap(a, k)
    assert hp.segment_heap_to_altseq(m5) == a
    assert hp.segment_heap_conditions(m5, k, a[-1])
    assert hp.marked_weight(m5) == altseq_weight(a)
    m6 = hp.altseq_to_reordered_heap(a, k)
    assert hp.reordered_heap_to_altseq(m6) == a
    if a[0] <= a[-1]:
        # the reordered conditions are stated for r <= s
        assert hp.reordered_heap_conditions(m6, k, a[-1])
    assert hp.marked_weight(m6) == altseq_weight(a)


def test_long_sequence_has_two_copies_of_segment_3_2():
    mh = hp.altseq_to_segment_heap(LONG_SEQ, 8)
    assert list(mh.heap.pieces).count(hp.segment(3, 2)) == 2
    assert hp.segment_heap_to_altseq(mh) == LONG_SEQ


def test_heap_equality_is_up_to_commutation():
    a, b = hp.dimer(0), hp.dimer(3)
    assert hp.Heap([a, b]) == hp.Heap([b, a])
    c = hp.dimer(1)
    assert hp.Heap([a, c]) != hp.Heap([c, a])


def test_trivial_heaps_of_three_dimers():
    # dimers on [0, 3]: d0, d1, d2; independent sets: {}, {d0}, {d1}, {d2}, {d0, d2}
    assert len(hp.trivial_heaps(hp.dimers_on(0, 3))) == 5


def test_render_is_deterministic():
    h = hp.Heap([hp.dimer(0), hp.dimer(1), hp.dimer(0)])
    assert h.render() == h.render()
    assert len(h.render().splitlines()) == 3


def test_inverse_rejects_bad_maximal_piece():
    with pytest.raises(hp.ConstraintViolation):
        hp.dimer_heap_to_path(hp.Heap([hp.dimer(3)]), 4, 0, 0)


# parallelogram polyominoes

@pytest.mark.parametrize("k", [1, 2, 3])
def test_polyomino_width_one(k):
    q, y = MultiPoly.var("Q"), MultiPoly.var("Y")
    ser = xratfunc_series(hp.polyomino_gf_closed(k), 2)
    expect = MultiPoly()
    for h in range(1, k + 1):
        expect = expect + (y * q) ** h
    assert ser[2] == expect


def _low_height(p, k):
    """Terms whose y-degree is at most k."""
    y = next(iter(MultiPoly.var("Y").terms))[0][0]
    return MultiPoly({m: c for m, c in p.terms.items() if dict(m).get(y, 0) <= k})


@pytest.mark.parametrize("k", [1, 2, 3])
def test_polyomino_stability(k):
    # a polyomino of height <= k never reaches level k + 1, so those terms
    # do not change when the bound grows
    a = xratfunc_series(hp.polyomino_gf_closed(k), 8)
    b = xratfunc_series(hp.polyomino_gf_closed(k + 1), 8)
    assert all(_low_height(a[i], k) == _low_height(b[i], k) for i in range(9))
    assert any(a[i] != b[i] for i in range(9))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_polyomino_heaps_match_direct(k):
    assert hp.polyomino_series_from_heaps(k, 4) == hp.polyomino_series_direct(k, 4)

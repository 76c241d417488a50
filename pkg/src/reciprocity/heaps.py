"""Heaps of pieces: dimers on [0, k] and vertical segments on [1, k].

Both kinds of piece occupy a closed integer interval, and two pieces commute
exactly when their intervals are disjoint.  A heap is stored as its pile
sequence; two pile sequences are the same heap when their Cartier-Foata
normal forms agree.
"""


from .multipoly import MultiPoly, XPoly
from .paths import UpDownPath, UP, DOWN


class ConstraintViolation(ValueError):
    pass


class NotPolyomino(ValueError):
    pass


class Piece(tuple):
    """(kind, lo, hi); kind is 'd' for a dimer, 's' for a segment."""

    def __new__(cls, kind, lo, hi):
        if hi < lo:
            raise ValueError("piece with hi < lo")
        return super().__new__(cls, (kind, lo, hi))

    @property
    def kind(self):
        return self[0]

    @property
    def lo(self):
        return self[1]

    @property
    def hi(self):
        return self[2]

    def commutes(self, other):
        return self[1] > other[2] or other[1] > self[2]

    def __repr__(self):
        if self[0] == "d":
            return f"d{self[1]}"
        return f"{self[2]}-{self[1]}"


def dimer(y):
    return Piece("d", y, y + 1)


def segment(hi, lo):
    """Segment written hi-lo, occupying [lo, hi]."""
    return Piece("s", lo, hi)


class Heap:
    __slots__ = ("pieces",)

    def __init__(self, pieces=()):
        self.pieces = tuple(pieces)

    def __len__(self):
        return len(self.pieces)

    def push(self, piece):
        return Heap(self.pieces + (piece,))

    def layers(self):
        """Cartier-Foata layers from the bottom, each sorted."""
        lvl = []
        for i, p in enumerate(self.pieces):
            h = 0
            for j in range(i):
                if not p.commutes(self.pieces[j]):
                    h = max(h, lvl[j] + 1)
            lvl.append(h)
        out = {}
        for p, h in zip(self.pieces, lvl):
            out.setdefault(h, []).append(p)
        return tuple(tuple(sorted(out[h])) for h in sorted(out))

    def normal_form(self):
        return tuple(p for layer in self.layers() for p in layer)

    def __eq__(self, other):
        return isinstance(other, Heap) and self.layers() == other.layers()

    def __hash__(self):
        return hash(self.layers())

    def columns(self):
        """Column of each piece after pushing everything to the left."""
        col = []
        for i, p in enumerate(self.pieces):
            c = 0
            for j in range(i):
                if not p.commutes(self.pieces[j]):
                    c = max(c, col[j] + 1)
            col.append(c)
        return col

    def _blocked_above(self, i):
        p = self.pieces[i]
        return any(not p.commutes(q) for q in self.pieces[i + 1:])

    def _blocked_below(self, i):
        p = self.pieces[i]
        return any(not p.commutes(q) for q in self.pieces[:i])

    def maximal_indices(self):
        return [i for i in range(len(self.pieces)) if not self._blocked_above(i)]

    def minimal_indices(self):
        return [i for i in range(len(self.pieces)) if not self._blocked_below(i)]

    def maximal_pieces(self):
        return sorted(self.pieces[i] for i in self.maximal_indices())

    def minimal_pieces(self):
        return sorted(self.pieces[i] for i in self.minimal_indices())

    def remove(self, idx):
        if isinstance(idx, int):
            idx = {idx}
        return Heap(p for i, p in enumerate(self.pieces) if i not in idx)

    def upset(self, i):
        """Indices of pieces that lie above piece i (including i)."""
        out = {i}
        for j in range(i + 1, len(self.pieces)):
            pj = self.pieces[j]
            if any(not pj.commutes(self.pieces[t]) for t in out):
                out.add(j)
        return out

    def downset(self, i):
        out = {i}
        for j in range(i - 1, -1, -1):
            pj = self.pieces[j]
            if any(not pj.commutes(self.pieces[t]) for t in out):
                out.add(j)
        return out

    def is_trivial(self):
        return len(self.maximal_indices()) == len(self.pieces)

    def render(self):
        """One text line per level, top level first; pieces drawn at their column."""
        if not self.pieces:
            return "(empty heap)"
        cols = self.columns()
        lo = min(p.lo for p in self.pieces)
        hi = max(p.hi for p in self.pieces)
        width = max(cols) + 1
        grid = {y: ["  "] * width for y in range(lo, hi + 1)}
        for p, c in zip(self.pieces, cols):
            for y in range(p.lo, p.hi + 1):
                grid[y][c] = "[]"
        return "\n".join(f"{y:>3} " + "".join(grid[y]).rstrip() for y in range(hi, lo - 1, -1))

    def __repr__(self):
        return f"Heap({list(self.pieces)})"


class MarkedHeap:
    """A heap together with the starting level r of its alternating sequence."""

    __slots__ = ("heap", "mark")

    def __init__(self, heap, mark):
        self.heap = heap
        self.mark = mark

    def __eq__(self, other):
        return isinstance(other, MarkedHeap) and self.mark == other.mark and self.heap == other.heap

    def __hash__(self):
        return hash((self.mark, self.heap))

    def __repr__(self):
        return f"MarkedHeap(mark={self.mark}, {self.heap!r})"


# weights

def piece_weight(p, weighted=False):
    """x-free part of the weight: B_{y+1} for d_y, V_lo A_hi for segments."""
    if not weighted:
        return MultiPoly.const(1)
    if p.kind == "d":
        return MultiPoly.var("B", p.lo + 1)
    return MultiPoly.var("V", p.lo) * MultiPoly.var("A", p.hi)


def heap_weight(h, weighted=False):
    w = MultiPoly.const(1)
    for p in h.pieces:
        w = w * piece_weight(p, weighted)
    return w


def marked_weight(mh):
    return MultiPoly.var("V", mh.mark) * heap_weight(mh.heap, True)


# piece alphabets

def dimers_on(lo, hi):
    return [dimer(y) for y in range(lo, hi)]


def segments_on(lo, hi):
    return [segment(j, i) for i in range(lo, hi + 1) for j in range(i, hi + 1)]


# paths <-> heaps of dimers

def path_to_dimer_heap(path, k, r=None, s=None):
    if r is None:
        r = path.start
    if s is None:
        s = path.end
    if path.start != r or path.end != s or not path.is_valid(k) or r > s:
        raise ConstraintViolation("path does not match (k, r, s) with r <= s")
    hs = path.heights()
    pieces = []
    # the portion containing step t lies above r iff max(h_t, h_{t+1}) > r
    for t, st in enumerate(path.steps):
        a, b = hs[t], hs[t + 1]
        if max(a, b) > r:
            if st == DOWN:
                pieces.append(dimer(b))
        else:
            if st == UP:
                pieces.append(dimer(a))
    return Heap(pieces)


def _run(frm, to):
    """Monotone steps from height frm to height to."""
    return [UP] * (to - frm) if to >= frm else [DOWN] * (frm - to)


def dimer_heap_to_path(h, k, r, s):
    """Inverse: rebuild the path from the back, popping top-most maximal dimers."""
    for p in h.pieces:
        if p.kind != "d" or p.lo < 0 or p.hi > k:
            raise ConstraintViolation(f"{p!r} is not a dimer on [0, {k}]")
    for p in h.maximal_pieces():
        if not r - 1 <= p.lo <= s:
            raise ConstraintViolation(f"maximal dimer {p!r} outside levels {r - 1}..{s}")
    steps = []
    cur = s
    heap = h
    while heap.pieces:
        maxi = heap.maximal_indices()
        top = max(maxi, key=lambda i: heap.pieces[i].lo)
        i = heap.pieces[top].lo
        if i >= r:
            steps = [DOWN] + _run(i, cur) + steps
            cur = i + 1
            heap = heap.remove(top)
            continue
        # i == r-1: split off the subheap below level r hanging from this dimer
        below_prev = set()
        others = [j for j, p in enumerate(heap.pieces) if p.lo == r - 1 and j < top]
        if others:
            below_prev = heap.downset(max(others))
        sub_idx = sorted(j for j in heap.downset(top)
                         if j == top or (heap.pieces[j].hi <= r - 1 and j not in below_prev))
        sub = Heap(heap.pieces[j] for j in sub_idx)
        heap = heap.remove(set(sub_idx))
        seg_steps = []
        c2 = cur
        first = True
        while sub.pieces:
            # below r the picture is mirrored, so take the lowest maximal dimer
            smax = sub.maximal_indices()
            t = min(smax, key=lambda j: sub.pieces[j].lo)
            j = sub.pieces[t].lo
            if first:
                if j != r - 1:
                    raise ConstraintViolation("subheap does not start with a dimer at level r-1")
                first = False
            seg_steps = [UP] + _run(j + 1, c2) + seg_steps
            c2 = j
            sub = sub.remove(t)
        steps = seg_steps + steps
        cur = c2
    steps = _run(r, cur) + steps
    return UpDownPath(r, steps)


# alternating sequences <-> heaps of segments

def _pairs(seq):
    if len(seq) % 2 == 0:
        raise ConstraintViolation("expected an odd-length alternating sequence")
    return [(seq[2 * i + 1], seq[2 * i + 2]) for i in range(len(seq) // 2)]


def altseq_to_segment_heap(seq, k):
    from .altseq import is_alternating
    if not is_alternating(seq, k):
        raise ConstraintViolation(f"{seq} is not alternating within [1, {k}]")
    return MarkedHeap(Heap(segment(a, b) for a, b in _pairs(seq)), seq[0])


def segment_heap_to_altseq(mh):
    """Pop top-most maximal segments; each gives the last two entries."""
    heap = mh.heap
    tail = []
    while heap.pieces:
        maxi = heap.maximal_indices()
        t = max(maxi, key=lambda i: heap.pieces[i].lo)
        p = heap.pieces[t]
        tail = [p.hi, p.lo] + tail
        heap = heap.remove(t)
    return tuple([mh.mark] + tail)


def segment_heap_conditions(mh, k, s):
    """(1) a maximal segment j-s, (2) no maximal segment inside [s+1, k],
    (3) no minimal segment inside [1, r-1]."""
    h, r = mh.heap, mh.mark
    if not h.pieces:
        return r == s
    maxp = h.maximal_pieces()
    minp = h.minimal_pieces()
    c1 = any(p.lo == s for p in maxp)
    c2 = not any(p.lo >= s + 1 for p in maxp)
    c3 = not any(p.hi <= r - 1 for p in minp)
    return c1 and c2 and c3


# alternating sequences <-> heaps with reordered piling

def reorder_pairs(seq, r):
    """Block reversal of the pairs at every dip below r."""
    pairs = _pairs(seq)
    n = len(pairs)
    out = []
    l = 0
    while l < n:
        top, bot = pairs[l]
        if bot >= r:
            out.append(pairs[l])
            l += 1
            continue
        j = l + 1
        while j < n and pairs[j][0] < r:
            j += 1
        out.extend(reversed(pairs[l:j]))
        l = j
    return out


def altseq_to_reordered_heap(seq, k):
    from .altseq import is_alternating
    if not is_alternating(seq, k):
        raise ConstraintViolation(f"{seq} is not alternating within [1, {k}]")
    r = seq[0]
    return MarkedHeap(Heap(segment(a, b) for a, b in reorder_pairs(seq, r)), r)


def reordered_heap_conditions(mh, k, s):
    """(1') a maximal segment j-s, (2') no maximal segment inside [1, r-1] or [s+1, k]."""
    h, r = mh.heap, mh.mark
    if not h.pieces:
        return r == s
    maxp = h.maximal_pieces()
    return (any(p.lo == s for p in maxp)
            and not any(p.hi <= r - 1 or p.lo >= s + 1 for p in maxp))


def _leftmost_outside(heap, moved, r):
    """Among moved pieces not inside [1, r-1], the one furthest left."""
    cand = [j for j in moved if heap.pieces[j].hi > r - 1]
    if not cand:
        return None
    cols = heap.columns()
    # furthest left, ties broken by pile position (lower first)
    return min(cand, key=lambda j: (cols[j], j))


def reordered_heap_to_altseq(mh):
    """Undo the reordering by peeling minimal blocks, then undo the plain piling."""
    r = mh.mark
    heap = mh.heap
    rebuilt = []
    while heap.pieces:
        mins = heap.minimal_indices()
        mins.sort(key=lambda i: heap.pieces[i].lo, reverse=True)
        alpha = mins[0]
        if heap.pieces[alpha].hi > r - 1:
            rebuilt.append(heap.pieces[alpha])
            heap = heap.remove(alpha)
            continue
        moved = heap.upset(alpha)
        omega = _leftmost_outside(heap, moved, r)
        if omega is None:
            raise ConstraintViolation("segment below r without a segment above to attach to")
        group = moved & heap.downset(omega)
        for beta in mins[1:]:
            mv = heap.upset(beta)
            if _leftmost_outside(heap, mv, r) != omega:
                break
            group |= mv & heap.downset(omega)
        block = [heap.pieces[j] for j in sorted(group)]
        rebuilt.extend(reversed(block))
        heap = heap.remove(group)
    return segment_heap_to_altseq(MarkedHeap(Heap(rebuilt), r))


# trivial heaps

def trivial_heaps(alphabet):
    """All sets of pairwise commuting pieces from the alphabet."""
    alphabet = sorted(alphabet)
    out = []

    def rec(i, chosen):
        if i == len(alphabet):
            out.append(tuple(chosen))
            return
        rec(i + 1, chosen)
        p = alphabet[i]
        if all(p.commutes(q) for q in chosen):
            chosen.append(p)
            rec(i + 1, chosen)
            chosen.pop()

    rec(0, [])
    return out


def trivial_heap_gf(alphabet, weighted=False):
    """sum over trivial heaps T of (-1)^|T| w(T) x^(2|T|)."""
    cs = {}
    for t in trivial_heaps(alphabet):
        w = MultiPoly.const((-1) ** len(t))
        for p in t:
            w = w * piece_weight(p, weighted)
        cs[2 * len(t)] = cs.get(2 * len(t), MultiPoly()) + w
    deg = max(cs) if cs else 0
    return XPoly([cs.get(i, MultiPoly()) for i in range(deg + 1)])


def dimer_trivial_gf(k, weighted=False):
    return trivial_heap_gf(dimers_on(0, k), weighted)


def segment_trivial_gf(k, weighted=False):
    return trivial_heap_gf(segments_on(1, k), weighted)


def trivial_gf_tail_sum(k, r, s):
    """sum_{j=s}^{k} x^2 * (trivial GF on segments inside [1, r-1] or [j+1, k])."""
    tot = XPoly()
    for j in range(s, k + 1):
        alph = segments_on(1, r - 1) + segments_on(j + 1, k)
        tot = tot + trivial_heap_gf(alph).shift(2)
    return tot


# heaps enumerated through their top-down layer decomposition

def heap_gf_by_layers(alphabet, allowed_max, max_pieces, weighted=False):
    """Weight sums, by number of pieces, of heaps whose maximal pieces lie in allowed_max.

    Every heap is a unique sequence of trivial heaps L1, L2, ... where L1 is
    its set of maximal pieces and each piece of L(i+1) fails to commute with
    some piece of L(i).  This enumerates heaps without any inversion formula.
    """
    allowed = set(allowed_max)
    trivs = [t for t in trivial_heaps(alphabet) if t]
    wts = {}
    for t in trivs:
        w = MultiPoly.const(1)
        for p in t:
            w = w * piece_weight(p, weighted)
        wts[t] = w
    # state: (last layer, size) -> weight
    out = [MultiPoly() for _ in range(max_pieces + 1)]
    out[0] = MultiPoly.const(1)
    frontier = {}
    for t in trivs:
        if len(t) <= max_pieces and all(p in allowed for p in t):
            frontier[(t, len(t))] = wts[t]
    while frontier:
        nxt = {}
        for (last, size), w in frontier.items():
            out[size] = out[size] + w
            for t in trivs:
                if size + len(t) > max_pieces:
                    continue
                if all(any(not p.commutes(q) for q in last) for p in t):
                    key = (t, size + len(t))
                    nxt[key] = nxt.get(key, MultiPoly()) + w * wts[t]
        frontier = nxt
    return out


def enumerate_heaps(alphabet, max_pieces):
    """Distinct heaps with at most max_pieces pieces (brute force, by normal form)."""
    seen = {0: {Heap()}}
    for n in range(1, max_pieces + 1):
        layer = set()
        for h in seen[n - 1]:
            for p in alphabet:
                layer.add(Heap(h.normal_form()).push(p))
        seen[n] = {Heap(h.normal_form()) for h in layer}
    return [h for n in range(max_pieces + 1) for h in seen[n]]


def master_formula_rhs(alphabet, allowed_max, weighted=False):
    """(trivial GF over pieces outside allowed_max) / (trivial GF over all pieces)."""
    from .multipoly import XRatFunc
    allowed = set(allowed_max)
    num = trivial_heap_gf([p for p in alphabet if p not in allowed], weighted)
    den = trivial_heap_gf(alphabet, weighted)
    return XRatFunc(num, den)


# parallelogram polyominoes

def polyomino_stats(mh):
    """(width, height, area) for a heap with a unique maximal segment j-1.

    width counts segments, height is 1 plus the summed segment lengths
    hi - lo, and area sums the upper ends hi.
    """
    h = mh.heap if isinstance(mh, MarkedHeap) else mh
    maxp = h.maximal_pieces()
    if len(maxp) != 1 or maxp[0].lo != 1:
        raise NotPolyomino("heap needs exactly one maximal segment, touching level 1")
    width = len(h.pieces)
    height = 1 + sum(p.hi - p.lo for p in h.pieces)
    area = sum(p.hi for p in h.pieces)
    return width, height, area


def polyomino_heaps(k, max_width):
    """Heaps of segments on [1, k] with a unique maximal segment j-1, via alternating
    sequences 1 <= a_2 >= a_3 <= ... >= 1 and the plain piling map."""
    from .altseq import enumerate_altseqs
    out = []
    for w in range(1, max_width + 1):
        for seq in enumerate_altseqs(2 * w + 1, k, 1, 1):
            out.append(altseq_to_segment_heap(seq, k))
    return out


def polyomino_series_from_heaps(k, max_width):
    """sum over those heaps of q^area y^height x^(2 width), as a list indexed by power of x."""
    q, y = MultiPoly.var("Q"), MultiPoly.var("Y")
    cs = [MultiPoly() for _ in range(2 * max_width + 1)]
    for mh in polyomino_heaps(k, max_width):
        w, hgt, a = polyomino_stats(mh)
        cs[2 * w] = cs[2 * w] + q ** a * y ** hgt
    return cs


def enumerate_parallelogram_polyominoes(max_width, max_column):
    """Column lists [(bottom, top), ...] of parallelogram polyominoes.

    Bottoms and tops are weakly increasing, consecutive columns overlap
    in at least one cell, the first bottom is 0, and every column has at
    most max_column cells.
    """
    out = []

    def rec(cols):
        out.append(tuple(cols))
        if len(cols) == max_width:
            return
        b0, t0 = cols[-1]
        for b in range(b0, t0 + 1):
            for t in range(max(t0, b), b + max_column):
                rec(cols + [(b, t)])

    for t in range(max_column):
        rec([(0, t)])
    return out


def polyomino_series_direct(k, max_width):
    q, y = MultiPoly.var("Q"), MultiPoly.var("Y")
    cs = [MultiPoly() for _ in range(2 * max_width + 1)]
    for cols in enumerate_parallelogram_polyominoes(max_width, k):
        w = len(cols)
        area = sum(t - b + 1 for b, t in cols)
        height = cols[-1][1] - cols[0][0] + 1
        cs[2 * w] = cs[2 * w] + q ** area * y ** height
    return cs


def polyomino_gf_closed(k):
    """-y * (numerator double sum) / (denominator double sum), in x."""
    from math import comb
    from .multipoly import XRatFunc
    from .orthopoly import q_binomial
    q, y = MultiPoly.var("Q"), MultiPoly.var("Y")
    num = [MultiPoly() for _ in range(2 * k + 1)]
    den = [MultiPoly() for _ in range(2 * k + 1)]
    den[0] = MultiPoly.const(1)
    for j in range(1, k + 1):
        a = MultiPoly()
        b = MultiPoly()
        for i in range(k - j + 1):
            a = a + (y * q) ** i * q_binomial(k - i - 1, j - 1) * q_binomial(i + j - 1, j - 1)
            b = b + (y * q) ** i * q_binomial(k - i, j) * q_binomial(i + j - 1, j - 1)
        sgn = (-1) ** j
        num[2 * j] = -y * sgn * q ** comb(j + 1, 2) * a
        den[2 * j] = sgn * q ** comb(j + 1, 2) * b
    return XRatFunc(XPoly(num), XPoly(den))

"""Alternating tableaux, the path families they encode, and plane partitions.

A tableau of shape lam/mu has rows i = 1..m (top to bottom); row i holds
entries in columns mu_i + 1 .. lam_i.  Rows alternate (<= then >=), and
neighbouring rows interlace strictly:  a[i+1][2j] < a[i][2j+1] > a[i+1][2j+2].
Every condition links two adjacent columns, so tableaux are counted with a
column-by-column transfer.
"""

from dataclasses import dataclass
from itertools import product
from math import comb

from .altseq import weighted_altseq_poly, count_altseq
from .determinants import det
from .multipoly import MultiPoly
from .paths import UpDownPath, UP, DOWN, path_weight


class BadShape(ValueError):
    pass


class NotNonintersecting(ValueError):
    pass


class AnchorMismatch(ValueError):
    pass


@dataclass(frozen=True)
class TableauShape:
    lam: tuple
    mu: tuple

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(self.lam))
        object.__setattr__(self, "mu", tuple(self.mu))
        if len(self.lam) != len(self.mu):
            raise BadShape("lam and mu need the same length")
        for l, u in zip(self.lam, self.mu):
            if u % 2:
                raise BadShape("mu entries must be even")
            if l < u - 1:
                raise BadShape("row shorter than empty")

    @property
    def m(self):
        return len(self.lam)

    def row_columns(self, i):
        """Columns of row i (0-based row index)."""
        return range(self.mu[i] + 1, self.lam[i] + 1)

    def column_rows(self, c):
        return [i for i in range(self.m) if self.mu[i] < c <= self.lam[i]]

    def columns(self):
        cells = [c for i in range(self.m) for c in self.row_columns(i)]
        if not cells:
            return range(0)
        return range(min(cells), max(cells) + 1)

    def size(self):
        return sum(max(0, l - u) for l, u in zip(self.lam, self.mu))


@dataclass(frozen=True)
class AltTableau:
    shape: TableauShape
    rows: tuple

    def entry(self, i, c):
        return self.rows[i][c - self.shape.mu[i] - 1]

    def weight(self):
        w = MultiPoly.const(1)
        for i, row in enumerate(self.rows):
            for c, a in zip(self.shape.row_columns(i), row):
                w = w * MultiPoly.var("A" if c % 2 == 0 else "V", a)
        return w

    def render(self):
        """Rows top to bottom; cells aligned by column, blanks left of mu."""
        cols = self.shape.columns()
        if not cols:
            return ""
        wd = max((len(str(a)) for r in self.rows for a in r), default=1)
        lines = []
        for i, row in enumerate(self.rows):
            cells = []
            for c in cols:
                if self.shape.mu[i] < c <= self.shape.lam[i]:
                    cells.append(str(self.entry(i, c)).rjust(wd))
                else:
                    cells.append(" " * wd)
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)


def _pair_ok(c, col_rows, left, next_rows, right):
    """Conditions between column c (values left) and column c+1 (values right)."""
    lv = dict(zip(col_rows, left))
    rv = dict(zip(next_rows, right))
    for i, a in lv.items():
        if i in rv:
            b = rv[i]
            if c % 2 == 1 and a > b:
                return False
            if c % 2 == 0 and a < b:
                return False
    if c % 2 == 0:
        # a[i+1][c] < a[i][c+1]
        for i, b in rv.items():
            if i + 1 in lv and not lv[i + 1] < b:
                return False
    else:
        # a[i][c] > a[i+1][c+1]
        for i, a in lv.items():
            if i + 1 in rv and not a > rv[i + 1]:
                return False
    return True


def _col_states(shape, c, k, flags, extra):
    rows = shape.column_rows(c)
    ranges = []
    for i in rows:
        lo, hi = 1, k
        if extra is not None:
            lo, hi = extra(i, c, lo, hi)
        vals = range(lo, hi + 1)
        if flags is not None:
            r, s = flags
            if c == shape.mu[i] + 1:
                vals = [v for v in vals if v == r[i]]
            if c == shape.lam[i]:
                vals = [v for v in vals if v == s[i]]
        ranges.append(list(vals))
    return rows, [tuple(v) for v in product(*ranges)]


def _col_weight(c, vals, weighted):
    if not weighted:
        return 1
    w = MultiPoly.const(1)
    fam = "A" if c % 2 == 0 else "V"
    for a in vals:
        w = w * MultiPoly.var(fam, a)
    return w


def is_alt_tableau(t, k, flags=None):
    sh = t.shape
    for i, row in enumerate(t.rows):
        if len(row) != max(0, sh.lam[i] - sh.mu[i]):
            return False
        if any(not 1 <= a <= k for a in row):
            return False
    for c in sh.columns():
        if c + 1 > sh.columns()[-1]:
            break
        r1, r2 = sh.column_rows(c), sh.column_rows(c + 1)
        if not _pair_ok(c, r1, [t.entry(i, c) for i in r1], r2, [t.entry(i, c + 1) for i in r2]):
            return False
    if flags is not None:
        r, s = flags
        for i, row in enumerate(t.rows):
            if row and (row[0] != r[i] or row[-1] != s[i]):
                return False
    return True


def enumerate_alt_tableaux(shape, k, flags=None, extra=None):
    """Every tableau of the shape with entries in [1, k] (column by column)."""
    cols = list(shape.columns())
    if not cols:
        yield AltTableau(shape, tuple(() for _ in range(shape.m)))
        return
    states = [_col_states(shape, c, k, flags, extra) for c in cols]

    def rec(idx, chosen):
        if idx == len(cols):
            rows = [[] for _ in range(shape.m)]
            for (rws, _), vals in zip(states, chosen):
                for i, a in zip(rws, vals):
                    rows[i].append(a)
            yield AltTableau(shape, tuple(tuple(r) for r in rows))
            return
        rws, vs = states[idx]
        for v in vs:
            if idx and not _pair_ok(cols[idx - 1], states[idx - 1][0], chosen[-1], rws, v):
                continue
            yield from rec(idx + 1, chosen + [v])

    yield from rec(0, [])


def tableau_gf(shape, k, flags=None, weighted=False, extra=None):
    """Count (or w_AV-weighted sum) of tableaux by column transfer."""
    cols = list(shape.columns())
    if not cols:
        return MultiPoly.const(1) if weighted else 1
    zero = MultiPoly() if weighted else 0
    rows0, vs0 = _col_states(shape, cols[0], k, flags, extra)
    cur = {v: _col_weight(cols[0], v, weighted) for v in vs0}
    prev_rows = rows0
    for c in cols[1:]:
        rws, vs = _col_states(shape, c, k, flags, extra)
        nxt = {}
        for v in vs:
            acc = zero
            for u, w in cur.items():
                if _pair_ok(c - 1, prev_rows, u, rws, v):
                    acc = acc + w
            if acc != zero:
                nxt[v] = acc * _col_weight(c, v, weighted)
        cur, prev_rows = nxt, rws
    total = zero
    for w in cur.values():
        total = total + w
    return total


def _altseq_entry(length, k, r=None, s=None, weighted=False):
    if weighted:
        return weighted_altseq_poly(length, k, r, s, empty_convention=True)
    if length == -1:
        return 1
    if length < -1:
        return 0
    return count_altseq(length, k, r, s)


def tableau_gf_determinant(shape, k, flags=None, weighted=False):
    """det(GF(A_{lam_j - mu_i}(r_i -> s_j)))_{i,j}; length -1 counts one empty sequence."""
    m = shape.m
    M = []
    for i in range(m):
        row = []
        for j in range(m):
            length = shape.lam[j] - shape.mu[i]
            if flags is None:
                row.append(_altseq_entry(length, k, weighted=weighted))
            else:
                r, s = flags
                if length <= 0:
                    row.append(_altseq_entry(length, k, weighted=weighted) if length == -1 else
                               (MultiPoly() if weighted else 0))
                else:
                    row.append(_altseq_entry(length, k, r[i], s[j], weighted))
        M.append(row)
    return det(M)


# path families and the marking construction

@dataclass(frozen=True)
class NonintersectingFamily:
    """Paths P_0..P_{k-1}, each given as (x_start, UpDownPath)."""
    paths: tuple

    def points(self, i):
        x0, p = self.paths[i]
        return [(x0 + t, h) for t, h in enumerate(p.heights())]

    def is_nonintersecting(self):
        seen = set()
        for i in range(len(self.paths)):
            pts = set(self.points(i))
            if pts & seen:
                return False
            seen |= pts
        return True

    def weight(self, scheme="BAV"):
        w = MultiPoly.const(1)
        for _, p in self.paths:
            w = w * path_weight(p, scheme)
        return w


@dataclass(frozen=True)
class Setting:
    which: str
    n: int
    k: int
    m: int
    bound: int
    starts: tuple
    ends: tuple
    x_lo: int
    x_hi: int
    region: object
    shape: TableauShape
    col_offset: int          # tableau column = x + col_offset
    order: tuple             # path indices from bottom to top
    pre: object = None       # height of path i at x_lo - 1 (forced part)
    post: object = None      # height of path i at x_hi + 1
    flags: tuple = None
    entry_bound: int = 0
    extra: object = None

    def in_region(self, x, y):
        return 0 <= y <= self.bound and self.x_lo <= x <= self.x_hi and self.region(x, y)


def complement(vals, total):
    return tuple(v for v in range(1, total + 1) if v not in set(vals))


def setting(which, n, k, m, r=None, s=None):
    K = 2 * k + 2 * m - 1
    if which == "trapezoidal":
        starts = tuple((-2 * i, 0) for i in range(k))
        ends = tuple((2 * n + 4 * m + 2 * i - 2, 0) for i in range(k))
        lam = tuple(2 * n + 2 * m + 2 * i - 5 for i in range(1, m + 1))
        mu = tuple(2 * m - 2 * i for i in range(1, m + 1))
        extra = None
        if n == 0 and m >= 2:
            # row 1 is empty; every entry of row 2 stays below k + m
            def extra(i, c, lo, hi, _b=k + m - 1):
                return (lo, min(hi, _b)) if i == 1 else (lo, hi)
        return Setting(
            which, n, k, m, K, starts, ends, 2, 2 * n + 4 * m - 4,
            lambda x, y: y <= x + 2 * k - 2 and x + y <= 2 * n + 4 * m + 2 * k - 4,
            TableauShape(lam, mu), -1, tuple(range(k)),
            pre=lambda i: 2 * i + 1, post=lambda i: 2 * i + 1,
            entry_bound=k + m, extra=extra)
    if which == "rhomboidal":
        starts = tuple((2 * i, 0) for i in range(k))
        ends = tuple((2 * n + 2 * m + 2 * k + 2 * i - 1, K) for i in range(k))
        lam = tuple(2 * n + 2 * m - 2 * i for i in range(1, m + 1))
        mu = tuple(2 * m - 2 * i for i in range(1, m + 1))
        return Setting(
            which, n, k, m, K, starts, ends, 2 * k, 2 * n + 2 * m + 2 * k - 3,
            lambda x, y: y <= x <= y + 2 * n + 2 * k - 2,
            TableauShape(lam, mu), 1 - 2 * k, tuple(range(k - 1, -1, -1)),
            pre=lambda i: 2 * k - 2 * i - 1, post=lambda i: K - 2 * i - 1,
            entry_bound=k + m)
    if which in ("rect_odd", "rect_even"):
        if r is None or s is None or len(r) != k or len(s) != k:
            raise AnchorMismatch("rectangular settings need k start and k end levels")
        if list(r) != sorted(set(r)) or list(s) != sorted(set(s)):
            raise AnchorMismatch("start and end levels must be strictly increasing")
        if not all(1 <= v <= k + m for v in tuple(r) + tuple(s)):
            raise AnchorMismatch(f"levels must lie in [1, {k + m}]")
        rb, sb = complement(r, k + m), complement(s, k + m)
        odd = which == "rect_odd"
        length = 2 * n if odd else 2 * n - 1
        if length < 0:
            raise AnchorMismatch("rect_even needs n >= 1")
        starts = tuple((0, 2 * v - 2) for v in r)
        ends = tuple((length, 2 * v - 2 if odd else 2 * v - 1) for v in s)
        width = length + 1
        lam = tuple(width for _ in range(m))
        mu = tuple(0 for _ in range(m))
        flags = (tuple(rb[m - 1 - i] for i in range(m)), tuple(sb[m - 1 - i] for i in range(m)))
        return Setting(
            which, n, k, m, K, starts, ends, 0, length, lambda x, y: True,
            TableauShape(lam, mu), 1, tuple(range(k)), flags=flags, entry_bound=k + m)
    raise ValueError(f"unknown setting {which!r}")


def _label(y):
    return (y + 2) // 2


def _unlabel(x, a):
    return 2 * (a - 1) if x % 2 == 0 else 2 * a - 1


def _check_family(st, fam):
    if len(fam.paths) != len(st.starts):
        raise AnchorMismatch(f"expected {len(st.starts)} paths")
    for i, (x0, p) in enumerate(fam.paths):
        pts = fam.points(i)
        if pts[0] != st.starts[i] or pts[-1] != st.ends[i]:
            raise AnchorMismatch(f"path {i} runs {pts[0]} -> {pts[-1]}, "
                                 f"expected {st.starts[i]} -> {st.ends[i]}")
        if not p.is_valid(st.bound):
            raise AnchorMismatch(f"path {i} leaves the strip [0, {st.bound}]")
    if not fam.is_nonintersecting():
        raise NotNonintersecting("paths share a lattice point")


def paths_to_tableau(st, fam):
    _check_family(st, fam)
    occupied = set()
    for i in range(len(fam.paths)):
        occupied |= set(fam.points(i))
    rows = [[] for _ in range(st.shape.m)]
    for x in range(st.x_lo, st.x_hi + 1):
        labels = [_label(y) for y in range(x % 2, st.bound + 1, 2)
                  if st.in_region(x, y) and (x, y) not in occupied]
        c = x + st.col_offset
        rws = sorted(st.shape.column_rows(c), reverse=True)
        if len(rws) != len(labels):
            raise AnchorMismatch(f"column {c} has {len(labels)} marks for {len(rws)} rows")
        for i, a in zip(rws, labels):
            rows[i].append(a)
    return AltTableau(st.shape, tuple(tuple(r) for r in rows))


def tableau_to_paths(st, t):
    """Rebuild the family: at each abscissa, unmarked region points are path points."""
    k = len(st.starts)
    heights = {}
    for x in range(st.x_lo, st.x_hi + 1):
        c = x + st.col_offset
        marked = {_unlabel(x, t.entry(i, c)) for i in st.shape.column_rows(c)}
        occ = [y for y in range(x % 2, st.bound + 1, 2) if st.in_region(x, y) and y not in marked]
        if len(occ) != k:
            raise AnchorMismatch(f"abscissa {x} leaves {len(occ)} points for {k} paths")
        for rank, i in enumerate(st.order):
            heights[(i, x)] = occ[rank]
    paths = []
    for i in range(k):
        (xs, ys), (xe, ye) = st.starts[i], st.ends[i]
        hs = {xs: ys, xe: ye}
        for x in range(st.x_lo, st.x_hi + 1):
            hs[x] = heights[(i, x)]
        if st.pre is not None and xs < st.x_lo:
            h = st.pre(i)
            for x in range(xs, st.x_lo):
                hs[x] = ys + (x - xs)
            if hs[st.x_lo - 1] != h:
                raise AnchorMismatch("forced start of a path is inconsistent")
        if st.post is not None and xe > st.x_hi:
            h = st.post(i)
            step = 1 if ye > h else -1
            for x in range(st.x_hi + 1, xe + 1):
                hs[x] = h + step * (x - st.x_hi - 1)
        steps = []
        for x in range(xs, xe):
            d = hs[x + 1] - hs[x]
            if d not in (UP, DOWN):
                raise AnchorMismatch(f"path {i} would jump by {d} at x={x}")
            steps.append(d)
        paths.append((xs, UpDownPath(ys, steps)))
    fam = NonintersectingFamily(tuple(paths))
    _check_family(st, fam)
    return fam


def enumerate_families(st):
    """Brute force: all non-intersecting families for a setting.

    All paths sweep left to right together; a family is kept when no two
    paths ever share a lattice point.
    """
    k = len(st.starts)
    x_min = min(x for x, _ in st.starts)
    x_max = max(x for x, _ in st.ends)
    out = []

    def ok(i, x, h):
        xe, ye = st.ends[i]
        return 0 <= h <= st.bound and abs(h - ye) <= xe - x

    def rec(x, hist):
        hs = hist[-1]
        if x == x_max:
            if any(hist[xe - x_min][i] != ye for i, (xe, ye) in enumerate(st.ends)):
                return
            fam = []
            for i in range(k):
                xs, ys = st.starts[i]
                heights = [hist[t][i] for t in range(xs - x_min, st.ends[i][0] - x_min + 1)]
                steps = [heights[t + 1] - heights[t] for t in range(len(heights) - 1)]
                fam.append((xs, UpDownPath(ys, steps)))
            out.append(NonintersectingFamily(tuple(fam)))
            return
        options = []
        for i in range(k):
            (xs, ys), (xe, _) = st.starts[i], st.ends[i]
            if x + 1 == xs:
                options.append([ys])
            elif xs <= x < xe:
                options.append([h for h in (hs[i] + 1, hs[i] - 1) if ok(i, x + 1, h)])
            else:
                options.append([None])
        for choice in product(*options):
            live = [h for h in choice if h is not None]
            if len(set(live)) == len(live):
                rec(x + 1, hist + [choice])

    rec(x_min, [tuple(ys if xs == x_min else None for xs, ys in st.starts)])
    return out


def setting_tableaux_gf(st, weighted=False):
    return tableau_gf(st.shape, st.entry_bound, st.flags, weighted, st.extra)


def enumerate_setting_tableaux(st):
    return list(enumerate_alt_tableaux(st.shape, st.entry_bound, st.flags, st.extra))


# weight relations between a family and its tableau

def _A(i):
    return MultiPoly.var("A", i)


def _V(i):
    return MultiPoly.var("V", i)


def _prod(lo, hi_excl, f):
    from .multipoly import extended_product
    return extended_product(lo, hi_excl, f)


def weight_prefactor(st, printed=False):
    """Monomial c with c * w_BAV(family) = w_AV(tableau).

    In the trapezoidal case the A-exponents are positive, and for n = 0 one
    more factor A_{k+m} is needed.  printed=True gives the variant with
    negated A-exponents and no n = 0 factor, which does not satisfy the relation.
    """
    n, k, m = st.n, st.k, st.m
    K = k + m
    out = MultiPoly.const(1)
    if st.which == "trapezoidal":
        sgn = -1 if printed else 1
        out = _V(1) ** (-k)
        for i in range(1, K + 1):
            out = out * _A(i) ** (sgn * (n + 2 * m + 2 * k - 2 * i - 1)) * _V(i) ** (n + 2 * m + 2 * k - 2 * i)
        if n == 0 and not printed:
            out = out * _A(K)
        return out
    if st.which == "rhomboidal":
        for i in range(1, K + 1):
            out = out * _A(i) ** n * _V(i) ** n
        return out
    r = [(y + 2) // 2 for _, y in st.starts]
    s_odd = st.which == "rect_odd"
    s = [(y + 2) // 2 if s_odd else (y + 1) // 2 for _, y in st.ends]
    if s_odd:
        for i in range(1, K + 1):
            out = out * _A(i) ** n * _V(i) ** (n + 1)
        for rj, sj in zip(r, s):
            out = out * _V(sj).inverse() * _prod(rj, sj, lambda i: _A(i) * _V(i)).inverse()
        return out
    for i in range(1, K + 1):
        out = out * _A(i) ** n * _V(i) ** n
    for rj, sj in zip(r, s):
        out = out * _prod(rj, sj + 1, lambda i: _A(i) * _V(i)).inverse()
    return out


# plane partitions

def tableau_to_plane_partition(t):
    """Subtract b from the b-th row from the bottom and lay each row out as a
    zigzag strip; returns {(row, col): value} with rows and columns from 1."""
    sh = t.shape
    m = sh.m
    raw = {}
    for i in range(m):
        b = m - i
        for c in sh.row_columns(i):
            v = t.entry(i, c) - b
            tt = (c + 1) // 2
            if c % 2:
                cell = (1 - tt - (b - 1), tt - (b - 1))
            else:
                cell = (-tt - (b - 1), tt - (b - 1))
            raw[cell] = v
    if not raw:
        return {}
    top = min(r for r, _ in raw)
    left = min(c for _, c in raw)
    return {(r - top + 1, c - left + 1): v for (r, c), v in raw.items()}


def is_plane_partition(pp):
    for (r, c), v in pp.items():
        if (r, c + 1) in pp and pp[(r, c + 1)] > v:
            return False
        if (r + 1, c) in pp and pp[(r + 1, c)] > v:
            return False
    return True


def render_plane_partition(pp):
    if not pp:
        return ""
    R = max(r for r, _ in pp)
    C = max(c for _, c in pp)
    wd = max(len(str(v)) for v in pp.values())
    lines = []
    for r in range(1, R + 1):
        lines.append(" ".join(str(pp[(r, c)]).rjust(wd) if (r, c) in pp else " " * wd
                              for c in range(1, C + 1)).rstrip())
    return "\n".join(lines)


def count_plane_partitions(outer, inner, k):
    """Plane partitions of skew shape outer/inner with entries in [0, k] (row transfer)."""
    rows = [(inner[i] if i < len(inner) else 0, outer[i]) for i in range(len(outer))]

    def row_fillings(lo, hi, above):
        out = []

        def rec(c, prev, acc):
            if c == hi:
                out.append(tuple(acc))
                return
            cap = prev
            if above is not None and above[0] <= c < above[1]:
                cap = min(cap, above[2][c - above[0]])
            for v in range(cap + 1):
                acc.append(v)
                rec(c + 1, v, acc)
                acc.pop()

        rec(lo, k, [])
        return out

    states = {None: 1}
    for lo, hi in rows:
        nxt = {}
        for st, cnt in states.items():
            above = st
            for f in row_fillings(lo, hi, above):
                key = (lo, hi, f)
                nxt[key] = nxt.get(key, 0) + cnt
        states = nxt
    return sum(states.values())


def plane_partition_shape(which, n, m):
    """(outer, inner) partitions for the trapezoidal and rhomboidal cases."""
    if which == "trapezoidal":
        outer = list(range(n + 2 * m - 2, 0, -1))
        inner = list(range(n - 2, 0, -1)) + [0] * (2 * m)
        return outer, inner[:len(outer)]
    if which == "rhomboidal":
        outer = [n] * (2 * m) + list(range(n - 1, 0, -1))
        inner = list(range(n - 1, 0, -1)) + [0] * (2 * m)
        return outer, inner[:len(outer)]
    raise ValueError(which)


def _binom(a, b):
    if a < 0 or b < 0:
        return 0
    return comb(a, b)


def binomial_det(which, n, k, m):
    if which == "trapezoidal":
        size = n + 2 * m - 2
        M = [[_binom(n + 2 * m - 1 - i - max(0, n - 1 - j) + k, k + i - j)
              for j in range(1, size + 1)] for i in range(1, size + 1)]
    elif which == "rhomboidal":
        size = n + 2 * m - 1
        M = [[_binom(min(n, n + 2 * m - i) - max(0, n - j) + k, k + i - j)
              for j in range(1, size + 1)] for i in range(1, size + 1)]
    else:
        raise ValueError(which)
    return det(M)

"""Bounded up-down paths and three-step (Motzkin) paths.

Counts and weight polynomials come from a transfer-matrix DP over heights;
closed-form generating functions come from the orthogonal polynomials in
orthopoly.  Negative indices are reached through the reciprocal transform
of the generating function, i.e. by running the linear recurrence backwards.
"""

from fractions import Fraction
from functools import lru_cache

from .exact import RatFunc, UniPoly, linrec_eval, linrec_from_ratfunc, NonExtendable
from .multipoly import MultiPoly, XRatFunc, bav_rules, specialize, xratfunc_series
from .orthopoly import motzkin_p, poly_p, shift_x, u_half

UP, DOWN, LEVEL = 1, -1, 0

SCHEMES = ("unweighted", "B", "BAV", "area", "motzkin")


class BoundViolation(ValueError):
    pass


def _check(k, r, s):
    if k < 0:
        raise BoundViolation(f"bound k={k} is negative")
    for h in (r, s):
        if h < 0 or h > k:
            raise BoundViolation(f"height {h} outside [0, {k}]")


class UpDownPath:
    """A start height plus a step sequence (+1, -1, and 0 for level steps)."""

    __slots__ = ("start", "steps")

    def __init__(self, start, steps):
        self.start = start
        self.steps = tuple(steps)

    @classmethod
    def from_string(cls, start, text):
        table = {"U": UP, "D": DOWN, "L": LEVEL}
        return cls(start, [table[c] for c in text])

    def heights(self):
        h = [self.start]
        for st in self.steps:
            h.append(h[-1] + st)
        return h

    @property
    def end(self):
        return self.start + sum(self.steps)

    def __len__(self):
        return len(self.steps)

    def is_valid(self, k):
        return all(0 <= h <= k for h in self.heights())

    def __eq__(self, other):
        return isinstance(other, UpDownPath) and (self.start, self.steps) == (other.start, other.steps)

    def __hash__(self):
        return hash((self.start, self.steps))

    def __str__(self):
        return "".join({UP: "U", DOWN: "D", LEVEL: "L"}[s] for s in self.steps)

    def __repr__(self):
        return f"UpDownPath({self.start}, {str(self)!r})"


def enumerate_paths(n, k, r, s, level=False):
    """All paths of length n from height r to s inside [0, k] (brute force)."""
    alphabet = (UP, DOWN, LEVEL) if level else (UP, DOWN)
    out = []

    def rec(h, steps):
        if len(steps) == n:
            if h == s:
                out.append(UpDownPath(r, steps))
            return
        left = n - len(steps)
        if abs(h - s) > left:
            return
        for st in alphabet:
            h2 = h + st
            if 0 <= h2 <= k:
                steps.append(st)
                rec(h2, steps)
                steps.pop()

    if 0 <= r <= k:
        rec(r, [])
    return out


# plain counts

@lru_cache(maxsize=None)
def _count_rows(k, r, n_max, level):
    rows = []
    vec = [0] * (k + 1)
    vec[r] = 1
    rows.append(tuple(vec))
    for _ in range(n_max):
        new = [0] * (k + 1)
        for h, c in enumerate(vec):
            if not c:
                continue
            if h < k:
                new[h + 1] += c
            if h > 0:
                new[h - 1] += c
            if level:
                new[h] += c
        vec = new
        rows.append(tuple(vec))
    return rows


def count_paths(n, k, r, s):
    _check(k, r, s)
    if n < 0:
        raise ValueError("use path_count_negative for negative lengths")
    return _count_rows(k, r, n, False)[n][s]


def motzkin_count(n, k, r=0, s=0):
    _check(k, r, s)
    return _count_rows(k, r, n, True)[n][s]


def dyck_bounded(n, k):
    """D_n^{(k)} in the sense used with Hankel determinants: C_{n+k}^{(k)}(0 -> k)."""
    return count_paths(n + k, k, 0, k)


def sum_over_endpoints(n, k):
    """a(n, k): paths of length n from 0 inside [0, k], any end height."""
    return sum(count_paths(n, k, 0, s) for s in range(k + 1))


# weighted counts

def _step_weights(scheme):
    one = MultiPoly.const(1)
    if scheme == "unweighted":
        return (lambda h: one), (lambda h: one), None
    if scheme == "B":
        return (lambda h: one), (lambda h: MultiPoly.var("B", h)), None
    if scheme == "BAV":
        rule = bav_rules()["B"]
        return (lambda h: one), rule, None
    if scheme == "area":
        q = MultiPoly.var("Q")
        return (lambda h: one), (lambda h: q ** (h - 1)), None
    if scheme == "motzkin":
        return ((lambda h: one), (lambda h: MultiPoly.var("V", h + 1)),
                (lambda h: MultiPoly.var("A", h + 1)))
    raise ValueError(f"unknown weight scheme {scheme!r}")


def weighted_path_table(n_max, k, r, scheme="B", level=None):
    """rows[n][s] = weight polynomial of all length-n paths from r to s."""
    _check(k, r, r)
    up_w, down_w, level_w = _step_weights(scheme)
    if level is None:
        level = scheme == "motzkin"
    if level and level_w is None:
        level_w = lambda h: MultiPoly.const(1)
    ups = [up_w(h) for h in range(k + 1)]
    downs = [down_w(h) if h > 0 else None for h in range(k + 1)]
    levels = [level_w(h) for h in range(k + 1)] if level else None
    vec = [MultiPoly() for _ in range(k + 1)]
    vec[r] = MultiPoly.const(1)
    rows = [vec]
    for _ in range(n_max):
        new = [MultiPoly() for _ in range(k + 1)]
        for h, c in enumerate(vec):
            if c.is_zero():
                continue
            if h < k:
                new[h + 1] = new[h + 1] + c * ups[h]
            if h > 0:
                new[h - 1] = new[h - 1] + c * downs[h]
            if level:
                new[h] = new[h] + c * levels[h]
        vec = new
        rows.append(vec)
    return rows


def weighted_path_poly(n, k, r, s, scheme="B"):
    _check(k, r, s)
    return weighted_path_table(n, k, r, scheme)[n][s]


def path_weight(path, scheme="B"):
    up_w, down_w, level_w = _step_weights(scheme)
    w = MultiPoly.const(1)
    h = path.start
    for st in path.steps:
        if st == UP:
            w = w * up_w(h)
        elif st == DOWN:
            w = w * down_w(h)
        else:
            w = w * (level_w(h) if level_w else MultiPoly.const(1))
        h += st
    return w


def path_area(path):
    """Full tilted unit squares between a path from 0 to 0 and the zigzag floor."""
    hs = path.heights()
    twice_area = sum(hs[i] + hs[i + 1] for i in range(len(path)))
    return (twice_area - len(path)) // 4


# closed forms

def _rev(p, deg):
    return p.reverse(deg)


def path_gf_closed(k, r, s, scheme="unweighted"):
    """Generating function sum_n GF(paths of length n from r to s) x^n.

    For B-type weights:
      r <= s: x^(s-r) P~_r * T^(s+1) P~_(k-s) / P~_(k+1)
      r >= s: B_(s+1)..B_r x^(r-s) P~_s * T^(r+1) P~_(k-r) / P~_(k+1)
    where P~_n(x) = x^n P_n(1/x).  The unweighted case sets every B_i to 1.
    """
    _check(k, r, s)
    if scheme == "motzkin":
        return motzkin_gf_closed(k, r, s)
    lo, hi = min(r, s), max(r, s)
    num = _rev(poly_p(lo), lo) * _rev(shift_x(poly_p(k - hi), ("B",), hi + 1), k - hi)
    num = num.shift(hi - lo)
    if r > s:
        pre = MultiPoly.const(1)
        for i in range(s + 1, r + 1):
            pre = pre * MultiPoly.var("B", i)
        num = num * pre
    den = _rev(poly_p(k + 1), k + 1)
    f = XRatFunc(num, den)
    return _apply_scheme(f, scheme)


def _apply_scheme(f, scheme):
    if scheme == "B":
        return f
    if scheme == "unweighted":
        return f.map_coeffs(lambda c: specialize(c, {"B": lambda i: 1}))
    if scheme == "BAV":
        rules = bav_rules()
        return f.map_coeffs(lambda c: specialize(c, rules))
    if scheme == "area":
        q = MultiPoly.var("Q")
        return f.map_coeffs(lambda c: specialize(c, {"B": lambda i: q ** (i - 1)}))
    raise ValueError(f"unknown weight scheme {scheme!r}")


def path_gf_unweighted(k, r, s):
    """Chebyshev-quotient closed form as a univariate RatFunc."""
    _check(k, r, s)
    lo, hi = min(r, s), max(r, s)
    num = u_half(lo).reverse(lo) * u_half(k - hi).reverse(k - hi) * UniPoly.monomial(hi - lo)
    den = u_half(k + 1).reverse(k + 1)
    return RatFunc(num, den)


def motzkin_gf_closed(k, r, s):
    _check(k, r, s)
    lo, hi = min(r, s), max(r, s)
    num = _rev(motzkin_p(lo), lo) * _rev(shift_x(motzkin_p(k - hi), ("A", "V"), hi + 1), k - hi)
    num = num.shift(hi - lo)
    if r > s:
        pre = MultiPoly.const(1)
        for i in range(s + 1, r + 1):
            pre = pre * MultiPoly.var("V", i + 1)
        num = num * pre
    den = _rev(motzkin_p(k + 1), k + 1)
    return XRatFunc(num, den)


def motzkin_gf_unweighted(k):
    """U_k((1-x)/2x) / (x U_{k+1}((1-x)/2x)), cleared of denominators."""
    from .orthopoly import chebyshev_u
    # x^n U_n((1-x)/(2x)) = sum_j c_j (1-x)^j (2x)^(-j) x^n, taken as a polynomial
    def cleared(n):
        u = chebyshev_u(n)
        out = UniPoly()
        one_minus = UniPoly([1, -1])
        for j, c in enumerate(u.coeffs):
            out = out + (one_minus ** j) * UniPoly.monomial(n - j, c / 2 ** j)
        return out
    return RatFunc(cleared(k), cleared(k + 1))


def ones(f):
    """Collapse an XRatFunc with numeric-only coefficients to a RatFunc."""
    one = {fam: (lambda i: 1) for fam in ("A", "V", "B")}
    num = UniPoly(specialize(c, one).const_value() for c in f.num.coeffs)
    den = UniPoly(specialize(c, one).const_value() for c in f.den.coeffs)
    return RatFunc(num, den)


# negative indices

def path_linrec(k, r, s):
    return linrec_from_ratfunc(path_gf_unweighted(k, r, s))


def path_count_negative(n, k, r, s, corrected=False):
    """C_{-n}^{(k)}(r -> s) by backward continuation of the length sequence.

    For even k the case r = s = 0 (and, more generally, any improper
    generating function) needs corrected=True, which replaces C_0 by the
    value the recurrence predicts.
    """
    if n <= 0:
        raise ValueError("path_count_negative takes a positive n")
    rec = path_linrec(k, r, s)
    if rec.special and not corrected:
        raise NonExtendable(f"the length sequence for k={k}, r={r}, s={s} does not "
                            "satisfy its recurrence at length 0")
    return linrec_eval(rec, -n, extend_special=corrected)


def corrected_constant(k, r=0, s=0):
    """Value at length 0 predicted by the recurrence of C_n^{(k)}(r -> s), n >= 1."""
    rec = path_linrec(k, r, s)
    return linrec_eval(rec, 0, extend_special=True)


@lru_cache(maxsize=None)
def _reciprocal_gf(k, r, s, scheme):
    f = path_gf_closed(k, r, s, scheme)
    if not f.is_proper():
        raise NonExtendable(f"generating function for k={k}, r={r}, s={s} is not proper")
    return -f.reciprocal_variable()


def weighted_path_negative(n, k, r, s, scheme="B"):
    """GF(C_{-n}^{(k)}(r -> s); w) as a Laurent polynomial."""
    if n <= 0:
        raise ValueError("weighted_path_negative takes a positive n")
    return xratfunc_series(_reciprocal_gf(k, r, s, scheme), n)[n]


def dyck_bounded_negative(n, k):
    """D_{-n}^{(k)} = C_{-n+k}^{(k)}(0 -> k), continued backwards."""
    m = n - k
    if m > 0:
        return path_count_negative(m, k, 0, k)
    return Fraction(count_paths(-m, k, 0, k))


def path_value(n, k, r=0, s=0, corrected=False):
    """C_n^{(k)}(r -> s) for any integer n."""
    if n >= 0:
        return Fraction(count_paths(n, k, r, s))
    return path_count_negative(-n, k, r, s, corrected)


def weighted_path_value(n, k, r, s, scheme="B"):
    if n >= 0:
        return weighted_path_poly(n, k, r, s, scheme)
    return weighted_path_negative(-n, k, r, s, scheme)


def sum_over_endpoints_gf(k):
    """U_{k//2}(1/2x) (U_{(k+1)//2} + U_{(k-1)//2})(1/2x) / (x U_{k+1}(1/2x)), cleared."""
    a, b, c = k // 2, (k + 1) // 2, (k - 1) // 2
    ra = u_half(a).reverse(a)
    rb = u_half(b).reverse(b)
    rc = u_half(c).reverse(c) * UniPoly.monomial(b - c) if c >= 0 else UniPoly()
    num = ra * (rb + rc) * UniPoly.monomial(k - a - b)
    den = u_half(k + 1).reverse(k + 1)
    return RatFunc(num, den)


def endpoint_sum_value(n, k, corrected=False):
    """a(n, k) for any integer n; corrected=True replaces a(0, k) by the
    recurrence prediction when the generating function is improper."""
    if n >= 1 or (n == 0 and not corrected):
        return Fraction(sum_over_endpoints(n, k))
    rec = linrec_from_ratfunc(sum_over_endpoints_gf(k))
    if rec.special and not corrected:
        raise NonExtendable(f"a(n, {k}) does not satisfy its recurrence at n = 0")
    return linrec_eval(rec, n, extend_special=True)


def motzkin_value(n, k, corrected=False):
    """M_n^{(k)} for any integer n (backwards via the recurrence)."""
    if n > 0 or (n == 0 and not corrected):
        return Fraction(motzkin_count(n, k))
    rec = linrec_from_ratfunc(motzkin_gf_unweighted(k))
    if rec.special and not corrected:
        raise NonExtendable(f"M_n^({k}) does not satisfy its recurrence at n = 0")
    return linrec_eval(rec, n, extend_special=True)

"""Bounded alternating sequences a_1 <= a_2 >= a_3 <= a_4 >= ... in [1, k].

Entries in even positions are "tops" and carry A-weights, entries in odd
positions are "bottoms" and carry V-weights.
"""

from functools import lru_cache

from .exact import RatFunc, UniPoly
from .multipoly import MultiPoly, XPoly, XRatFunc, xratfunc_series
from .orthopoly import poly_q, reflect_x, shift_x, u_half


class BadBound(ValueError):
    pass


def is_alternating(seq, k=None):
    for i in range(len(seq) - 1):
        # position i+1 (1-based) odd -> next must be >=
        if i % 2 == 0 and seq[i] > seq[i + 1]:
            return False
        if i % 2 == 1 and seq[i] < seq[i + 1]:
            return False
    if k is not None and any(a < 1 or a > k for a in seq):
        return False
    return True


def enumerate_altseqs(n, k, r=None, s=None):
    """Brute-force list of alternating sequences of length n."""
    if k < 1:
        raise BadBound(f"bound k={k} must be positive")
    if n < 0:
        return [()] if n == -1 and r is None and s is None else []
    out = []

    def rec(seq):
        if len(seq) == n:
            if s is None or (seq and seq[-1] == s):
                out.append(tuple(seq))
            return
        pos = len(seq)
        if pos == 0:
            choices = [r] if r is not None else range(1, k + 1)
        elif pos % 2 == 1:
            choices = range(seq[-1], k + 1)
        else:
            choices = range(1, seq[-1] + 1)
        for a in choices:
            seq.append(a)
            rec(seq)
            seq.pop()

    rec([])
    return out


def altseq_weight(seq):
    w = MultiPoly.const(1)
    for i, a in enumerate(seq):
        w = w * MultiPoly.var("A" if i % 2 else "V", a)
    return w


@lru_cache(maxsize=None)
def _weighted_rows(k, r, n_max, weighted):
    """rows[n][a] = weight sum of length-n sequences (n >= 1) ending in a.

    r is 0 for "any start".
    """
    one = MultiPoly.const(1)
    V = [None] + [MultiPoly.var("V", a) if weighted else one for a in range(1, k + 1)]
    A = [None] + [MultiPoly.var("A", a) if weighted else one for a in range(1, k + 1)]
    rows = [None]
    if n_max < 1:
        return rows
    vec = [MultiPoly() for _ in range(k + 1)]
    for a in range(1, k + 1):
        if r == 0 or a == r:
            vec[a] = V[a]
    rows.append(vec)
    for n in range(2, n_max + 1):
        new = [MultiPoly() for _ in range(k + 1)]
        if n % 2 == 0:
            # new entry is a top: >= previous; cumulative sums from below
            acc = MultiPoly()
            for a in range(1, k + 1):
                acc = acc + vec[a]
                if not acc.is_zero():
                    new[a] = acc * A[a]
        else:
            acc = MultiPoly()
            for a in range(k, 0, -1):
                acc = acc + vec[a]
                if not acc.is_zero():
                    new[a] = acc * V[a]
        vec = new
        rows.append(vec)
    return rows


@lru_cache(maxsize=None)
def _count_rows(k, r, n_max):
    rows = [None]
    if n_max < 1:
        return rows
    vec = [0] + [1 if (r == 0 or a == r) else 0 for a in range(1, k + 1)]
    rows.append(vec)
    for n in range(2, n_max + 1):
        new = [0] * (k + 1)
        acc = 0
        rng = range(1, k + 1) if n % 2 == 0 else range(k, 0, -1)
        for a in rng:
            acc += vec[a]
            new[a] = acc
        vec = new
        rows.append(vec)
    return rows


def _validate(k, r, s):
    if k < 1:
        raise BadBound(f"bound k={k} must be positive")
    for v in (r, s):
        if v is not None and not 1 <= v <= k:
            raise BadBound(f"endpoint {v} outside [1, {k}]")


def count_altseq(n, k, r=None, s=None, empty_convention=False):
    """Number of alternating sequences of length n, optionally with a_1 = r, a_n = s.

    Length 0 counts the empty sequence when unconstrained.  Length -1 is
    zero unless empty_convention is set, in which case it is 1.
    """
    _validate(k, r, s)
    if n == -1:
        return 1 if empty_convention else 0
    if n < -1:
        return 0
    if n == 0:
        return 1 if r is None and s is None else 0
    vec = _count_rows(k, r or 0, n)[n]
    if s is None:
        return sum(vec)
    return vec[s]


def weighted_altseq_poly(n, k, r=None, s=None, empty_convention=False):
    _validate(k, r, s)
    if n == -1:
        return MultiPoly.const(1 if empty_convention else 0)
    if n < -1:
        return MultiPoly()
    if n == 0:
        return MultiPoly.const(1 if r is None and s is None else 0)
    vec = _weighted_rows(k, r or 0, n, True)[n]
    if s is None:
        out = MultiPoly()
        for a in range(1, k + 1):
            out = out + vec[a]
        return out
    return vec[s]


# closed forms, Chebyshev version

def _uh(n):
    return u_half(n)


def altseq_gf_unweighted(k, parity, r=None, s=None):
    """Closed form as a RatFunc.

    parity "odd":  sum_n |A_(2n+1)(r->s)| x^(2n), or with no endpoints
                   sum_(n>=1) |A_(2n-1)| x^(2n);
    parity "even": sum_n |A_(2n+2)(r->s)| x^(2n+1), or with no endpoints
                   sum_(n>=0) |A_(2n)| x^(2n+1).
    """
    _validate(k, r, s)
    x = UniPoly.x()
    den = _uh(2 * k)
    if r is None and s is None:
        if parity == "odd":
            return RatFunc(-x * _uh(2 * k - 1), den)
        return RatFunc(x * (-1) ** k, den)
    if r is None or s is None:
        raise ValueError("give both endpoints or neither")
    sign = (-1) ** (r + s + 1)
    if parity == "odd":
        lo, hi = min(r, s), max(r, s)
        num = x * _uh(2 * lo - 2) * _uh(2 * k + 1 - 2 * hi)
        if r == s:
            return RatFunc(1) - RatFunc(num, den)
        return RatFunc(num * sign, den)
    if r <= s:
        num = x * _uh(2 * r - 2) * _uh(2 * k - 2 * s)
    else:
        num = x * _uh(2 * s - 1) * _uh(2 * k - 2 * r + 1)
    return RatFunc(num * sign, den)


# closed forms, (A, V)-weighted version

def _V(i):
    return MultiPoly.var("V", i)


def _A(i):
    return MultiPoly.var("A", i)


def _tr(n, shift, refl):
    """T^shift R^(refl) Q_n."""
    p = poly_q(n)
    if refl is not None:
        p = reflect_x(p, refl)
    return shift_x(p, ("A", "V"), shift)


def altseq_gf_weighted(k, parity, r=None, s=None):
    _validate(k, r, s)
    x = XPoly.x()
    den = poly_q(2 * k)
    if r is None and s is None:
        if parity == "odd":
            return XRatFunc(-x * poly_q(2 * k - 1), den)
        return XRatFunc(x * (-1) ** k, den)
    if r is None or s is None:
        raise ValueError("give both endpoints or neither")
    sign = (-1) ** (r + s + 1)
    if parity == "odd":
        lo, hi = min(r, s), max(r, s)
        num = x * poly_q(2 * lo - 2) * _tr(2 * k + 1 - 2 * hi, hi - 1, k - hi + 1)
        if r == s:
            return XRatFunc(_V(r)) - XRatFunc(num * (_V(r) * _V(r)), den)
        return XRatFunc(num * (_V(r) * _V(s) * sign), den)
    if r <= s:
        num = x * poly_q(2 * r - 2) * _tr(2 * k - 2 * s, s, None)
    else:
        num = x * poly_q(2 * s - 1) * _tr(2 * k + 1 - 2 * r, r - 1, k - r + 1)
    return XRatFunc(num * (_V(r) * _A(s) * sign), den)


def altseq_gf_closed(k, parity, r=None, s=None, weighted=False):
    if weighted:
        return altseq_gf_weighted(k, parity, r, s)
    return altseq_gf_unweighted(k, parity, r, s)


def length_of_power(parity, constrained, power):
    """Sequence length paired with x^power in altseq_gf_closed."""
    if parity == "odd":
        return power + 1 if constrained else power - 1
    return power + 1 if constrained else power - 1


def cumulative_gf(k):
    """1 + sum_(n>=0) |A_n| x^(n+1), as a ratio of Chebyshev polynomials."""
    sgn = (-1) ** k
    num = -(_uh(k - 2) + _uh(k - 3) * sgn) if k >= 1 else UniPoly([1])
    den = _uh(k) + _uh(k - 1) * sgn
    return RatFunc(num, den)


def cumulative_gf_split(k):
    """The same series assembled from the odd and even length parts."""
    x = UniPoly.x()
    den = _uh(2 * k)
    return RatFunc(1) + RatFunc(x * (-1) ** k, den) - RatFunc(x * _uh(2 * k - 1), den)


def series_by_length(f, parity, constrained, max_len, weighted=False):
    """Map a closed-form series onto {length: coefficient}."""
    if weighted:
        coeffs = xratfunc_series(f, max_len + 1)
    else:
        from .exact import ratfunc_series
        coeffs = ratfunc_series(f, max_len + 1)
    out = {}
    for p, c in enumerate(coeffs):
        if (p % 2 == 0) != (parity == "odd"):
            continue
        n = length_of_power(parity, constrained, p)
        if 0 <= n <= max_len:
            out[n] = c
    return out

"""Exact univariate algebra over the rationals.

UniPoly is a dense polynomial in x, RatFunc a reduced quotient of two of
them, and LinRec a constant-coefficient linear recurrence that can be run
forwards and backwards.
"""

from fractions import Fraction
from itertools import zip_longest


class DenominatorVanishesAtZero(ValueError):
    pass


class NotProper(ValueError):
    pass


class NonExtendable(ValueError):
    pass


def _q(c):
    if isinstance(c, Fraction):
        return c
    return Fraction(c)


class UniPoly:
    """Dense polynomial, coefficients listed by increasing degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, deg, c=1):
        return cls([0] * deg + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly.const(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _poly(other)
        return UniPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-_poly(other))

    def __rsub__(self, other):
        return _poly(other) - self

    def __mul__(self, other):
        other = _poly(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = UniPoly([1])
        for _ in range(e):
            out = out * self
        return out

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.lead()
        quo = [Fraction(0)] * max(0, len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lead
            if c == 0:
                continue
            quo[i - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] -= c * b
        return UniPoly(quo), UniPoly(rem)

    def __floordiv__(self, other):
        return self.divmod(_poly(other))[0]

    def __mod__(self, other):
        return self.divmod(_poly(other))[1]

    def __call__(self, v):
        # Horner; v may be a number or another UniPoly / RatFunc
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def compose(self, inner):
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + UniPoly([c])
        return acc

    def scale_var(self, a):
        """p(a*x)."""
        a = _q(a)
        return UniPoly(c * a ** i for i, c in enumerate(self.coeffs))

    def reverse(self, deg=None):
        """x^deg * p(1/x); deg defaults to the degree."""
        if deg is None:
            deg = self.degree
        if deg < self.degree:
            raise ValueError("reverse degree below polynomial degree")
        return UniPoly(self[deg - i] for i in range(deg + 1))

    def is_even(self):
        return all(c == 0 for c in self.coeffs[1::2])

    def is_odd(self):
        return all(c == 0 for c in self.coeffs[0::2])

    def __str__(self):
        return _render(self.coeffs)

    def __repr__(self):
        return f"UniPoly({self})"


def _poly(p):
    return p if isinstance(p, UniPoly) else UniPoly.const(p)


def _fmt_coeff(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _render(coeffs, var="x"):
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = _fmt_coeff(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{_fmt_coeff(mag)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def poly_gcd(a, b):
    """Monic gcd (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a * UniPoly([1 / a.lead()])


class RatFunc:
    """num/den reduced; den scaled to constant term 1, or monic if den(0) = 0."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _poly(num)
        den = UniPoly([1]) if den is None else _poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if not g.is_zero() and g.degree > 0:
            num = num // g
            den = den // g
        if num.is_zero():
            den = UniPoly([1])
        s = den[0] if den[0] != 0 else den.lead()
        self.num = num * UniPoly([1 / s])
        self.den = den * UniPoly([1 / s])

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _rat(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_rat(other))

    def __rsub__(self, other):
        return _rat(other) - self

    def __mul__(self, other):
        other = _rat(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _rat(other)
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _rat(other) / self

    def reciprocal_variable(self):
        """The rational function f(1/x)."""
        d = max(self.num.degree, self.den.degree, 0)
        return RatFunc(self.num.reverse(d), self.den.reverse(d))

    def is_proper(self):
        return self.num.is_zero() or self.num.degree < self.den.degree

    def __str__(self):
        n, d = str(self.num), str(self.den)
        if d == "1":
            return n
        if len(self.num.coeffs) - self.num.coeffs.count(0) > 1:
            n = f"({n})"
        return f"{n}/({d})"

    def __repr__(self):
        return f"RatFunc({self})"


def _rat(f):
    return f if isinstance(f, RatFunc) else RatFunc(f)


def ratfunc_series(f, order):
    """Taylor coefficients of f at 0 up to x^order."""
    num, den = f.num, f.den
    d0 = den[0]
    if d0 == 0:
        raise DenominatorVanishesAtZero("denominator vanishes at x = 0")
    out = []
    for n in range(order + 1):
        acc = num[n]
        for i in range(1, min(n, den.degree) + 1):
            acc -= den[i] * out[n - i]
        out.append(acc / d0)
    return out


class LinRec:
    """a_n = c_1 a_{n-1} + ... + c_d a_{n-d} for n >= valid_from + d.

    initial_terms hold a_0, a_1, ...; entries below valid_from are outside
    the recurrence (special=True marks such a term, as for an improper GF).
    """

    __slots__ = ("coefficients", "initial_terms", "valid_from", "special")

    def __init__(self, coefficients, initial_terms, valid_from=0, special=False):
        self.coefficients = tuple(_q(c) for c in coefficients)
        self.initial_terms = tuple(_q(c) for c in initial_terms)
        self.valid_from = valid_from
        self.special = special
        if len(self.initial_terms) < valid_from + self.order:
            raise ValueError("not enough initial terms")

    @property
    def order(self):
        return len(self.coefficients)

    def __repr__(self):
        return (f"LinRec(c={list(map(str, self.coefficients))}, "
                f"init={list(map(str, self.initial_terms))}, valid_from={self.valid_from})")

    def corrected(self):
        """Replace the out-of-recurrence terms by their backward extension."""
        if self.valid_from == 0:
            return self
        vals = [linrec_eval(self, n, extend_special=True) for n in range(len(self.initial_terms))]
        return LinRec(self.coefficients, vals, 0, False)


def linrec_from_ratfunc(f):
    num, den = f.num, f.den
    if den[0] == 0:
        raise DenominatorVanishesAtZero("denominator vanishes at x = 0")
    d = den.degree
    if not num.is_zero() and num.degree > d:
        raise NotProper(f"numerator degree {num.degree} exceeds denominator degree {d}")
    coeffs = [-den[i] / den[0] for i in range(1, d + 1)]
    special = not num.is_zero() and num.degree == d and d >= 0
    valid_from = 1 if special else 0
    init = ratfunc_series(f, max(d + valid_from - 1, 0))
    return LinRec(coeffs, init, valid_from, special)


def linrec_eval(r, n, extend_special=False):
    """Value at any integer n, extending the recurrence backwards if needed.

    Indices below valid_from are the special constant itself unless
    extend_special is set, in which case they are the backward extension.
    """
    d = r.order
    vf = r.valid_from
    init = r.initial_terms
    if n >= 0 and (n >= vf or not extend_special) and n < len(init):
        return init[n]
    if n >= vf:
        if d == 0:
            return Fraction(0)
        window = list(init[len(init) - d:])
        idx = len(init)
        while idx <= n:
            nxt = sum(c * window[-1 - i] for i, c in enumerate(r.coefficients))
            window.append(nxt)
            window.pop(0)
            idx += 1
        return window[-1]
    # backward
    if d == 0:
        return Fraction(0)
    if r.coefficients[-1] == 0:
        raise NonExtendable("trailing recurrence coefficient is zero")
    if vf > 0 and not extend_special:
        raise NonExtendable(f"index {n} lies below the recurrence start {vf}; "
                            "the constant term is not governed by the recurrence")
    window = list(init[vf:vf + d])
    idx = vf  # window holds a_idx .. a_{idx+d-1}
    cs = r.coefficients
    while idx > n:
        # a_{idx+d-1} = sum_{i=1}^{d} c_i a_{idx+d-1-i}
        top = window[-1]
        acc = top - sum(cs[i - 1] * window[-1 - i] for i in range(1, d))
        prev = acc / cs[-1]
        window.pop()
        window.insert(0, prev)
        idx -= 1
    return window[0]


def negative_series(f, order):
    """Coefficients of x^1..x^order in -f(1/x), for proper f."""
    if not f.is_proper():
        raise NotProper("negative-index series needs a proper rational function")
    g = -f.reciprocal_variable()
    return ratfunc_series(g, order)[1:]

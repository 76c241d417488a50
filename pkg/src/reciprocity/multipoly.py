"""Sparse multivariate Laurent polynomials in indexed variable families.

Variables are q, y (loose) and A_i, V_i, B_i (indexed, i >= 1).  A monomial
key is a sorted tuple of (code, exponent) pairs, where the integer code
orders variables as q < y < A < V < B and then by index.  Exponents may be
negative; only monomials are invertible.

XPoly / XRatFunc are polynomials and rational functions in a further formal
variable x whose coefficients are MultiPoly values.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import zip_longest
import re

FAMILIES = ("Q", "Y", "A", "V", "B")
_RANK = {f: i for i, f in enumerate(FAMILIES)}
_STRIDE = 1 << 20


class IndexOutOfRange(ValueError):
    pass


class NonUnitFactor(ValueError):
    pass


class VarId(tuple):
    """(family, index); index is 0 for q and y."""

    def __new__(cls, family, index=0):
        if family not in _RANK:
            raise ValueError(f"unknown variable family {family!r}")
        if family in ("A", "V", "B") and index < 1:
            raise IndexOutOfRange(f"{family}_{index}: index must be >= 1")
        if family in ("Q", "Y"):
            index = 0
        return super().__new__(cls, (family, index))

    @property
    def family(self):
        return self[0]

    @property
    def index(self):
        return self[1]

    @property
    def code(self):
        return _RANK[self[0]] * _STRIDE + self[1]

    @staticmethod
    def from_code(code):
        return VarId(FAMILIES[code // _STRIDE], code % _STRIDE)

    def __str__(self):
        fam, i = self
        return fam.lower() if fam in ("Q", "Y") else f"{fam}{i}"


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


@lru_cache(maxsize=1 << 18)
def _kmul(a, b):
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            e = ea + eb
            if e:
                out.append((va, e))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


class MultiPoly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {k: _norm(c) for k, c in terms.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c):
        return cls._raw({(): _norm(c)} if c != 0 else {})

    @classmethod
    def var(cls, family, index=0, exp=1):
        v = VarId(family, index)
        if exp == 0:
            return cls.const(1)
        return cls._raw({((v.code, exp),): 1})

    @classmethod
    def monomial(cls, exps, c=1):
        """exps: iterable of (VarId or (family, index), exponent)."""
        d = {}
        for v, e in exps:
            v = v if isinstance(v, VarId) else VarId(*v)
            d[v.code] = d.get(v.code, 0) + e
        key = tuple(sorted((k, e) for k, e in d.items() if e))
        return cls._raw({key: _norm(c)} if c != 0 else {})

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def const_value(self):
        return self.terms.get((), 0)

    def is_unit(self):
        return len(self.terms) == 1

    def variables(self):
        out = set()
        for k in self.terms:
            for code, _ in k:
                out.add(VarId.from_code(code))
        return out

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other)
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, (XPoly, XRatFunc)):
            return NotImplemented
        other = _mp(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        t = dict(self.terms)
        for k, c in other.terms.items():
            v = t.get(k, 0) + c
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return MultiPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (XPoly, XRatFunc)):
            return NotImplemented
        return self + (-_mp(other))

    def __rsub__(self, other):
        return _mp(other) - self

    def __mul__(self, other):
        if isinstance(other, (XPoly, XRatFunc)):
            return NotImplemented
        if not isinstance(other, MultiPoly):
            if other == 0:
                return MultiPoly()
            other = _norm(Fraction(other)) if isinstance(other, Fraction) else other
            return MultiPoly._raw({k: _norm(c * other) for k, c in self.terms.items()})
        if not self.terms or not other.terms:
            return MultiPoly()
        t = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                k = _kmul(ka, kb)
                v = t.get(k, 0) + ca * cb
                if v:
                    t[k] = v
                else:
                    t.pop(k, None)
        return MultiPoly._raw({k: _norm(c) for k, c in t.items()})

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out = MultiPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self):
        if not self.is_unit():
            raise NonUnitFactor(f"{self} is not a monomial and has no inverse")
        (k, c), = self.terms.items()
        return MultiPoly._raw({tuple((v, -e) for v, e in k): _norm(1 / Fraction(c))})

    def __truediv__(self, other):
        if not isinstance(other, MultiPoly):
            return self * Fraction(1, 1) * (1 / Fraction(other))
        return self * other.inverse()

    def map_vars(self, fn):
        """Substitute each variable: fn(VarId) -> MultiPoly unit or polynomial."""
        out = MultiPoly()
        cache = {}
        for k, c in self.terms.items():
            term = MultiPoly.const(c)
            for code, e in k:
                key = (code, e)
                if key not in cache:
                    img = fn(VarId.from_code(code))
                    cache[key] = img ** e
                term = term * cache[key]
            out = out + term
        return out

    def evaluate(self, values):
        """values: dict VarId -> number (missing variables raise KeyError)."""
        tot = Fraction(0)
        for k, c in self.terms.items():
            t = Fraction(c)
            for code, e in k:
                t *= Fraction(values[VarId.from_code(code)]) ** e
            tot += t
        return _norm(tot)

    def sort_key(self):
        return sorted(self.terms.items())

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"MultiPoly({self})"


def _mp(p):
    return p if isinstance(p, MultiPoly) else MultiPoly.const(p)


def _fmt(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _key_order(item):
    k, _ = item
    return (sum(abs(e) for _, e in k), k)


def render(p):
    """Canonical text: terms by total degree, then by variable order."""
    if not p.terms:
        return "0"
    parts = []
    for k, c in sorted(p.terms.items(), key=_key_order):
        mono = "*".join(str(VarId.from_code(v)) + ("" if e == 1 else f"^{e}") for v, e in k)
        mag = abs(Fraction(c))
        if not mono:
            body = _fmt(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt(mag)}*{mono}"
        neg = c < 0
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


_TOKEN = re.compile(r"([A-Za-z])(\d*)(?:\^(-?\d+))?")


def parse(text):
    """Inverse of render for simple sums of monomials (used by the CLI)."""
    text = text.replace(" ", "")
    if not text or text == "0":
        return MultiPoly()
    out = MultiPoly()
    for chunk in re.split(r"(?<!\^)(?=[+-])", text):
        if not chunk:
            continue
        sign, term = (chunk[0], chunk[1:]) if chunk[0] in "+-" else ("+", chunk)
        coeff = Fraction(1)
        exps = []
        for f in term.split("*"):
            m = _TOKEN.fullmatch(f)
            if m and not f[0].isdigit():
                fam = m.group(1).upper()
                idx = int(m.group(2)) if m.group(2) else 0
                exps.append(((fam, idx), int(m.group(3) or 1)))
            else:
                coeff *= Fraction(f)
        out = out + MultiPoly.monomial(exps, -coeff if sign == "-" else coeff)
    return out


# variable-family operators

def shift_op(p, families=("B",), by=1):
    fams = set(families)

    def fn(v):
        if v.family in fams:
            return MultiPoly.var(v.family, v.index + by)
        return MultiPoly.var(v.family, v.index)

    return p.map_vars(fn)


def reflect_op(p, j):
    """A_i -> V_{j+1-i}, V_i -> A_{j+1-i}."""

    def fn(v):
        if v.family == "A":
            t = j + 1 - v.index
            if t < 1:
                raise IndexOutOfRange(f"A{v.index} reflected at j={j} leaves the range")
            return MultiPoly.var("V", t)
        if v.family == "V":
            t = j + 1 - v.index
            if t < 1:
                raise IndexOutOfRange(f"V{v.index} reflected at j={j} leaves the range")
            return MultiPoly.var("A", t)
        return MultiPoly.var(v.family, v.index)

    return p.map_vars(fn)


def specialize(p, rules):
    """rules: family -> callable(index) -> MultiPoly (or number).

    Families without a rule are left alone.
    """

    def fn(v):
        rule = rules.get(v.family)
        if rule is None:
            return MultiPoly.var(v.family, v.index)
        return _mp(rule(v.index))

    return p.map_vars(fn)


def bav_rules():
    """B_{2i-1} = 1/(A_i V_i), B_{2i} = 1/(A_i V_{i+1})."""

    def b(i):
        if i % 2:
            h = (i + 1) // 2
            return (MultiPoly.var("A", h) * MultiPoly.var("V", h)).inverse()
        h = i // 2
        return (MultiPoly.var("A", h) * MultiPoly.var("V", h + 1)).inverse()

    return {"B": b}


def extended_product(lower, upper_exclusive, factor):
    """prod_{i=lower}^{upper_exclusive-1} factor(i), with the reversed range
    read as the inverse product over upper_exclusive..lower-1."""
    if upper_exclusive >= lower:
        out = MultiPoly.const(1)
        for i in range(lower, upper_exclusive):
            f = _mp(factor(i))
            if not f.is_unit():
                raise NonUnitFactor(f"factor at index {i} is not a unit")
            out = out * f
        return out
    out = MultiPoly.const(1)
    for i in range(upper_exclusive, lower):
        out = out * _mp(factor(i)).inverse()
    return out


# polynomials in x with MultiPoly coefficients

class XPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_mp(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def from_unipoly(cls, u):
        return cls([MultiPoly.const(c) for c in u.coeffs])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return MultiPoly()

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            other = XPoly.const(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _xp(other)
        return XPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=MultiPoly()))

    __radd__ = __add__

    def __neg__(self):
        return XPoly(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-_xp(other))

    def __rsub__(self, other):
        return _xp(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            return XPoly(c * other for c in self.coeffs)
        other = _xp(other)
        if not self.coeffs or not other.coeffs:
            return XPoly()
        out = [MultiPoly() for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return XPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = XPoly([1])
        for _ in range(e):
            out = out * self
        return out

    def shift(self, d):
        """Multiply by x^d (d >= 0)."""
        return XPoly([MultiPoly()] * d + list(self.coeffs))

    def reverse(self, deg=None):
        if deg is None:
            deg = self.degree
        if deg < self.degree:
            raise ValueError("reverse degree below polynomial degree")
        return XPoly(self[deg - i] for i in range(deg + 1))

    def map_coeffs(self, fn):
        return XPoly(fn(c) for c in self.coeffs)

    def scale_var(self, c):
        """p(c*x) for a MultiPoly or number c."""
        out, pw = [], MultiPoly.const(1)
        for a in self.coeffs:
            out.append(a * pw)
            pw = pw * _mp(c)
        return XPoly(out)

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            xs = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            cs = render(c)
            if not xs:
                parts.append(f"({cs})" if len(c.terms) > 1 else cs)
            elif c == 1:
                parts.append(xs)
            elif c == -1:
                parts.append("-" + xs)
            else:
                parts.append(f"({cs})*{xs}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"XPoly({self})"


def _xp(p):
    if isinstance(p, XPoly):
        return p
    return XPoly.const(p)


class XRatFunc:
    """num/den in x; equality by cross multiplication, no gcd reduction."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = _xp(num)
        self.den = XPoly([1]) if den is None else _xp(den)
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")

    def __eq__(self, other):
        other = _xr(other)
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __add__(self, other):
        other = _xr(other)
        if self.den == other.den:
            return XRatFunc(self.num + other.num, self.den)
        return XRatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return XRatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_xr(other))

    def __rsub__(self, other):
        return _xr(other) - self

    def __mul__(self, other):
        other = _xr(other)
        return XRatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _xr(other)
        return XRatFunc(self.num * other.den, self.den * other.num)

    def map_coeffs(self, fn):
        return XRatFunc(self.num.map_coeffs(fn), self.den.map_coeffs(fn))

    def reciprocal_variable(self):
        d = max(self.num.degree, self.den.degree, 0)
        return XRatFunc(self.num.reverse(d), self.den.reverse(d))

    def is_proper(self):
        return self.num.is_zero() or self.num.degree < self.den.degree

    def __str__(self):
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"XRatFunc({self})"


def _xr(f):
    return f if isinstance(f, XRatFunc) else XRatFunc(_xp(f))


def xratfunc_series(f, order):
    """First order+1 coefficients; the constant term of den must be a unit."""
    den = f.den
    d0 = den[0]
    if d0.is_zero():
        raise ZeroDivisionError("denominator vanishes at x = 0")
    inv = MultiPoly.const(1) if d0 == 1 else d0.inverse()
    out = []
    for n in range(order + 1):
        acc = f.num[n]
        for i in range(1, min(n, den.degree) + 1):
            if not den[i].is_zero() and not out[n - i].is_zero():
                acc = acc - den[i] * out[n - i]
        out.append(acc if d0 == 1 else acc * inv)
    return out


def xnegative_series(f, order):
    """Coefficients of x^1..x^order in -f(1/x), for proper f.

    This is the backward continuation of the coefficient sequence of f:
    the n-th entry is the coefficient with index -n.
    """
    if not f.is_proper():
        raise ValueError("negative-index series needs a proper rational function")
    g = -f.reciprocal_variable()
    return xratfunc_series(g, order)[1:]

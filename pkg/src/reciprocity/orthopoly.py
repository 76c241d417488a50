"""Chebyshev polynomials and their weighted generalisations.

P_n satisfies P_{n+1} = x P_n - B_n P_{n-1}; Q_n is the two-family version
whose multipliers alternate between V and A; motzkin_p is the three-term
version with diagonal entries b_n and off-diagonal weights lambda_n.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb

from .exact import UniPoly
from .multipoly import MultiPoly, XPoly, shift_op, reflect_op, specialize

X = UniPoly.x()


@lru_cache(maxsize=None)
def chebyshev_u(n):
    if n < -2:
        raise ValueError("chebyshev_u is defined here for n >= -2")
    if n == -2:
        return UniPoly([-1])
    if n == -1:
        return UniPoly()
    if n == 0:
        return UniPoly([1])
    return UniPoly([0, 2]) * chebyshev_u(n - 1) - chebyshev_u(n - 2)


def chebyshev_u_sum(n):
    """Explicit form sum_j (-1)^j C(n-j, j) (2x)^(n-2j)."""
    out = UniPoly()
    for j in range(n // 2 + 1):
        out = out + UniPoly.monomial(n - 2 * j, (-1) ** j * comb(n - j, j) * 2 ** (n - 2 * j))
    return out


@lru_cache(maxsize=None)
def chebyshev_t(n):
    if n < 0:
        raise ValueError("chebyshev_t needs n >= 0")
    if n == 0:
        return UniPoly([1])
    if n == 1:
        return X
    return UniPoly([0, 2]) * chebyshev_t(n - 1) - chebyshev_t(n - 2)


def chebyshev_t_sum(n):
    """sum_j (-1)^j n/(2(n-j)) C(n-j, j) (2x)^(n-2j), for n >= 1."""
    out = UniPoly()
    for j in range(n // 2 + 1):
        c = Fraction((-1) ** j * n, 2 * (n - j)) * comb(n - j, j) * 2 ** (n - 2 * j)
        out = out + UniPoly.monomial(n - 2 * j, c)
    return out


def u_half(n):
    """U_n(x/2) as a polynomial in x."""
    return chebyshev_u(n).scale_var(Fraction(1, 2))


def u_reversed(n):
    """x^n U_n(1/(2x)) as a polynomial in x (n >= 0)."""
    return u_half(n).reverse(n) if n >= 0 else UniPoly()


def _var(f, i):
    return MultiPoly.var(f, i)


@lru_cache(maxsize=None)
def poly_p(n):
    if n < 0:
        raise ValueError("poly_p needs n >= 0")
    if n == 0:
        return XPoly([1])
    if n == 1:
        return XPoly.x()
    return XPoly.x() * poly_p(n - 1) - poly_p(n - 2) * _var("B", n - 1)


@lru_cache(maxsize=None)
def poly_q(n):
    if n < 0:
        raise ValueError("poly_q needs n >= 0")
    if n == 0:
        return XPoly([1])
    if n == 1:
        return XPoly([0, _var("V", 1)])
    m = n - 1
    mult = _var("V", (m + 2) // 2) if m % 2 == 0 else _var("A", (m + 1) // 2)
    return XPoly.x() * poly_q(m) * mult - poly_q(m - 1)


def poly_q_monic(n):
    """Q_n divided by its leading coefficient."""
    q = poly_q(n)
    return q * q.coeffs[-1].inverse()


@lru_cache(maxsize=None)
def motzkin_p(n):
    """b_i is stored as A_{i+1} and lambda_i as V_{i+1}."""
    if n < 0:
        raise ValueError("motzkin_p needs n >= 0")
    if n == 0:
        return XPoly([1])
    if n == 1:
        return XPoly([-_var("A", 1), 1])
    m = n - 1
    return (XPoly.x() - _var("A", m + 1)) * motzkin_p(m) - motzkin_p(m - 1) * _var("V", m + 1)


def motzkin_b(i):
    return _var("A", i + 1)


def motzkin_lambda(i):
    return _var("V", i + 1)


# coefficient-wise operators on x-polynomials

def shift_x(p, families, by=1):
    if by == 0:
        return p
    return p.map_coeffs(lambda c: shift_op(c, families, by))


def reflect_x(p, j):
    return p.map_coeffs(lambda c: reflect_op(c, j))


def specialize_x(p, rules):
    return p.map_coeffs(lambda c: specialize(c, rules))


def ones_x(p):
    """Set every indexed variable to 1; returns a UniPoly."""
    one = {f: (lambda i: 1) for f in ("A", "V", "B")}
    return UniPoly(specialize(c, one).const_value() for c in p.coeffs)


# q-analogues

_q = MultiPoly.var("Q")


def q_int(n):
    out = MultiPoly()
    for i in range(n):
        out = out + _q ** i
    return out


@lru_cache(maxsize=None)
def q_binomial(n, k):
    """Gaussian binomial as a polynomial in q; zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return MultiPoly()
    if k == 0 or k == n:
        return MultiPoly.const(1)
    return q_binomial(n - 1, k - 1) + _q ** k * q_binomial(n - 1, k)


def p_area_closed(n):
    """sum_j (-1)^j q^(j(j-1)) [n-j choose j]_q x^(n-2j)."""
    cs = [MultiPoly()] * (n + 1)
    for j in range(n // 2 + 1):
        cs[n - 2 * j] = (-1) ** j * _q ** (j * (j - 1)) * q_binomial(n - j, j)
    return XPoly(cs)


def p_shifted_area_closed(n):
    """sum_j (-1)^j q^(j^2) [n-j choose j]_q x^(n-2j)."""
    cs = [MultiPoly()] * (n + 1)
    for j in range(n // 2 + 1):
        cs[n - 2 * j] = (-1) ** j * _q ** (j * j) * q_binomial(n - j, j)
    return XPoly(cs)


def polyomino_rules():
    y = MultiPoly.var("Y")
    return {"A": lambda i: (y * _q) ** i, "V": lambda i: y ** (-i)}


def q_even_closed(k, constant=None):
    """Q_{2k} under A_i = (yq)^i, V_i = y^-i, as a double sum.

    The constant term is (-1)^k; pass constant=1 to get the variant with a
    bare leading 1 (which only agrees for even k).
    """
    y = MultiPoly.var("Y")
    cs = [MultiPoly()] * (2 * k + 1)
    cs[0] = MultiPoly.const((-1) ** k if constant is None else constant)
    for j in range(1, k + 1):
        inner = MultiPoly()
        for i in range(k - j + 1):
            inner = inner + (y * _q) ** i * q_binomial(k - i, j) * q_binomial(i + j - 1, j - 1)
        cs[2 * j] = (-1) ** (k - j) * _q ** comb(j + 1, 2) * inner
    return XPoly(cs)


def q_odd_closed(k):
    """Q_{2k-1} under A_i = (yq)^i, V_i = y^-i, as a double sum."""
    y = MultiPoly.var("Y")
    cs = [MultiPoly()] * (2 * k)
    for j in range(1, k + 1):
        inner = MultiPoly()
        for i in range(k - j + 1):
            inner = inner + y ** (i - k) * q_binomial(k - i - 1, j - 1) * q_binomial(i + j - 1, j - 1)
        cs[2 * j - 1] = (-1) ** (k - j) * _q ** comb(j, 2) * inner
    return XPoly(cs)


def q_odd_reflected_closed(k):
    """R^(k) Q_{2k-1} under the same specialisation, as a double sum."""
    y = MultiPoly.var("Y")
    cs = [MultiPoly()] * (2 * k)
    for j in range(1, k + 1):
        inner = MultiPoly()
        for i in range(k - j + 1):
            inner = inner + (y * _q) ** i * q_binomial(k - i - 1, j - 1) * q_binomial(i + j - 1, j - 1)
        cs[2 * j - 1] = y * (-1) ** (k - j) * _q ** comb(j + 1, 2) * inner
    return XPoly(cs)

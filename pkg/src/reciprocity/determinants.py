"""Exact determinants and a brute-force non-intersecting path oracle."""

from fractions import Fraction
from itertools import permutations

from .multipoly import MultiPoly


class NonSquare(ValueError):
    pass


def _square(M):
    n = len(M)
    if any(len(row) != n for row in M):
        raise NonSquare("matrix is not square")
    return n


def det_exact(M):
    """Fraction-free (Bareiss) elimination with row pivoting."""
    n = _square(M)
    if n == 0:
        return Fraction(1)
    a = [[Fraction(v) for v in row] for row in M]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_cofactor(M):
    """Plain Laplace expansion; works over any commutative ring."""
    n = _square(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = None
    for j in range(n):
        if M[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * det_cofactor(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return M[0][0] * 0
    return total


def det_poly(M):
    """Laplace expansion along rows with minors memoised by column set."""
    n = _square(M)
    if n == 0:
        return MultiPoly.const(1)
    cells = [[v if isinstance(v, MultiPoly) else MultiPoly.const(v) for v in row] for row in M]
    memo = {}

    def minor(row, cols):
        # determinant of rows row..n-1 restricted to the sorted column tuple
        if row == n:
            return MultiPoly.const(1)
        key = cols
        if key in memo:
            return memo[key]
        out = MultiPoly()
        for idx, c in enumerate(cols):
            v = cells[row][c]
            if v.is_zero():
                continue
            sub = minor(row + 1, cols[:idx] + cols[idx + 1:])
            if sub.is_zero():
                continue
            t = v * sub
            out = out - t if idx % 2 else out + t
        memo[key] = out
        return out

    return minor(0, tuple(range(n)))


def det(M):
    if any(isinstance(v, MultiPoly) for row in M for v in row):
        return det_poly(M)
    return det_exact(M)


def matrix(size, entry, offset=0):
    """[entry(i, j)] for offset <= i, j < offset + size."""
    return [[entry(i, j) for j in range(offset, offset + size)] for i in range(offset, offset + size)]


def hankel(seq, size, start=0):
    return [[seq(start + i + j) for j in range(size)] for i in range(size)]


# Lindstrom-Gessel-Viennot brute oracle

def _perm_sign(p):
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def lattice_paths(start, end, bound, steps=(1, -1), floor=0):
    """All paths with steps (1, d), d in steps, inside floor <= y <= bound."""
    (x0, y0), (x1, y1) = start, end
    n = x1 - x0
    if n < 0:
        return []
    out = []

    def rec(x, y, pts):
        if x == x1:
            if y == y1:
                out.append(tuple(pts))
            return
        left = x1 - x
        for d in steps:
            y2 = y + d
            if floor <= y2 <= bound and abs(y1 - y2) <= (left - 1) * max(abs(s) for s in steps):
                pts.append((x + 1, y2))
                rec(x + 1, y2, pts)
                pts.pop()

    if floor <= y0 <= bound:
        rec(x0, y0, [(x0, y0)])
    return out


def lgv_signed_sum(starts, ends, bound, steps=(1, -1)):
    """sum over sigma of sgn(sigma) times the number of vertex-disjoint
    path tuples joining starts[i] to ends[sigma(i)]."""
    m = len(starts)
    cache = {}

    def paths(i, j):
        if (i, j) not in cache:
            cache[(i, j)] = [frozenset(p) for p in lattice_paths(starts[i], ends[j], bound, steps)]
        return cache[(i, j)]

    total = 0
    for sigma in permutations(range(m)):
        count = 0

        def rec(i, used):
            nonlocal count
            if i == m:
                count += 1
                return
            for p in paths(i, sigma[i]):
                if used.isdisjoint(p):
                    rec(i + 1, used | p)

        rec(0, frozenset())
        total += _perm_sign(sigma) * count
    return total


def lgv_matrix(starts, ends, bound, steps=(1, -1)):
    return [[len(lattice_paths(s, e, bound, steps)) for e in ends] for s in starts]

"""Divided differences, the Bezoutian matrix and its bordered determinant.

For ``h`` in K[x] and a variable index ``j`` (0-based) the divided difference is

    grad_j h(x, y) = (h(y_0..y_{j-1}, x_j, .., x_{n-1}) - h(y_0..y_j, x_{j+1}, .., x_{n-1})) / (x_j - y_j)

so that ``sum_j (x_j - y_j) * grad_j h == h(x) - h(y)``.  The Bezoutian
matrix has entry ``(j, i) = grad_j f_i``.  The bordered matrix appends the
column ``grad_j g`` and the row ``(f_1(x), .., f_n(x), g(x))``; its
determinant is expanded along that last column, so the ``n + 1`` cofactors
are computed once per system and reused for every ``g``.
"""

from __future__ import annotations

from functools import lru_cache

from .poly import DoublePoly, Poly, PolySystem, substitute_xy


class DivisionError(ArithmeticError):
    """Exact division left a remainder; this always indicates a bug."""


def _shift(terms: dict, pos: int, by: int = 1) -> dict:
    out = {}
    for m, c in terms.items():
        m = list(m)
        m[pos] += by
        out[tuple(m)] = c
    return out


def _divide_by_difference(num: DoublePoly, j: int) -> DoublePoly:
    """Synthetic division of ``num`` by ``x_j - y_j``, as a polynomial in ``x_j``."""
    n = num.n
    yj = n + j
    by_power: dict = {}
    for m, c in num.terms.items():
        k = m[j]
        rest = m[:j] + (0,) + m[j + 1:]
        by_power.setdefault(k, {})[rest] = c
    if not by_power:
        return DoublePoly(2 * n, {}, num.field)
    top = max(by_power)
    quot: dict = {}
    q = DoublePoly(2 * n, {}, num.field)
    for k in range(top, 0, -1):
        # q_{k-1} = c_k + y_j * q_k
        q = DoublePoly(2 * n, by_power.get(k, {}), num.field) + DoublePoly(2 * n, _shift(q.terms, yj), num.field)
        quot[k - 1] = q
    rem = DoublePoly(2 * n, by_power.get(0, {}), num.field) + DoublePoly(2 * n, _shift(q.terms, yj), num.field)
    if not rem.is_zero:
        raise DivisionError(f"x_{j} - y_{j} does not divide the numerator (remainder {rem})")
    out: dict = {}
    for k, qk in quot.items():
        for m, c in _shift(qk.terms, j, k).items():
            out[m] = c
    return DoublePoly(2 * n, out, num.field)


def divided_difference(h: Poly, j: int) -> DoublePoly:
    n = h.nvars
    if not 0 <= j < n:
        raise IndexError(f"variable index {j} out of range for {n} variables")
    zero = (0,) * n
    first: dict = {}
    second: dict = {}
    for m, c in h.terms.items():
        # variables before j become y, from j on they stay x
        xs = zero[:j] + m[j:]
        ys = m[:j] + zero[j:]
        first[xs + ys] = c
        xs2 = zero[:j + 1] + m[j + 1:]
        ys2 = m[:j + 1] + zero[j + 1:]
        second[xs2 + ys2] = c
    num = DoublePoly(2 * n, first, h.field) - DoublePoly(2 * n, second, h.field)
    return _divide_by_difference(num, j)


def det(matrix) -> Poly:
    """Division-free determinant of a square matrix of polynomials (memoized minors)."""
    size = len(matrix)
    if size == 0:
        raise ValueError("empty matrix")
    memo: dict = {}

    def minor(r: int, cols: tuple):
        if r == size:
            return None
        key = (r, cols)
        if key in memo:
            return memo[key]
        total = None
        for k, c in enumerate(cols):
            entry = matrix[r][c]
            if entry.is_zero:
                continue
            rest = cols[:k] + cols[k + 1:]
            sub = minor(r + 1, rest)
            term = entry if sub is None else entry * sub
            if k % 2:
                term = -term
            total = term if total is None else total + term
        if total is None:
            total = matrix[0][0] * 0
        memo[key] = total
        return total

    return minor(0, tuple(range(size)))


def bezout_matrix(sys: PolySystem) -> tuple:
    """Entry ``[j][i]`` is ``grad_j f_i`` (rows are steps, columns are polynomials)."""
    return bezoutian(sys).matrix


def bezout_det(sys: PolySystem) -> DoublePoly:
    return bezoutian(sys).det


def bordered_det(sys: PolySystem, g: Poly) -> DoublePoly:
    return bezoutian(sys).bordered(g)


class Bezoutian:
    """Bezoutian data of one system: the matrix, its determinant and the
    cofactors of the bordering column."""

    def __init__(self, sys: PolySystem):
        self.sys = sys
        n = sys.n
        self.matrix = tuple(tuple(divided_difference(f, j) for f in sys.polys) for j in range(n))
        self.det = det(self.matrix)
        fx = tuple(substitute_xy(f, "x") for f in sys.polys)
        cof = []
        for j in range(n):
            rows = [self.matrix[r] for r in range(n) if r != j] + [fx]
            # cofactor of (row j, column n) in the (n+1)x(n+1) bordered matrix
            m = det(rows)
            cof.append(m if (j + n) % 2 == 0 else -m)
        self.cofactors = tuple(cof)

    def bordered(self, g: Poly) -> DoublePoly:
        out = substitute_xy(g, "x") * self.det
        for j, c in enumerate(self.cofactors):
            if c.is_zero:
                continue
            dg = divided_difference(g, j)
            if not dg.is_zero:
                out = out + dg * c
        return out


@lru_cache(maxsize=32)
def bezoutian(sys: PolySystem) -> Bezoutian:
    return Bezoutian(sys)


def derivative(p: Poly, i: int) -> Poly:
    out = {}
    for m, c in p.terms.items():
        e = m[i]
        if e:
            k = list(m)
            k[i] -= 1
            out[tuple(k)] = c * e
    return Poly(p.nvars, out, p.field)


def jacobian_det(sys: PolySystem) -> Poly:
    n = sys.n
    jac = [[derivative(f, j) for f in sys.polys] for j in range(n)]
    return det(jac)

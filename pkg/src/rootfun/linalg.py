"""Dense exact linear algebra over QQ or GF(p).

Matrices are lists of rows and vectors are lists of field elements.  Column
count is passed explicitly so empty matrices keep their shape.  Pivoting takes
the first nonzero entry of a column; no numerical pivoting is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class EchelonBasis:
    """Reduced row echelon form: every pivot is 1 and the only nonzero entry in its column."""

    rows: tuple
    pivots: tuple
    ncols: int
    field: object

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence) -> list:
        """Remainder of ``v`` after elimination against the basis rows."""
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                v = [a - c * b if b else a for a, b in zip(v, row)]
        return v

    def __contains__(self, v) -> bool:
        return member(self, v)


def row_reduce(rows: Sequence[Sequence], ncols: int, field) -> EchelonBasis:
    m = [list(r) for r in rows if any(r)]
    for r in m:
        if len(r) != ncols:
            raise ValueError(f"row of length {len(r)} in a matrix with {ncols} columns")
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        if lead != 1:
            inv = field.one / lead
            m[r] = [a * inv if a else a for a in m[r]]
            m[r][c] = field.one
        prow = m[r]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    m[i] = [a - f * b if b else a for a, b in zip(m[i], prow)]
        pivots.append(c)
        r += 1
    return EchelonBasis(tuple(tuple(row) for row in m[:r]), tuple(pivots), ncols, field)


def null_space(rows: Sequence[Sequence], ncols: int, field) -> list[list]:
    """Basis of ``{v : M v = 0}``, one vector per non-pivot column.

    The vector for free column ``c`` has a 1 at ``c``, minus the ``c``-entries
    of the echelon rows at the pivot positions, and zeros elsewhere.
    """
    ech = rows if isinstance(rows, EchelonBasis) else row_reduce(rows, ncols, field)
    pivset = set(ech.pivots)
    out = []
    for c in range(ncols):
        if c in pivset:
            continue
        v = [field.zero] * ncols
        v[c] = field.one
        for row, p in zip(ech.rows, ech.pivots):
            if row[c]:
                v[p] = -row[c]
        out.append(v)
    return out


def annihilator_in_dual(sub: EchelonBasis, ambient_dim: int) -> list[list]:
    """Functionals (as coordinate vectors) vanishing on the row space of ``sub``."""
    if sub.ncols != ambient_dim:
        raise ValueError("subspace is not in coordinates of the ambient space")
    return null_space(sub, ambient_dim, sub.field)


def member(sub: EchelonBasis, v: Sequence) -> bool:
    if len(v) != sub.ncols:
        raise ValueError("vector length does not match the subspace coordinates")
    return not any(sub.reduce(v))


def same_span(a: EchelonBasis, b: EchelonBasis) -> bool:
    # reduced echelon form is unique per row space
    return a.ncols == b.ncols and a.rows == b.rows


def span(vectors: Sequence[Sequence], ncols: int, field) -> EchelonBasis:
    return row_reduce(vectors, ncols, field)


def solve_affine(columns: Sequence[Sequence], target: Sequence, field):
    """Coefficients ``c`` with ``sum(c[i] * columns[i]) == target``, or ``None``
    when ``target`` is outside the span.  Free coefficients are set to zero."""
    n = len(target)
    k = len(columns)
    for col in columns:
        if len(col) != n:
            raise ValueError("all vectors must have the same length")
    aug = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    ech = row_reduce(aug, k + 1, field)
    if ech.pivots and ech.pivots[-1] == k:
        return None
    coeffs = [field.zero] * k
    for row, p in zip(ech.rows, ech.pivots):
        coeffs[p] = row[k]
    return coeffs


def vec_mat(v: Sequence, m: Sequence[Sequence], field) -> list:
    """Row vector times matrix."""
    ncols = len(m[0]) if m else 0
    out = [field.zero] * ncols
    for a, row in zip(v, m):
        if a:
            out = [o + a * b if b else o for o, b in zip(out, row)]
    return out


def mat_vec(m: Sequence[Sequence], v: Sequence, field) -> list:
    out = []
    for row in m:
        s = field.zero
        for a, b in zip(row, v):
            if a and b:
                s = s + a * b
        out.append(s)
    return out


def dot(u: Sequence, v: Sequence, field):
    s = field.zero
    for a, b in zip(u, v):
        if a and b:
            s = s + a * b
    return s


def lin_comb(coeffs: Sequence, vectors: Sequence[Sequence], length: int, field) -> list:
    out = [field.zero] * length
    for c, vec in zip(coeffs, vectors):
        if c:
            out = [o + c * b if b else o for o, b in zip(out, vec)]
    return out

"""Bounded root functionals and the extension product.

A functional on K[x^{<= delta_f}] is stored as the vector of its values on
the monomial basis and is extended by zero to higher degrees.  The extension
operator of ``L`` sends ``g`` to ``L(y) . B(x, y; g)`` truncated to degree
``delta_f``, where ``B`` is the bordered Bezoutian determinant; the product of
two functionals is ``(L1 * L2)(g) = L1(x) . [L2](g)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .bezoutian import bezoutian
from .linalg import vec_mat
from .poly import DoublePoly, MonomialBasis, Poly, PolySystem, monomial_basis


@dataclass(frozen=True)
class BoundedFunctional:
    basis: MonomialBasis
    values: tuple
    field: object

    def __post_init__(self):
        if len(self.values) != len(self.basis):
            raise ValueError(f"{len(self.values)} values for a basis of size {len(self.basis)}")
        object.__setattr__(self, "values", tuple(self.values))

    @classmethod
    def zero(cls, basis: MonomialBasis, field):
        return cls(basis, (field.zero,) * len(basis), field)

    @classmethod
    def coordinate(cls, basis: MonomialBasis, m, field):
        vals = [field.zero] * len(basis)
        vals[basis.index[tuple(m)]] = field.one
        return cls(basis, tuple(vals), field)

    @property
    def is_zero(self) -> bool:
        return not any(self.values)

    def __call__(self, p: Poly):
        return apply(self, p)

    def __add__(self, other: "BoundedFunctional"):
        return BoundedFunctional(self.basis, tuple(a + b for a, b in zip(self.values, other.values)), self.field)

    def __sub__(self, other: "BoundedFunctional"):
        return BoundedFunctional(self.basis, tuple(a - b for a, b in zip(self.values, other.values)), self.field)

    def __rmul__(self, c):
        c = self.field(c)
        return BoundedFunctional(self.basis, tuple(c * a for a in self.values), self.field)

    def value_at(self, m):
        """Value on the monomial ``x^m``; zero beyond the bound."""
        i = self.basis.index.get(tuple(m))
        return self.field.zero if i is None else self.values[i]


@dataclass(frozen=True)
class ExtensionOperator:
    """``matrix[r][c]`` is the coefficient of basis monomial ``r`` in ``[L](x^c)``."""

    matrix: tuple
    basis: MonomialBasis


def apply(l: BoundedFunctional, p: Poly):
    """Evaluate the zero-extended functional on ``p``."""
    total = l.field.zero
    index = l.basis.index
    for m, c in p.terms.items():
        i = index.get(m)
        if i is not None:
            v = l.values[i]
            if v:
                total = total + c * v
    return total


def apply_y(l: BoundedFunctional, q: DoublePoly) -> Poly:
    """Apply ``l`` to the y-variables of ``q``; the result is a polynomial in x."""
    n = q.n
    index = l.basis.index
    out: dict = {}
    for m, c in q.terms.items():
        i = index.get(m[n:])
        if i is None:
            continue
        v = l.values[i]
        if v:
            k = m[:n]
            s = out.get(k)
            out[k] = c * v if s is None else s + c * v
    return Poly(n, out, q.field)


class ExtensionContext:
    """Per-system tables for building extension operators.

    ``slices[c][b]`` is the part of ``B(x, y; x^c)`` multiplying ``y^b``,
    truncated to x-degree ``delta_f``, as a sparse ``{row: coeff}`` map.  An
    operator is then a linear combination of these slices, so building
    ``[L]`` for another ``L`` costs no polynomial arithmetic.
    """

    def __init__(self, sys: PolySystem):
        self.sys = sys
        self.basis = sys.basis
        self.field = sys.field
        self.D = len(self.basis)
        bez = bezoutian(sys)
        index = self.basis.index
        n = sys.n
        slices = []
        for m in self.basis.monomials:
            q = bez.bordered(Poly.monomial(m, field=self.field))
            per_y: dict = {}
            for mono, c in q.terms.items():
                b = index.get(mono[n:])
                if b is None:
                    continue
                r = index.get(mono[:n])
                if r is None:
                    # x-degree above the bound is dropped by truncation
                    continue
                per_y.setdefault(b, {})[r] = c
            slices.append(per_y)
        self.slices = slices
        self._cache: dict = {}

    def operator(self, l: BoundedFunctional) -> ExtensionOperator:
        key = l.values
        op = self._cache.get(key)
        if op is not None:
            return op
        zero = self.field.zero
        D = self.D
        cols = []
        for per_y in self.slices:
            col = [zero] * D
            for b, entries in per_y.items():
                v = l.values[b]
                if v:
                    for r, c in entries.items():
                        col[r] = col[r] + v * c
            cols.append(col)
        matrix = tuple(tuple(cols[c][r] for c in range(D)) for r in range(D))
        op = ExtensionOperator(matrix, self.basis)
        return self._cache.setdefault(key, op)

    def extend(self, l1: BoundedFunctional, op: ExtensionOperator) -> BoundedFunctional:
        return extend(l1, op)

    def product(self, l1: BoundedFunctional, l2: BoundedFunctional) -> BoundedFunctional:
        return extend(l1, self.operator(l2))

    def power(self, l: BoundedFunctional, k: int) -> BoundedFunctional:
        if k < 1:
            raise ValueError("power needs k >= 1")
        op = self.operator(l)
        out = l
        for _ in range(k - 1):
            out = extend(out, op)
        return out

    def functional(self, values: Sequence) -> BoundedFunctional:
        return BoundedFunctional(self.basis, tuple(values), self.field)


@lru_cache(maxsize=32)
def extension_context(sys: PolySystem) -> ExtensionContext:
    return ExtensionContext(sys)


def extension_operator(l: BoundedFunctional, sys: PolySystem) -> ExtensionOperator:
    return extension_context(sys).operator(l)


def extend(l1: BoundedFunctional, op2: ExtensionOperator) -> BoundedFunctional:
    """The restricted extension product ``L1 * L2`` given ``[L2]``."""
    if op2.basis != l1.basis:
        raise ValueError("functional and operator live on different bases")
    return BoundedFunctional(l1.basis, tuple(vec_mat(l1.values, op2.matrix, l1.field)), l1.field)


def power(l: BoundedFunctional, k: int, sys: PolySystem) -> BoundedFunctional:
    return extension_context(sys).power(l, k)


def truncated_generators(sys: PolySystem, bound: int) -> list[Poly]:
    """The products ``f_i * x^a`` with total degree at most ``bound``."""
    out = []
    for f, d in zip(sys.polys, sys.degrees):
        if bound - d < 0:
            continue
        for m in monomial_basis(sys.n, bound - d):
            out.append(f * Poly.monomial(m, field=sys.field))
    return out


def annihilates_truncated_ideal(l: BoundedFunctional, sys: PolySystem) -> bool:
    """Whether ``l`` kills every ``f_i * x^a`` of degree at most ``delta_f``."""
    return all(not apply(l, g) for g in truncated_generators(sys, sys.delta_f))

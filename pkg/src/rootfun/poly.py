"""Sparse multivariate polynomials over an exact field.

Monomials are plain tuples of exponents.  The monomial order is graded
lexicographic with ``x1 > x2 > ... > xn``; bounded bases list monomials by
increasing total degree and, inside a degree, in decreasing lex order, so for
two variables the degree-2 basis is ``1, x1, x2, x1^2, x1*x2, x2^2``.

A :class:`DoublePoly` lives in the doubled ring K[x1..xn, y1..yn]; its
exponent tuples hold the x-block first and the y-block second.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import comb
from typing import Mapping, Sequence

from .fields import QQ

Monomial = tuple


class InvalidSystem(ValueError):
    pass


def grlex_key(m: Monomial):
    """Sort key putting ``m`` at its position in a bounded monomial basis."""
    return (sum(m), tuple(-e for e in m))


def _compositions(total: int, parts: int):
    # decreasing lex order
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class MonomialBasis:
    """All monomials in ``n`` variables of total degree at most ``bound``."""

    def __init__(self, n: int, bound: int):
        if n < 1 or bound < 0:
            raise ValueError("need n >= 1 and bound >= 0")
        self.n = n
        self.bound = bound
        self.monomials = tuple(m for d in range(bound + 1) for m in _compositions(d, n))
        self.index = {m: i for i, m in enumerate(self.monomials)}

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __contains__(self, m):
        return m in self.index

    def __eq__(self, other):
        return isinstance(other, MonomialBasis) and (self.n, self.bound) == (other.n, other.bound)

    def __hash__(self):
        return hash((self.n, self.bound))

    def __repr__(self):
        return f"MonomialBasis(n={self.n}, bound={self.bound}, size={len(self)})"


@lru_cache(maxsize=None)
def monomial_basis(n: int, bound: int) -> MonomialBasis:
    return MonomialBasis(n, bound)


def basis_size(n: int, bound: int) -> int:
    return comb(n + bound, n)


def _madd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(i + j for i, j in zip(a, b))


class Poly:
    """Polynomial in ``nvars`` variables; ``terms`` maps exponent tuples to
    nonzero coefficients.  Treat instances as immutable."""

    __slots__ = ("nvars", "field", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping | None = None, field=QQ):
        self.nvars = nvars
        self.field = field
        self.terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    def _new(self, terms):
        return type(self)(self.nvars, terms, self.field)

    # -- constructors --------------------------------------------------
    @classmethod
    def constant(cls, nvars: int, c, field=QQ):
        return cls(nvars, {(0,) * nvars: field(c)}, field)

    @classmethod
    def variable(cls, nvars: int, i: int, field=QQ):
        """The variable ``x_{i+1}`` (``i`` is 0-based)."""
        m = [0] * nvars
        m[i] = 1
        return cls(nvars, {tuple(m): field.one}, field)

    @classmethod
    def monomial(cls, m: Monomial, c=None, field=QQ):
        return cls(len(m), {tuple(m): field.one if c is None else field(c)}, field)

    @classmethod
    def from_vector(cls, basis: MonomialBasis, values: Sequence, field=QQ):
        return cls(basis.n, dict(zip(basis.monomials, values)), field)

    # -- queries -------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree; check is_zero first")
        return max(sum(m) for m in self.terms)

    def coeff(self, m: Monomial):
        return self.terms.get(tuple(m), self.field.zero)

    def to_vector(self, basis: MonomialBasis) -> list:
        """Coordinates over ``basis``; raises if a term falls outside it."""
        vec = [self.field.zero] * len(basis)
        for m, c in self.terms.items():
            try:
                vec[basis.index[m]] = c
            except KeyError:
                raise ValueError(f"monomial {m} is outside {basis!r}") from None
        return vec

    def evaluate(self, point: Sequence):
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates, got {len(point)}")
        pt = [self.field(v) for v in point]
        total = self.field.zero
        for m, c in self.terms.items():
            t = c
            for v, e in zip(pt, m):
                if e:
                    t = t * v ** e
            total = total + t
        return total

    def truncate(self, d: int) -> "Poly":
        return self._new({m: c for m, c in self.terms.items() if sum(m) <= d})

    # -- arithmetic ----------------------------------------------------
    def _check(self, other):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = type(self).constant(self.nvars, other, self.field)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            out[m] = c if s is None else s + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = type(self).constant(self.nvars, other, self.field)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = self.field(other)
            return self._new({m: a * c for m, a in self.terms.items()}) if c else self._new({})
        self._check(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _madd(m1, m2)
                p = c1 * c2
                s = out.get(m)
                out[m] = p if s is None else s + p
        return self._new(out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = type(self).constant(self.nvars, 1, self.field)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if not self.terms:
            return other == 0
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def format(self, names: Sequence[str] | None = None) -> str:
        names = names or default_names(self.nvars)
        if not self.terms:
            return "0"
        # highest degree first reads naturally
        items = sorted(self.terms.items(), key=lambda mc: (-sum(mc[0]), grlex_key(mc[0])[1]))
        out = []
        for m, c in items:
            s = self.field.format(c)
            neg = s.startswith("-")
            if neg:
                s = s[1:]
            mono = format_monomial(m, names)
            if mono == "1":
                body = s
            elif s == "1":
                body = mono
            else:
                body = f"{s}*{mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"{type(self).__name__}({self.format()})"


def default_names(n: int) -> list[str]:
    return ["x"] if n == 1 else [f"x{i + 1}" for i in range(n)]


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def truncate(p: Poly, d: int) -> Poly:
    """Keep exactly the terms of total degree <= d."""
    if d < 0:
        raise ValueError("truncation degree must be non-negative")
    return p.truncate(d)


class DoublePoly(Poly):
    """Polynomial in (x1..xn, y1..yn); ``nvars`` is ``2n``."""

    __slots__ = ()

    @property
    def n(self) -> int:
        return self.nvars // 2

    def y_parts(self) -> dict:
        """Write ``self = sum_beta y^beta * c_beta(x)``; returns ``{beta: c_beta}``."""
        n = self.n
        parts: dict = {}
        for m, c in self.terms.items():
            parts.setdefault(m[n:], {})[m[:n]] = c
        return {b: Poly(n, t, self.field) for b, t in parts.items()}

    def diagonal(self) -> Poly:
        """Substitute y := x."""
        n = self.n
        out: dict = {}
        for m, c in self.terms.items():
            k = _madd(m[:n], m[n:])
            s = out.get(k)
            out[k] = c if s is None else s + c
        return Poly(n, out, self.field)

    def format(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            xs = default_names(self.n)
            names = xs + [v.replace("x", "y", 1) for v in xs]
        return Poly.format(self, names)

    def evaluate_xy(self, x: Sequence, y: Sequence):
        return Poly.evaluate(self, list(x) + list(y))


def substitute_xy(p: Poly, side: str) -> DoublePoly:
    """Embed an x-polynomial into the doubled ring as a polynomial in x or in y."""
    n = p.nvars
    zero = (0,) * n
    if side == "x":
        terms = {m + zero: c for m, c in p.terms.items()}
    elif side == "y":
        terms = {zero + m: c for m, c in p.terms.items()}
    else:
        raise ValueError("side must be 'x' or 'y'")
    return DoublePoly(2 * n, terms, p.field)


@dataclass(frozen=True)
class PolySystem:
    """A square system f = (f_1..f_n) together with its derived degree data."""

    polys: tuple
    field: object = QQ
    names: tuple | None = None
    n: int = dc_field(init=False)
    degrees: tuple = dc_field(init=False)
    delta_f: int = dc_field(init=False)
    D: int = dc_field(init=False)

    def __post_init__(self):
        polys = tuple(self.polys)
        object.__setattr__(self, "polys", polys)
        if not polys:
            raise InvalidSystem("empty system")
        n = polys[0].nvars
        if len(polys) != n:
            raise InvalidSystem(f"{len(polys)} polynomials in {n} variables; the system must be square")
        for i, p in enumerate(polys):
            if p.nvars != n:
                raise InvalidSystem(f"f_{i + 1} has {p.nvars} variables, expected {n}")
            if p.field != self.field:
                raise InvalidSystem(f"f_{i + 1} is over {p.field!r}, expected {self.field!r}")
            if p.is_zero or p.degree < 1:
                raise InvalidSystem(f"f_{i + 1} is zero or constant")
        names = tuple(self.names) if self.names else tuple(default_names(n))
        if len(names) != n:
            raise InvalidSystem("wrong number of variable names")
        degrees = tuple(p.degree for p in polys)
        delta = sum(d - 1 for d in degrees)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "delta_f", delta)
        object.__setattr__(self, "D", basis_size(n, delta))

    @property
    def basis(self) -> MonomialBasis:
        return monomial_basis(self.n, self.delta_f)

    def format(self) -> list[str]:
        return [p.format(self.names) for p in self.polys]


def random_poly(rng, n: int, degree: int, field=QQ, density: float = 0.6, coeff_range: int = 5) -> Poly:
    """Random polynomial with degree at most ``degree`` (used by tests and scripts)."""
    terms = {}
    for m in monomial_basis(n, degree):
        if rng.random() < density:
            terms[m] = field(rng.randint(-coeff_range, coeff_range))
    return Poly(n, terms, field)


__all__ = ["Monomial", "MonomialBasis", "monomial_basis", "basis_size", "Poly", "DoublePoly",
           "PolySystem", "InvalidSystem", "truncate", "substitute_xy", "grlex_key",
           "format_monomial", "default_names", "random_poly"]

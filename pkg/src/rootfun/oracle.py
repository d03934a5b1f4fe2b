"""Brute-force cross-checks for small systems.

None of these go through the extension product: ideal slices come from
saturating truncated ideals at growing degree, and root functionals come from
points (and derivative exponents) listed in a fixture.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb

from .functionals import BoundedFunctional
from .linalg import EchelonBasis, row_reduce, same_span
from .poly import MonomialBasis, Poly, PolySystem, monomial_basis
from .solver import solve, truncated_ideal_at

__all__ = ["NotStabilized", "RootFixture", "truncated_ideal_at", "saturated_ideal_slice",
           "evaluation_functional", "derivative_functional", "slice_generates_ideal", "fixture_functionals",
           "run_oracle_checks"]

DEFAULT_SLACK = 4


class NotStabilized(RuntimeError):
    pass


@dataclass
class RootFixture:
    system: PolySystem
    # (point, [exponent vectors]); an empty list means a simple root
    roots: list = dc_field(default_factory=list)

    @property
    def multiplicity(self) -> int:
        return sum(max(1, len(betas)) for _, betas in self.roots)


def _low_part(ech: EchelonBasis, low: int, field) -> EchelonBasis:
    """Intersection of a row space with the first ``low`` coordinates."""
    high = ech.ncols - low
    # high-degree coordinates first, so rows pivoting in the low block span the intersection
    perm = [list(r[low:]) + list(r[:low]) for r in ech.rows]
    red = row_reduce(perm, ech.ncols, field)
    keep = [r[high:] for r, p in zip(red.rows, red.pivots) if p >= high]
    return row_reduce(keep, low, field)


def saturated_ideal_slice(sys: PolySystem, m: int, slack: int = DEFAULT_SLACK) -> EchelonBasis:
    """(f) intersected with polynomials of degree <= m, read off from the truncated
    ideals of degree m, m+1, ..; returned once two consecutive bounds agree."""
    low = comb(sys.n + m, sys.n)
    prev = None
    for s in range(slack + 1):
        cur = _low_part(truncated_ideal_at(sys, m + s), low, sys.field)
        if prev is not None and same_span(prev, cur):
            return cur
        prev = cur
    raise NotStabilized(f"degree-{m} slice still growing at degree {m + slack}; increase slack")


def evaluation_functional(basis: MonomialBasis, point, field) -> BoundedFunctional:
    pt = [field(v) for v in point]
    if len(pt) != basis.n:
        raise ValueError(f"point has {len(pt)} coordinates, expected {basis.n}")
    vals = []
    for m in basis.monomials:
        v = field.one
        for c, e in zip(pt, m):
            if e:
                v = v * c ** e
        vals.append(v)
    return BoundedFunctional(basis, tuple(vals), field)


def derivative_functional(basis: MonomialBasis, point, beta, field) -> BoundedFunctional:
    """Coefficient of t^beta in x^a evaluated at point + t, for each basis monomial x^a."""
    pt = [field(v) for v in point]
    if len(pt) != basis.n or len(beta) != basis.n:
        raise ValueError("point and exponent vector must match the variable count")
    vals = []
    for m in basis.monomials:
        v = field.one
        for c, a, b in zip(pt, m, beta):
            if b > a:
                v = field.zero
                break
            v = v * comb(a, b)
            if a - b:
                v = v * c ** (a - b)
        vals.append(v)
    return BoundedFunctional(basis, tuple(vals), field)


def fixture_functionals(fx: RootFixture, basis: MonomialBasis | None = None) -> list[BoundedFunctional]:
    sys = fx.system
    basis = basis or sys.basis
    out = []
    for point, betas in fx.roots:
        for beta in betas or [(0,) * sys.n]:
            out.append(derivative_functional(basis, point, beta, sys.field))
    return out


def slice_generates_ideal(sys: PolySystem, delta: int, slack: int = DEFAULT_SLACK, ideal_slice=None) -> bool:
    """Compare (f) in degree <= delta_f + delta against
    slice * K[x^{<= delta}] + truncated ideal of degree delta_f + delta."""
    if ideal_slice is None:
        ideal_slice = solve(sys).ideal_slice
    m = sys.delta_f + delta
    basis = monomial_basis(sys.n, m)
    lhs = saturated_ideal_slice(sys, m, slack)
    rows = [list(r) for r in truncated_ideal_at(sys, m).rows]
    for h in ideal_slice:
        for g in monomial_basis(sys.n, delta):
            rows.append((h * Poly.monomial(g, field=sys.field)).to_vector(basis))
    rhs = row_reduce(rows, len(basis), sys.field)
    return same_span(lhs, rhs)


def run_oracle_checks(fx: RootFixture, delta_max: int = 2, slack: int = DEFAULT_SLACK) -> list[tuple]:
    """Returns ``(name, passed, detail)`` rows; raises NotZeroDimensional from the solver."""
    sys = fx.system
    rows = []
    for point, _ in fx.roots:
        ok = all(not f.evaluate(point) for f in sys.polys)
        rows.append((f"root {tuple(str(c) for c in point)} is a common zero", ok, ""))
    res = solve(sys, fast_path=True, verify=True)
    for name, ok in res.verification.items():
        rows.append((f"invariant {name}", ok, ""))
    literal = solve(sys, fast_path=False)
    rows.append(("literal route matches accelerated route",
                 [l.values for l in literal.root_basis] == [l.values for l in res.root_basis]
                 and literal.unit == res.unit, ""))
    roots_span = row_reduce([l.values for l in res.root_basis], sys.D, sys.field)
    try:
        sat = saturated_ideal_slice(sys, sys.delta_f, slack)
        slice_span = row_reduce([h.to_vector(sys.basis) for h in res.ideal_slice], sys.D, sys.field)
        rows.append(("saturated slice equals pipeline slice", same_span(sat, slice_span),
                     f"dim {sat.rank}"))
    except NotStabilized as e:
        rows.append(("saturated slice equals pipeline slice", False, str(e)))
    if fx.roots:
        fx_span = row_reduce([l.values for l in fixture_functionals(fx)], sys.D, sys.field)
        rows.append(("fixture functionals span the root space", same_span(fx_span, roots_span),
                     f"fixture rank {fx_span.rank}, root space {roots_span.rank}"))
        rows.append(("multiplicity count", fx.multiplicity == len(res.root_basis),
                     f"{fx.multiplicity} listed, {len(res.root_basis)} found"))
    for delta in range(delta_max + 1):
        try:
            ok = slice_generates_ideal(sys, delta, slack, res.ideal_slice)
            rows.append((f"slice generates ideal at degree delta_f+{delta}", ok, ""))
        except NotStabilized as e:
            rows.append((f"slice generates ideal at degree delta_f+{delta}", False, str(e)))
    return rows

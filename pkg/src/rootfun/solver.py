"""Root functionals, ideal slice and unit root functional of a square system.

Steps, all inside K[x^{<= delta_f}] with D = dim of that space:

1. echelon basis of the truncated ideal spanned by ``f_i * x^a``;
2. its annihilator ``L_1..L_d`` in the dual;
3. the extension operators ``[L_p]``;
4. the powers ``L_p^d``;
5. the generators ``L_p^d * L_q``;
6. an echelon basis ``l_1..l_d''`` of their span (all root functionals, restricted);
7. the polynomials killed by every ``l_p`` (the ideal intersected with the bounded space);
8. a decomposition ``sum a_p l_p(y).det(grad f) + sum b_q h_q = 1``, giving
   the restricted unit root functional ``E' = sum a_p l_p``.

The accelerated route replaces steps 4-5 by the chain ``A, A*A, A*A*A, ..``
and stops at the first repeat; both routes end in the same reduced echelon
basis.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field

from .bezoutian import bezoutian
from .functionals import (BoundedFunctional, annihilates_truncated_ideal, apply, apply_y,
                          extend, extension_context, truncated_generators)
from .linalg import EchelonBasis, annihilator_in_dual, member, row_reduce, solve_affine
from .poly import Poly, PolySystem, monomial_basis

log = logging.getLogger(__name__)

NO_ROOTS_SLACK = 4


class NotZeroDimensional(ArithmeticError):
    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


@dataclass
class SolveResult:
    system: PolySystem
    delta_f: int
    D: int
    ann_dim: int
    root_basis: list
    ideal_slice: list
    unit: BoundedFunctional
    unit_coeffs: dict
    diagnostics: dict = dc_field(default_factory=dict)
    verification: dict | None = None


def _workers() -> int:
    raw = os.environ.get("ROOTFUN_THREADS", "").strip()
    if not raw:
        return 1
    k = int(raw)
    if k < 0:
        raise ValueError("ROOTFUN_THREADS must be >= 0")
    return k or (os.cpu_count() or 1)


def _map(fn, items):
    items = list(items)
    k = _workers()
    if k <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=k) as pool:
        return list(pool.map(fn, items))


def truncated_ideal_at(sys: PolySystem, m: int) -> EchelonBasis:
    """Echelon basis of span{f_i * x^a : deg <= m} over the degree-m monomial basis."""
    basis = monomial_basis(sys.n, m)
    rows = [g.to_vector(basis) for g in truncated_generators(sys, m)]
    return row_reduce(rows, len(basis), sys.field)


def truncated_ideal_basis(sys: PolySystem) -> EchelonBasis:
    return truncated_ideal_at(sys, sys.delta_f)


def annihilator_functionals(sys: PolySystem, ideal: EchelonBasis) -> list[BoundedFunctional]:
    basis = sys.basis
    return [BoundedFunctional(basis, tuple(v), sys.field) for v in annihilator_in_dual(ideal, len(basis))]


def _span(functionals, sys: PolySystem) -> EchelonBasis:
    return row_reduce([l.values for l in functionals], sys.D, sys.field)


def _as_functionals(ech: EchelonBasis, sys: PolySystem) -> list[BoundedFunctional]:
    return [BoundedFunctional(sys.basis, row, sys.field) for row in ech.rows]


def power_span_chain(sys: PolySystem, ann: list[BoundedFunctional], max_steps: int | None = None) -> list[EchelonBasis]:
    """Spans of A, A^2, A^3, .. restricted to the bounded space, up to and
    including the first span equal to its predecessor."""
    ctx = extension_context(sys)
    ops = _map(ctx.operator, ann)
    chain = [_span(ann, sys)]
    limit = max_steps if max_steps is not None else len(ann) + 2
    while len(chain) <= limit:
        prev = chain[-1]
        gens = [extend(BoundedFunctional(sys.basis, row, sys.field), op).values
                for row in prev.rows for op in ops]
        nxt = row_reduce(gens, sys.D, sys.field)
        chain.append(nxt)
        if nxt.rows == prev.rows:
            break
    return chain


def root_functional_basis(sys: PolySystem, ann: list[BoundedFunctional], fast: bool = False,
                          diagnostics: dict | None = None) -> list[BoundedFunctional]:
    diag = diagnostics if diagnostics is not None else {}
    d = len(ann)
    if d == 0:
        diag["generators"] = 0
        return []
    if fast:
        chain = power_span_chain(sys, ann)
        diag["stabilized_at"] = len(chain) - 1
        diag["chain_dims"] = [e.rank for e in chain]
        return _as_functionals(chain[-1], sys)
    ctx = extension_context(sys)
    t = time.perf_counter()
    ops = _map(ctx.operator, ann)
    diag.setdefault("timing", {})["step3"] = time.perf_counter() - t

    def dth_power(p):
        out = ann[p]
        for _ in range(d - 1):
            out = extend(out, ops[p])
        return out

    t = time.perf_counter()
    powers = _map(dth_power, range(d))
    diag["timing"]["step4"] = time.perf_counter() - t
    t = time.perf_counter()
    gens = [extend(powers[p], ops[q]).values for p in range(d) for q in range(d)]
    diag["timing"]["step5"] = time.perf_counter() - t
    diag["generators"] = len(gens)
    return _as_functionals(row_reduce(gens, sys.D, sys.field), sys)


def ideal_slice_basis(sys: PolySystem, root_basis: list[BoundedFunctional]) -> list[Poly]:
    span = _span(root_basis, sys)
    ker = annihilator_in_dual(span, sys.D)
    ech = row_reduce(ker, sys.D, sys.field)
    return [Poly.from_vector(sys.basis, row, sys.field) for row in ech.rows]


def _one_vector(sys: PolySystem) -> list:
    e = [sys.field.zero] * sys.D
    e[0] = sys.field.one
    return e


def certify_no_roots(sys: PolySystem, slack: int = NO_ROOTS_SLACK) -> int | None:
    """Smallest ``s <= slack`` with ``1`` in the truncated ideal of degree
    ``delta_f + s``, or ``None``."""
    for s in range(slack + 1):
        m = sys.delta_f + s
        ech = truncated_ideal_at(sys, m)
        one = [sys.field.zero] * ech.ncols
        one[0] = sys.field.one
        if member(ech, one):
            return s
    return None


def unit_root_functional(sys: PolySystem, root_basis: list[BoundedFunctional], ideal_slice: list[Poly],
                         diagnostics: dict | None = None):
    """Returns ``(E', {"a": [...], "b": [...]})``; raises NotZeroDimensional."""
    diag = diagnostics if diagnostics is not None else {}
    basis = sys.basis
    det = bezoutian(sys).det
    cols = [apply_y(l, det).to_vector(basis) for l in root_basis]
    cols += [h.to_vector(basis) for h in ideal_slice]
    target = _one_vector(sys)
    coeffs = solve_affine(cols, target, sys.field)
    if coeffs is None:
        rank = row_reduce(cols, sys.D, sys.field).rank
        diag["step8_rank"] = rank
        raise NotZeroDimensional(
            f"1 is not reachable in step 8 (candidate span has rank {rank} of {sys.D}); "
            "the system is not zero-dimensional or the field is degenerate", diag)
    k = len(root_basis)
    a, b = coeffs[:k], coeffs[k:]
    if not root_basis:
        # an empty root space only means "no roots" if 1 really is in the ideal
        s = certify_no_roots(sys)
        if s is None:
            diag["no_roots_certificate"] = None
            raise NotZeroDimensional(
                "no root functionals survive, but 1 is not in the truncated ideal up to degree "
                f"{sys.delta_f + NO_ROOTS_SLACK}; the system is not zero-dimensional", diag)
        diag["no_roots"] = True
        diag["no_roots_certificate"] = sys.delta_f + s
        return BoundedFunctional.zero(basis, sys.field), {"a": a, "b": b}
    vals = [sys.field.zero] * sys.D
    for c, l in zip(a, root_basis):
        if c:
            vals = [v + c * w if w else v for v, w in zip(vals, l.values)]
    return BoundedFunctional(basis, tuple(vals), sys.field), {"a": a, "b": b}


def solve(sys: PolySystem, fast_path: bool = True, verify: bool = False) -> SolveResult:
    diag: dict = {"path": "fast" if fast_path else "literal", "timing": {}}
    timing = diag["timing"]
    t0 = time.perf_counter()
    ideal = truncated_ideal_basis(sys)
    diag["step1_rank"] = ideal.rank
    ann = annihilator_functionals(sys, ideal)
    t1 = time.perf_counter()
    timing["steps1_2"] = t1 - t0
    roots = root_functional_basis(sys, ann, fast=fast_path, diagnostics=diag)
    t2 = time.perf_counter()
    timing["steps3_6"] = t2 - t1
    slice_ = ideal_slice_basis(sys, roots)
    t3 = time.perf_counter()
    timing["step7"] = t3 - t2
    unit, coeffs = unit_root_functional(sys, roots, slice_, diag)
    timing["step8"] = time.perf_counter() - t3
    log.debug("solved: D=%d ann=%d roots=%d slice=%d", sys.D, len(ann), len(roots), len(slice_))
    result = SolveResult(sys, sys.delta_f, sys.D, len(ann), roots, slice_, unit, coeffs, diag)
    if verify:
        result.verification = verify_result(result)
    return result


def unit_certificate_holds(sys: PolySystem, unit: BoundedFunctional, ideal_slice: list[Poly]) -> bool:
    """``E'(y).det(grad f) - 1`` lies in the span of the ideal slice."""
    basis = sys.basis
    residual = apply_y(unit, bezoutian(sys).det) - 1
    ech = row_reduce([h.to_vector(basis) for h in ideal_slice], sys.D, sys.field)
    return member(ech, residual.to_vector(basis))


def verify_result(res: SolveResult) -> dict:
    """Run the invariant suite on a solve result; maps check name to pass/fail."""
    sys = res.system
    ctx = extension_context(sys)
    roots, slice_, unit = res.root_basis, res.ideal_slice, res.unit
    report = {}
    report["duality"] = len(roots) + len(slice_) == res.D
    report["roots_kill_slice"] = all(not apply(l, h) for l in roots for h in slice_)
    report["roots_in_annihilator"] = all(annihilates_truncated_ideal(l, sys) for l in roots)
    vecs = [h.to_vector(sys.basis) for h in slice_]
    report["slice_echelon"] = row_reduce(vecs, res.D, sys.field).rows == tuple(tuple(v) for v in vecs)
    report["unit_certificate"] = unit_certificate_holds(sys, unit, slice_)
    report["unit_idempotent"] = ctx.product(unit, unit) == unit
    report["unit_action"] = all(ctx.product(l, unit) == l for l in roots)
    report["commutative"] = all(ctx.product(a, b) == ctx.product(b, a) for a in roots for b in roots)
    ann = annihilator_functionals(sys, truncated_ideal_basis(sys))
    chain = power_span_chain(sys, ann)
    report["stabilization"] = (len(chain) - 1 <= len(ann) + 1
                               and chain[-1].rows == _span(roots, sys).rows
                               and all(chain[i + 1].rank <= chain[i].rank for i in range(len(chain) - 1)))
    return report

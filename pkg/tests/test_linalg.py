from fractions import Fraction

import sympy as sp
from hypothesis import given, settings, strategies as st

from rootfun import GF, QQ
from rootfun.linalg import (annihilator_in_dual, member, null_space, row_reduce, same_span,
                            solve_affine)
from rootfun.poly import monomial_basis
from rootfun.solver import truncated_ideal_at

from conftest import system, xs


def q(rows):
    return [[QQ(v) for v in r] for r in rows]


def test_rref_examples():
    e = row_reduce(q([[2, 0], [0, 0]]), 2, QQ)
    assert e.pivots == (0,) and e.rows == ((1, 0),)
    eye = q([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    e = row_reduce(eye, 3, QQ)
    assert e.rank == 3 and [list(r) for r in e.rows] == eye


def test_rref_of_shifted_quadratic():
    (x,) = xs(1)
    f = x**2 - 1
    b = monomial_basis(1, 3)
    e = row_reduce([f.to_vector(b), (f * x).to_vector(b)], 4, QQ)
    assert e.rank == 2
    # leading coefficient normalised: rows are 1 - x^2 and x - x^3
    assert e.rows == ((1, 0, -1, 0), (0, 1, 0, -1))


def test_null_space_examples():
    ns = null_space([q([[0, 0, 0]])[0]], 3, QQ)
    assert sorted(map(tuple, ns)) == sorted([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    ns = null_space(q([[1, 1]]), 2, QQ)
    assert len(ns) == 1 and ns[0][0] == -ns[0][1] != 0


def test_annihilator_of_monomial_slice():
    x1, x2 = xs(2)
    ideal = truncated_ideal_at(system(x1**2, x2**2), 2)
    ann = annihilator_in_dual(ideal, 6)
    assert len(ann) == 4
    span = row_reduce(ann, 6, QQ)
    support = {i for r in span.rows for i, v in enumerate(r) if v}
    assert support == {0, 1, 2, 4}  # 1, x1, x2, x1*x2


def test_annihilator_extremes():
    full = row_reduce(q([[1, 0], [0, 1]]), 2, QQ)
    assert annihilator_in_dual(full, 2) == []
    empty = row_reduce([], 3, QQ)
    assert row_reduce(annihilator_in_dual(empty, 3), 3, QQ).rank == 3


def test_solve_affine_examples():
    assert solve_affine(q([[1, 0], [0, 1]]), q([[1, 2]])[0], QQ) == [1, 2]
    assert solve_affine(q([[1, 0]]), q([[0, 1]])[0], QQ) is None


def test_member_examples():
    e1 = row_reduce(q([[1, 0]]), 2, QQ)
    assert member(e1, [QQ(0), QQ(0)])
    assert not member(e1, [QQ(0), QQ(1)])
    x1, x2 = xs(2)
    ideal = truncated_ideal_at(system(x1**2, x2**2), 2)
    assert member(ideal, (x1**2).to_vector(monomial_basis(2, 2)))


def matrices(field, max_rows=5, max_cols=5):
    return st.integers(1, max_cols).flatmap(lambda c: st.lists(
        st.lists(st.integers(-4, 4).map(field), min_size=c, max_size=c), max_size=max_rows
    ).map(lambda rows: (rows, c)))


@settings(max_examples=60)
@given(matrices(QQ))
def test_rank_matches_sympy(mc):
    rows, c = mc
    e = row_reduce(rows, c, QQ)
    expected = sp.Matrix(rows).rank() if rows else 0
    assert e.rank == expected
    if rows:
        ref, _ = sp.Matrix(rows).rref()
        ours = [[sp.Rational(v.numerator, v.denominator) for v in r] for r in e.rows]
        assert ours == ref.tolist()[:e.rank]


@settings(max_examples=60)
@given(st.sampled_from([QQ, GF(7), GF(101)]).flatmap(matrices))
def test_rank_nullity_and_duality(mc):
    rows, c = mc
    field = QQ if not rows or isinstance(rows[0][0], Fraction) else GF(rows[0][0].p)
    e = row_reduce(rows, c, field)
    ns = null_space(rows, c, field)
    assert e.rank + len(ns) == c
    for v in ns:
        assert all(sum((a * b for a, b in zip(r, v)), field.zero) == 0 for r in rows)
    ann = annihilator_in_dual(e, c)
    assert same_span(row_reduce(ann, c, field), row_reduce(ns, c, field))
    for r in rows:
        assert member(e, r)


@settings(max_examples=40)
@given(matrices(QQ), st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_solve_affine_reconstructs(mc, coeffs):
    rows, c = mc
    if not rows:
        return
    target = [sum((QQ(k) * r[i] for k, r in zip(coeffs, rows)), QQ.zero) for i in range(c)]
    sol = solve_affine(rows, target, QQ)
    assert sol is not None
    back = [sum((s * r[i] for s, r in zip(sol, rows)), QQ.zero) for i in range(c)]
    assert back == target

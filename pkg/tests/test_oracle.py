import pytest

from rootfun import QQ, BoundedFunctional, solve
from rootfun.linalg import row_reduce, same_span
from rootfun.oracle import (NotStabilized, derivative_functional, evaluation_functional, run_oracle_checks,
                            saturated_ideal_slice, slice_generates_ideal, truncated_ideal_at)
from rootfun.poly import monomial_basis

from conftest import load_fixture, system, xs


def test_truncated_ideal_at_examples():
    (x,) = xs(1)
    sys = system(x**2 - 1)
    assert truncated_ideal_at(sys, 1).rank == 0
    ech = truncated_ideal_at(sys, 3)
    b = monomial_basis(1, 3)
    expected = row_reduce([(x**2 - 1).to_vector(b), (x**3 - x).to_vector(b)], 4, QQ)
    assert same_span(ech, expected)
    x1, x2 = xs(2)
    assert truncated_ideal_at(system(x1**2, x2**3), 0).rank == 0


def test_saturated_slice_examples():
    x1, x2 = xs(2)
    b = monomial_basis(2, 2)
    sys = system(x1**2, x2**2)
    got = saturated_ideal_slice(sys, 2, slack=3)
    assert same_span(got, row_reduce([(x1**2).to_vector(b), (x2**2).to_vector(b)], 6, QQ))
    sys = system(x1**2 - 1, x2**2 - 1)
    got = saturated_ideal_slice(sys, 2, slack=4)
    res = solve(sys)
    assert same_span(got, row_reduce([h.to_vector(b) for h in res.ideal_slice], 6, QQ))
    (x,) = xs(1)
    assert saturated_ideal_slice(system(x**2 - 1), 1).rank == 0


def test_saturation_finds_hidden_members():
    # a degree-2 member of (x1*x2 - 1, x1^2 - x2) that needs degree-3 generators
    x1, x2 = xs(2)
    sys = system(x1 * x2 - 1, x1**2 - x2)
    assert truncated_ideal_at(sys, 2).rank == 2
    sat = saturated_ideal_slice(sys, 2)
    assert sat.rank == 3
    assert (x2**2 - x1).to_vector(monomial_basis(2, 2)) in sat


def test_not_stabilized_surfaces():
    x1, x2 = xs(2)
    with pytest.raises(NotStabilized):
        saturated_ideal_slice(system(x1 * x2 - x2, x1**2 * x2 + x2**2 - 1), 2, slack=1)


def test_evaluation_functional_examples():
    b = monomial_basis(2, 2)
    assert evaluation_functional(b, (0, 0), QQ) == BoundedFunctional.coordinate(b, (0, 0), QQ)
    b1 = monomial_basis(1, 1)
    assert evaluation_functional(b1, (1,), QQ).values == (1, 1)
    assert evaluation_functional(b1, (-1,), QQ).values == (1, -1)
    assert evaluation_functional(b, (1, -1), QQ).values == (1, 1, -1, 1, -1, 1)
    with pytest.raises(ValueError):
        evaluation_functional(b, (1,), QQ)


def test_derivative_functional():
    b = monomial_basis(2, 3)
    assert derivative_functional(b, (2, 3), (0, 0), QQ) == evaluation_functional(b, (2, 3), QQ)
    # coefficient of t1 in (2 + t1)^2 (3 + t2) is 12
    d = derivative_functional(b, (2, 3), (1, 0), QQ)
    assert d.value_at((2, 1)) == 12 and d.value_at((0, 1)) == 0
    with pytest.raises(ValueError):
        derivative_functional(b, (0, 0), (1,), QQ)


def test_slice_generates_ideal_examples():
    x1, x2 = xs(2)
    (x,) = xs(1)
    assert slice_generates_ideal(system(x1**2, x2**2), 1)
    assert slice_generates_ideal(system(x**2 - 1), 1)
    assert slice_generates_ideal(system(x1**2 - 1, x2**2 - 1), 2)


def test_oracle_checks_pass(fixture_name):
    rows = run_oracle_checks(load_fixture(fixture_name))
    failed = [r for r in rows if not r[1]]
    assert not failed, failed


def test_wrong_root_is_caught():
    rows = run_oracle_checks(load_fixture("wrong_root"))
    assert any(not ok for _, ok, _ in rows)
    bad = [name for name, ok, _ in rows if not ok]
    assert any("common zero" in n for n in bad)

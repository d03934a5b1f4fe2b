import pathlib

import pytest
import sympy as sp

from rootfun import Poly, PolySystem
from rootfun.textio import parse_fixture

FIXTURE_DIR = pathlib.Path(__file__).parent / "fixtures"

# the six zero-dimensional fixtures and their root-space dimensions
FIXTURE_DIMS = {
    "x2_minus_1": 2,
    "x2": 2,
    "x3": 3,
    "squares": 4,
    "sign_points": 4,
    "hyperbola_line": 1,
}

_acceptance_lines = []


def load_fixture(name):
    return parse_fixture((FIXTURE_DIR / f"{name}.sys").read_text())


@pytest.fixture(params=list(FIXTURE_DIMS))
def fixture_name(request):
    return request.param


@pytest.fixture
def report():
    """Record one acceptance line; printed in the terminal summary."""
    def _report(criterion, ok, detail=""):
        _acceptance_lines.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f" :: {detail}" if detail else ""))
        return ok
    return _report


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


def xs(n, field=None):
    from rootfun import QQ
    field = field or QQ
    return [Poly.variable(n, i, field) for i in range(n)]


def system(*polys, field=None):
    from rootfun import QQ
    return PolySystem(tuple(polys), field or QQ)


def to_sympy(p, gens):
    expr = sp.Integer(0)
    for m, c in p.terms.items():
        term = sp.Rational(c.numerator, c.denominator)
        for g, e in zip(gens, m):
            term *= g ** e
        expr += term
    return sp.expand(expr)


def sym_gens(n):
    x = sp.symbols(f"x1:{n + 1}")
    y = sp.symbols(f"y1:{n + 1}")
    return list(x), list(y)

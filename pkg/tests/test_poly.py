from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from rootfun import GF, QQ, DoublePoly, InvalidSystem, Poly, PolySystem, monomial_basis, truncate
from rootfun.poly import substitute_xy

from conftest import xs

F5 = GF(5)


def test_monomial_basis_univariate():
    b = monomial_basis(1, 1)
    assert b.monomials == ((0,), (1,))


def test_monomial_basis_bivariate_order():
    b = monomial_basis(2, 2)
    assert len(b) == 6 == comb(4, 2)
    assert b.monomials == ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))


def test_monomial_basis_constants_only():
    assert monomial_basis(3, 0).monomials == ((0, 0, 0),)


@given(st.integers(1, 4), st.integers(0, 8))
def test_basis_size_closed_form(n, bound):
    b = monomial_basis(n, bound)
    assert len(b) == comb(n + bound, n)
    keys = [(sum(m), tuple(-e for e in m)) for m in b.monomials]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    assert all(b.index[m] == i for i, m in enumerate(b.monomials))


def test_truncate_examples():
    (x,) = xs(1)
    assert truncate(x**2 + x, 1) == x
    assert truncate(Poly(1), 3).is_zero
    p = x**3 - 2 * x + 5
    assert truncate(p, p.degree) == p


@st.composite
def polys(draw, n=2, max_deg=5):
    terms = draw(st.dictionaries(
        st.tuples(*[st.integers(0, max_deg)] * n),
        st.integers(-9, 9), max_size=8))
    return Poly(n, {m: QQ(c) for m, c in terms.items()})


@given(polys(), st.integers(0, 8))
def test_truncation_split(p, d):
    t = truncate(p, d)
    assert truncate(t, d) == t
    rest = p - t
    assert p == t + rest
    assert all(sum(m) > d for m in rest.terms)


def test_arithmetic_and_evaluation():
    x1, x2 = xs(2)
    (x,) = xs(1)
    assert (x + 1) * (x - 1) == x**2 - 1
    assert (x1 * x2).evaluate((2, 3)) == 6
    with pytest.raises(ValueError):
        (x1 * x2).evaluate((2,))
    assert (x1 - x1).is_zero


def test_zero_polynomial_has_no_degree():
    z = Poly(2)
    assert z.is_zero
    with pytest.raises(ValueError):
        z.degree


def test_substitute_xy():
    (x,) = xs(1)
    y2 = substitute_xy(x**2, "y")
    assert isinstance(y2, DoublePoly)
    assert y2.terms == {(0, 2): 1}
    assert substitute_xy(x**2, "x").terms == {(2, 0): 1}
    assert y2.format() == "y^2"
    with pytest.raises(ValueError):
        substitute_xy(x, "z")


def test_double_poly_helpers():
    q = DoublePoly(2, {(1, 0): QQ(1), (0, 1): QQ(1), (1, 1): QQ(3)})
    assert q.diagonal() == Poly(1, {(1,): QQ(2), (2,): QQ(3)})
    parts = q.y_parts()
    assert parts[(0,)] == Poly(1, {(1,): QQ(1)})
    assert parts[(1,)] == Poly(1, {(0,): QQ(1), (1,): QQ(3)})


def test_prime_field_polys():
    x1, x2 = xs(2, F5)
    p = (x1 + x2) ** 5
    assert p == x1**5 + x2**5


def test_format():
    x1, x2 = xs(2)
    p = 3 * x1**2 * x2 - x2 + QQ("1/2")
    assert p.format() == "3*x1^2*x2 - x2 + 1/2"
    assert (-x1).format(["a", "b"]) == "-a"
    assert Poly(2).format() == "0"


def test_poly_system_degrees():
    x1, x2 = xs(2)
    s = PolySystem((x1**2 - 1, x2**3))
    assert s.degrees == (2, 3)
    assert s.delta_f == 3
    assert s.D == comb(5, 2) == len(s.basis)


def test_poly_system_rejects_bad_input():
    x1, x2 = xs(2)
    with pytest.raises(InvalidSystem):
        PolySystem((Poly.constant(1, 3),))
    with pytest.raises(InvalidSystem):
        PolySystem((x1, Poly(2)))
    with pytest.raises(InvalidSystem):
        PolySystem((x1,))
    with pytest.raises(InvalidSystem):
        PolySystem((x1, x2), F5)


@settings(max_examples=30)
@given(polys(), polys())
def test_ring_laws(p, q):
    assert p * q == q * p
    assert (p + q) * p == p * p + q * p
    assert hash(p + q) == hash(q + p)

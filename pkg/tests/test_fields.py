from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rootfun.fields import GF, QQ, GFElement, NotPrime, count_ops, field_from_spec

F7 = GF(7)
F32003 = GF(32003)

rationals = st.fractions(max_denominator=50).map(lambda q: q.limit_denominator(50))
residues = st.integers(0, 32002).map(F32003)


@pytest.mark.parametrize("elems", [rationals, residues], ids=["QQ", "GF32003"])
@given(data=st.data())
def test_field_axioms(elems, data):
    a, b, c = data.draw(elems), data.draw(elems), data.draw(elems)
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if b:
        assert (a / b) * b == a


def test_rational_canonical_form():
    a = QQ(Fraction(6, -4))
    assert (a.numerator, a.denominator) == (-3, 2)
    assert QQ(Fraction(2, 4)) == QQ("1/2")


def test_prime_field_residues():
    assert F7(-1).v == 6
    assert F7(10) == F7(3)
    assert F7("1/2") * 2 == 1
    assert str(F7(-3)) == "4"
    with pytest.raises(ZeroDivisionError):
        F7(3) / F7(0)
    with pytest.raises(ValueError):
        F7(1) + GF(5)(1)


def test_not_prime():
    with pytest.raises(NotPrime):
        GF(8)
    with pytest.raises(NotPrime):
        field_from_spec("Fp 1")


def test_field_spec_round_trip():
    assert field_from_spec("Q") is QQ
    assert field_from_spec("Fp 7") == F7
    assert field_from_spec(F7.spec()) == F7
    with pytest.raises(ValueError):
        field_from_spec("R")


def test_op_counter_counts_prime_field_arithmetic():
    a, b = F7(3), F7(5)
    with count_ops() as c:
        a + b
        a * b
        a - b
        a / b
        -a
    assert c.ops == 5
    with count_ops() as c:
        a == b, bool(a)
    assert c.ops == 0


def test_gf_element_hash_and_int_interop():
    assert hash(F7(3)) == hash(F7(10))
    assert 3 + F7(5) == F7(1)
    assert isinstance(2 * F7(3), GFElement)

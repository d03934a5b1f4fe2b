"""Exact coefficient fields: the rationals and prime fields GF(p).

Rationals are plain :class:`fractions.Fraction` values (always reduced, with a
positive denominator).  Prime-field elements are :class:`GFElement` instances
holding the least non-negative residue.  Both support the ordinary Python
arithmetic operators, so the rest of the package is written once against
``+ - * /`` and ``bool(x)`` as the zero test.

Prime-field arithmetic is instrumented: every ``+ - * /`` and negation bumps a
global counter, read through :func:`count_ops`.
"""

from __future__ import annotations

import contextlib
from fractions import Fraction

__all__ = ["QQ", "GF", "GFElement", "RationalField", "PrimeField", "NotPrime",
           "count_ops", "field_from_spec"]


class NotPrime(ValueError):
    pass


class _Tally:
    __slots__ = ("n",)

    def __init__(self):
        self.n = 0


_tally = _Tally()


class OpCount:
    """Result holder for :func:`count_ops`; ``ops`` is filled in on exit."""

    def __init__(self):
        self.ops = 0


@contextlib.contextmanager
def count_ops():
    """Count prime-field operations performed inside the ``with`` block."""
    rec = OpCount()
    start = _tally.n
    try:
        yield rec
    finally:
        rec.ops = _tally.n - start


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


class RationalField:
    name = "Q"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, GFElement):
            raise TypeError("cannot coerce a prime-field element into Q")
        return Fraction(value)

    def format(self, a) -> str:
        return str(a)

    def spec(self) -> str:
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class GFElement:
    """Residue modulo a prime ``p``, stored as the least non-negative representative."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, o):
        if type(o) is GFElement:
            if o.p != self.p:
                raise ValueError(f"mixing GF({self.p}) and GF({o.p})")
            return o.v
        if isinstance(o, int):
            return o
        return NotImplemented

    def __add__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        _tally.n += 1
        return GFElement(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        _tally.n += 1
        return GFElement(self.v - w, self.p)

    def __rsub__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        _tally.n += 1
        return GFElement(w - self.v, self.p)

    def __mul__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        _tally.n += 1
        return GFElement(self.v * w, self.p)

    __rmul__ = __mul__

    def __truediv__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        if w % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        _tally.n += 1
        return GFElement(self.v * pow(w, -1, self.p), self.p)

    def __rtruediv__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        _tally.n += 1
        return GFElement(w * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        _tally.n += 1
        return GFElement(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            return 1 / GFElement(pow(self.v, -k, self.p), self.p)
        return GFElement(pow(self.v, k, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, o):
        if type(o) is GFElement:
            return self.p == o.p and self.v == o.v
        if isinstance(o, int):
            return self.v == o % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"GF{self.p}({self.v})"

    def __str__(self):
        return str(self.v)


class PrimeField:
    characteristic: int

    def __init__(self, p: int):
        if not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = self.characteristic = p
        self.name = f"GF({p})"
        self.zero = GFElement(0, p)
        self.one = GFElement(1, p)

    def __call__(self, value) -> GFElement:
        if isinstance(value, GFElement):
            if value.p != self.p:
                raise ValueError(f"element of GF({value.p}) is not in GF({self.p})")
            return value
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({self.p})")
            return GFElement(value.numerator * pow(value.denominator, -1, self.p), self.p)
        return GFElement(int(value), self.p)

    def format(self, a) -> str:
        return str(a.v)

    def spec(self) -> str:
        return f"Fp {self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(text: str):
    """Parse ``"Q"`` or ``"Fp <p>"`` into a field object."""
    parts = text.split()
    if parts == ["Q"]:
        return QQ
    if len(parts) == 2 and parts[0] == "Fp" and parts[1].isdigit():
        return PrimeField(int(parts[1]))
    raise ValueError(f"unknown field {text!r}; expected 'Q' or 'Fp <prime>'")

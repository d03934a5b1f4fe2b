"""System files and JSON certificates.

A system file is line oriented::

    # comment
    field: Q            (or: field: Fp 32003)
    vars: x1 x2
    poly: x1^2 - 1
    poly: x2^2 - 1
    root: 1 -1          (optional; fixtures only)
    root: 0 0 | 0 0, 1 0, 0 1, 1 1

Expressions use integers, the declared variables, ``+ - * ^`` and
parentheses.  ``^`` binds tightest and takes a non-negative integer literal;
juxtaposition such as ``2x`` is rejected.  A ``root:`` line lists exact point
coordinates and, after ``|``, the exponent vectors of the derivative
functionals living at that point (none means a simple root).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .fields import NotPrime, field_from_spec
from .functionals import BoundedFunctional
from .oracle import RootFixture
from .poly import Poly, PolySystem, format_monomial, monomial_basis
from .solver import SolveResult, unit_certificate_holds

CERT_FORMAT = "rootfun-certificate/1"


class SystemFileError(ValueError):
    pass


class SystemSyntaxError(SystemFileError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", col {col}" if col is not None else "") + ": "
        super().__init__(where + message)
        self.message = message
        self.line = line
        self.col = col


class ArityMismatch(SystemFileError):
    pass


@dataclass
class SystemFile:
    field_spec: str
    variables: list
    polynomials: list
    roots: list = dc_field(default_factory=list)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("int", int(m.group(1)), start))
        elif m.group(2):
            toks.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise SystemSyntaxError(f"unexpected character {ch!r}", col=start + 1)
            toks.append((ch, ch, start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    """Recursive descent over expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
    factor := ('+'|'-') factor | power; power := atom ('^' int)?; atom := int | var | '(' expr ')'."""

    def __init__(self, text, variables, field):
        self.toks = _tokenize(text)
        self.i = 0
        self.vars = {v: k for k, v in enumerate(variables)}
        self.n = len(variables)
        self.field = field

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return SystemSyntaxError(msg, col=tok[2] + 1)

    def parse(self) -> Poly:
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("int", "name", "("):
                raise self.error("implicit multiplication is not allowed; use '*'")
            raise self.error(f"unexpected {tok[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while self.peek()[0] == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self):
        kind = self.peek()[0]
        if kind in ("+", "-"):
            self.take()
            p = self.factor()
            return -p if kind == "-" else p
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                raise self.error("exponent must be a non-negative integer literal", tok)
            base = base ** tok[1]
            if self.peek()[0] == "^":
                raise self.error("chained '^' is ambiguous; use parentheses")
        return base

    def atom(self):
        tok = self.take()
        kind = tok[0]
        if kind == "int":
            return Poly.constant(self.n, tok[1], self.field)
        if kind == "name":
            if tok[1] not in self.vars:
                raise self.error(f"undeclared variable {tok[1]!r}", tok)
            return Poly.variable(self.n, self.vars[tok[1]], self.field)
        if kind == "(":
            p = self.expr()
            if self.take()[0] != ")":
                raise self.error("missing ')'", self.toks[self.i - 1])
            return p
        if kind == "end":
            raise self.error("unexpected end of expression", tok)
        raise self.error(f"unexpected {tok[1]!r}", tok)


def parse_poly(text: str, variables, field) -> Poly:
    return _Parser(text, list(variables), field).parse()


def _parse_root(body: str, n: int, lineno: int):
    point_txt, _, betas_txt = body.partition("|")
    try:
        point = [Fraction(t) for t in point_txt.replace(",", " ").split()]
    except (ValueError, ZeroDivisionError):
        raise SystemSyntaxError(f"bad root coordinates {point_txt.strip()!r}", lineno) from None
    if len(point) != n:
        raise SystemSyntaxError(f"root has {len(point)} coordinates, expected {n}", lineno)
    betas = []
    if betas_txt.strip():
        for chunk in betas_txt.split(","):
            parts = chunk.split()
            if len(parts) != n or not all(p.isdigit() for p in parts):
                raise SystemSyntaxError(f"bad exponent vector {chunk.strip()!r}", lineno)
            betas.append(tuple(int(p) for p in parts))
    return point, betas


def parse_system(text: str) -> tuple[SystemFile, PolySystem]:
    field_spec = None
    variables = None
    polys: list = []
    roots_raw: list = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, body = line.partition(":")
        key = key.strip()
        body = body.strip()
        if not sep:
            raise SystemSyntaxError(f"expected 'key: value', got {line!r}", lineno)
        if key == "field":
            if field_spec is not None:
                raise SystemSyntaxError("duplicate field line", lineno)
            field_spec = " ".join(body.split())
            try:
                field = field_from_spec(field_spec)
            except NotPrime:
                raise
            except ValueError as e:
                raise SystemSyntaxError(str(e), lineno) from None
        elif key == "vars":
            if variables is not None:
                raise SystemSyntaxError("duplicate vars line", lineno)
            variables = body.replace(",", " ").split()
            if not variables:
                raise SystemSyntaxError("no variables declared", lineno)
            for v in variables:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
                    raise SystemSyntaxError(f"bad variable name {v!r}", lineno)
            if len(set(variables)) != len(variables):
                raise SystemSyntaxError("variable names must be distinct", lineno)
        elif key == "poly":
            polys.append((lineno, body))
        elif key == "root":
            roots_raw.append((lineno, body))
        else:
            raise SystemSyntaxError(f"unknown key {key!r}", lineno)
    if field_spec is None:
        raise SystemSyntaxError("missing 'field:' line")
    if variables is None:
        raise SystemSyntaxError("missing 'vars:' line")
    if len(polys) != len(variables):
        raise ArityMismatch(f"{len(polys)} polynomials for {len(variables)} variables")
    parsed = []
    for lineno, body in polys:
        try:
            parsed.append(parse_poly(body, variables, field))
        except SystemSyntaxError as e:
            raise SystemSyntaxError(e.message, lineno, e.col) from None
    roots = []
    for lineno, body in roots_raw:
        point, betas = _parse_root(body, len(variables), lineno)
        roots.append((tuple(field(c) for c in point), betas))
    sf = SystemFile(field_spec, list(variables), [p.format(variables) for p in parsed], roots)
    return sf, PolySystem(tuple(parsed), field, tuple(variables))


def parse_fixture(text: str) -> RootFixture:
    sf, sys = parse_system(text)
    return RootFixture(sys, sf.roots)


def format_system(sf: SystemFile) -> str:
    lines = [f"field: {sf.field_spec}", "vars: " + " ".join(sf.variables)]
    lines += [f"poly: {p}" for p in sf.polynomials]
    for point, betas in sf.roots:
        s = "root: " + " ".join(str(c) for c in point)
        if betas:
            s += " | " + ", ".join(" ".join(str(e) for e in b) for b in betas)
        lines.append(s)
    return "\n".join(lines) + "\n"


# -- certificates ---------------------------------------------------------

def _functional_map(l: BoundedFunctional, names) -> dict:
    fmt = l.field.format
    return {format_monomial(m, names): fmt(v) for m, v in zip(l.basis.monomials, l.values)}


def _poly_map(p: Poly, basis, names) -> dict:
    fmt = p.field.format
    return {format_monomial(m, names): fmt(p.terms[m]) for m in basis.monomials if m in p.terms}


@dataclass
class Certificate:
    field: str
    vars: list
    polys: list
    delta_f: int
    D: int
    ann_dim: int
    basis: list
    root_basis: list
    ideal_slice: list
    unit: dict
    unit_coeffs: dict
    status: str = "ok"
    verification: dict | None = None
    order: str = "grlex"
    format: str = CERT_FORMAT

    @classmethod
    def from_result(cls, res: SolveResult) -> "Certificate":
        sys = res.system
        names = sys.names
        fmt = sys.field.format
        basis = sys.basis
        return cls(
            field=sys.field.spec(),
            vars=list(names),
            polys=sys.format(),
            delta_f=res.delta_f,
            D=res.D,
            ann_dim=res.ann_dim,
            basis=[format_monomial(m, names) for m in basis.monomials],
            root_basis=[_functional_map(l, names) for l in res.root_basis],
            ideal_slice=[_poly_map(h, basis, names) for h in res.ideal_slice],
            unit=_functional_map(res.unit, names),
            unit_coeffs={k: [fmt(c) for c in v] for k, v in res.unit_coeffs.items()},
            status="no_roots" if res.diagnostics.get("no_roots") else "ok",
            verification=dict(res.verification) if res.verification is not None else None,
        )

    def to_dict(self) -> dict:
        return {
            "format": self.format,
            "field": self.field,
            "vars": self.vars,
            "polys": self.polys,
            "order": self.order,
            "delta_f": self.delta_f,
            "D": self.D,
            "ann_dim": self.ann_dim,
            "status": self.status,
            "basis": self.basis,
            "root_basis": self.root_basis,
            "ideal_slice": self.ideal_slice,
            "unit": self.unit,
            "unit_coeffs": self.unit_coeffs,
            "verification": self.verification,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        if d.get("format") != CERT_FORMAT:
            raise ValueError(f"not a {CERT_FORMAT} document")
        keys = ("field", "vars", "polys", "delta_f", "D", "ann_dim", "basis", "root_basis",
                "ideal_slice", "unit", "unit_coeffs", "status", "verification", "order", "format")
        return cls(**{k: d[k] for k in keys})

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))

    def system(self) -> PolySystem:
        field = field_from_spec(self.field)
        polys = tuple(parse_poly(p, self.vars, field) for p in self.polys)
        return PolySystem(polys, field, tuple(self.vars))


def revalidate(cert: Certificate) -> bool:
    """Re-check the unit certificate from the stored data alone (no solving)."""
    sys = cert.system()
    field = sys.field
    names = sys.names
    basis = monomial_basis(sys.n, sys.delta_f)
    labels = [format_monomial(m, names) for m in basis.monomials]
    if labels != cert.basis or sys.D != cert.D or sys.delta_f != cert.delta_f:
        return False
    unit = BoundedFunctional(basis, tuple(field(cert.unit[k]) for k in labels), field)
    lookup = dict(zip(labels, basis.monomials))
    slice_ = [Poly(sys.n, {lookup[k]: field(v) for k, v in h.items()}, field) for h in cert.ideal_slice]
    return unit_certificate_holds(sys, unit, slice_)


def format_result_text(res: SolveResult) -> str:
    sys = res.system
    names = sys.names
    out = [f"system over {sys.field.name}: " + ", ".join(sys.format()),
           f"delta_f = {res.delta_f}, D = {res.D}, annihilator dim = {res.ann_dim}",
           f"root functionals: {len(res.root_basis)}"]
    for i, l in enumerate(res.root_basis, 1):
        vals = ", ".join(f"{k}: {v}" for k, v in _functional_map(l, names).items())
        out.append(f"  l{i} = {{{vals}}}")
    out.append(f"ideal slice: {len(res.ideal_slice)}")
    for i, h in enumerate(res.ideal_slice, 1):
        out.append(f"  h{i} = {h.format(names)}")
    vals = ", ".join(f"{k}: {v}" for k, v in _functional_map(res.unit, names).items())
    out.append(f"unit functional E' = {{{vals}}}")
    if res.diagnostics.get("no_roots"):
        out.append("no roots: 1 lies in the ideal")
    if res.verification is not None:
        out.append("verification:")
        for k, v in res.verification.items():
            out.append(f"  {'pass' if v else 'FAIL'}  {k}")
    return "\n".join(out) + "\n"

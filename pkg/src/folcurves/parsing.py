"""Recursive-descent parser for polynomial and differential-form expressions.

Grammar (whitespace insensitive):

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*' | '/\\') factor)*
    factor := atom ('^' (NAT | factor))?
    atom   := NAT ('/' NAT)? | NAME | '(' expr ')'

Scalar names are z0..z3 with aliases x,y,z,t; form atoms are dz0..dz3.
'^' works as exponent on a scalar base followed by a natural number and as
a wedge otherwise; '/\\' is always a wedge.  Products mixing scalars and
forms scale the form.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegreeMismatchError, NotHomogeneousError, ParseError
from .polyring import HomogeneousPolynomial

_ALIASES = {"x": 0, "y": 1, "z": 2, "t": 3, "z0": 0, "z1": 1, "z2": 2, "z3": 3}
_FORM_ATOMS = {"dz0": 0, "dz1": 1, "dz2": 2, "dz3": 3}


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("num", int(text[i:j])))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j]))
            i = j
            continue
        if ch == "/" and i + 1 < n and text[i + 1] == "\\":
            tokens.append(("op", "/\\"))
            i += 2
            continue
        if ch in "+-*^()/":
            tokens.append(("op", ch))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r} at position {i}")
    tokens.append(("end", None))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, val = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val!r}")

    def parse(self):
        value = self.expr()
        kind, val = self.peek()
        if kind != "end":
            raise ParseError(f"trailing input near {val!r}")
        return value

    def expr(self):
        kind, val = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.next()
            negate = val == "-"
        value = self.term()
        if negate:
            value = _neg(value)
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                rhs = self.term()
                value = _add(value, _neg(rhs) if val == "-" else rhs)
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in ("*", "/\\"):
                self.next()
                value = _mul(value, self.factor())
            else:
                return value

    def factor(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.next()
            kind2, val2 = self.peek()
            if kind2 == "num":
                if not isinstance(base, HomogeneousPolynomial):
                    raise ParseError("exponent applies only to scalar atoms")
                self.next()
                return base ** val2
            rhs = self.factor()
            if isinstance(base, HomogeneousPolynomial) and isinstance(
                rhs, HomogeneousPolynomial
            ):
                raise ParseError("'^' between scalars needs a natural-number exponent")
            return _mul(base, rhs)
        return base

    def atom(self):
        kind, val = self.next()
        if kind == "num":
            k2, v2 = self.peek()
            if k2 == "op" and v2 == "/":
                self.next()
                k3, v3 = self.next()
                if k3 != "num" or v3 == 0:
                    raise ParseError("malformed rational literal")
                return HomogeneousPolynomial.constant(Fraction(val, v3))
            return HomogeneousPolynomial.constant(val)
        if kind == "name":
            if val in _ALIASES:
                return HomogeneousPolynomial.variable(_ALIASES[val])
            if val in _FORM_ATOMS:
                from .forms import TwistedForm

                return TwistedForm.basis_covector(_FORM_ATOMS[val])
            raise ParseError(f"unknown name {val!r}")
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError(f"unexpected token {val!r}")


def _neg(value):
    return -value


def _add(a, b):
    from .forms import TwistedForm

    if isinstance(a, HomogeneousPolynomial) != isinstance(b, HomogeneousPolynomial):
        raise NotHomogeneousError("cannot add a scalar and a differential form")
    try:
        return a + b
    except DegreeMismatchError as exc:
        raise NotHomogeneousError(str(exc)) from exc


def _mul(a, b):
    from .forms import TwistedForm, wedge

    a_poly = isinstance(a, HomogeneousPolynomial)
    b_poly = isinstance(b, HomogeneousPolynomial)
    if a_poly and b_poly:
        return a * b
    if a_poly:
        return b.scale_by_polynomial(a)
    if b_poly:
        return a.scale_by_polynomial(b)
    return wedge(a, b)


def parse_value(text: str):
    """Parse an expression into a polynomial or a twisted form."""
    if not text or not text.strip():
        raise ParseError("empty expression")
    return _Parser(text).parse()


def parse_scalar(text: str) -> HomogeneousPolynomial:
    value = parse_value(text)
    if not isinstance(value, HomogeneousPolynomial):
        raise ParseError("expected a scalar polynomial, found a differential form")
    return value

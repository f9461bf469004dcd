"""Exact homogeneous polynomial arithmetic in z0..z3 over the rationals.

A monomial is a 4-tuple of non-negative exponents.  Monomials are compared
in degrevlex: total degree first, ties broken so that the rightmost nonzero
entry of the exponent difference decides (larger key means larger monomial).
A homogeneous polynomial is a degree tag plus a sparse map from monomials of
that degree to nonzero Fractions; the zero polynomial keeps its degree tag
so that graded maps stay well typed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DegreeMismatchError, NotHomogeneousError

NVARS = 4
VAR_NAMES = ("z0", "z1", "z2", "z3")

Monomial = tuple  # 4-tuple of non-negative ints

ONE_MONO: Monomial = (0, 0, 0, 0)


def mono_degree(m: Monomial) -> int:
    return m[0] + m[1] + m[2] + m[3]


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


def mono_divides(d: Monomial, m: Monomial) -> bool:
    return d[0] <= m[0] and d[1] <= m[1] and d[2] <= m[2] and d[3] <= m[3]


def mono_quotient(m: Monomial, d: Monomial) -> Monomial:
    return (m[0] - d[0], m[1] - d[1], m[2] - d[2], m[3] - d[3])


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return (max(a[0], b[0]), max(a[1], b[1]), max(a[2], b[2]), max(a[3], b[3]))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def degrevlex_key(m: Monomial):
    """Sort key; larger key means larger monomial in degrevlex."""
    return (m[0] + m[1] + m[2] + m[3], -m[3], -m[2], -m[1], -m[0])


def mono_str(m: Monomial) -> str:
    if m == ONE_MONO:
        return "1"
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(VAR_NAMES[i])
        elif e > 1:
            parts.append(f"{VAR_NAMES[i]}^{e}")
    return "*".join(parts)


@lru_cache(maxsize=None)
def monomials_of_degree(k: int) -> tuple:
    """All degree-k monomials, descending degrevlex."""
    if k < 0:
        return ()
    out = []
    for e0 in range(k, -1, -1):
        for e1 in range(k - e0, -1, -1):
            for e2 in range(k - e0 - e1, -1, -1):
                out.append((e0, e1, e2, k - e0 - e1 - e2))
    out.sort(key=degrevlex_key, reverse=True)
    return tuple(out)


def graded_piece_dimension(k: int) -> int:
    """Dimension of the degree-k piece of the coordinate ring, C(k+3,3)."""
    return comb(k + 3, 3) if k >= 0 else 0


class HomogeneousPolynomial:
    """Sparse homogeneous polynomial with exact rational coefficients."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms=None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c == 0:
                    continue
                if mono_degree(m) != degree:
                    raise NotHomogeneousError(
                        f"monomial {mono_str(m)} has degree {mono_degree(m)}, "
                        f"expected {degree}"
                    )
                clean[m] = c
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("HomogeneousPolynomial is immutable")

    @classmethod
    def zero(cls, degree: int = 0) -> "HomogeneousPolynomial":
        return cls(degree, {})

    @classmethod
    def from_term(cls, mono: Monomial, coeff=1) -> "HomogeneousPolynomial":
        return cls(mono_degree(mono), {mono: Fraction(coeff)})

    @classmethod
    def variable(cls, i: int) -> "HomogeneousPolynomial":
        mono = tuple(1 if j == i else 0 for j in range(NVARS))
        return cls(1, {mono: Fraction(1)})

    @classmethod
    def constant(cls, c) -> "HomogeneousPolynomial":
        return cls(0, {ONE_MONO: Fraction(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def sorted_terms(self):
        """Terms as (monomial, coefficient) pairs, descending degrevlex."""
        return sorted(self.terms.items(), key=lambda t: degrevlex_key(t[0]), reverse=True)

    def lead_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no lead monomial")
        return max(self.terms, key=degrevlex_key)

    def lead_coefficient(self) -> Fraction:
        return self.terms[self.lead_monomial()]

    def __add__(self, other: "HomogeneousPolynomial") -> "HomogeneousPolynomial":
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"cannot add degree {self.degree} and degree {other.degree}"
            )
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m, 0) + c
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        out = HomogeneousPolynomial.__new__(HomogeneousPolynomial)
        object.__setattr__(out, "degree", self.degree)
        object.__setattr__(out, "terms", res)
        return out

    def __sub__(self, other: "HomogeneousPolynomial") -> "HomogeneousPolynomial":
        return self + (-other)

    def __neg__(self) -> "HomogeneousPolynomial":
        out = HomogeneousPolynomial.__new__(HomogeneousPolynomial)
        object.__setattr__(out, "degree", self.degree)
        object.__setattr__(out, "terms", {m: -c for m, c in self.terms.items()})
        return out

    def scale(self, c) -> "HomogeneousPolynomial":
        c = Fraction(c)
        out = HomogeneousPolynomial.__new__(HomogeneousPolynomial)
        object.__setattr__(out, "degree", self.degree)
        if c == 0:
            object.__setattr__(out, "terms", {})
        else:
            object.__setattr__(out, "terms", {m: v * c for m, v in self.terms.items()})
        return out

    def multiply_monomial(self, mono: Monomial, coeff=1) -> "HomogeneousPolynomial":
        coeff = Fraction(coeff)
        out = HomogeneousPolynomial.__new__(HomogeneousPolynomial)
        object.__setattr__(out, "degree", self.degree + mono_degree(mono))
        if coeff == 0:
            object.__setattr__(out, "terms", {})
        else:
            object.__setattr__(
                out, "terms", {mono_mul(m, mono): c * coeff for m, c in self.terms.items()}
            )
        return out

    def __mul__(self, other):
        if isinstance(other, HomogeneousPolynomial):
            res = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = mono_mul(m1, m2)
                    s = res.get(m, 0) + c1 * c2
                    if s:
                        res[m] = s
                    else:
                        res.pop(m, None)
            out = HomogeneousPolynomial.__new__(HomogeneousPolynomial)
            object.__setattr__(out, "degree", self.degree + other.degree)
            object.__setattr__(out, "terms", res)
            return out
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> "HomogeneousPolynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = HomogeneousPolynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def monic(self) -> "HomogeneousPolynomial":
        if not self.terms:
            return self
        return self.scale(1 / self.lead_coefficient())

    def partial(self, i: int) -> "HomogeneousPolynomial":
        """Partial derivative with respect to z_i."""
        deg = max(self.degree - 1, 0)
        res = {}
        for m, c in self.terms.items():
            if m[i] == 0:
                continue
            d = list(m)
            d[i] -= 1
            res[tuple(d)] = c * m[i]
        return HomogeneousPolynomial(deg, res)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomogeneousPolynomial):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return self.degree == other.degree
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if m == ONE_MONO:
                body = str(c)
            elif c == 1:
                body = mono_str(m)
            else:
                body = f"{c}*{mono_str(m)}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"HomogeneousPolynomial({self})"


def parse_polynomial(text: str) -> HomogeneousPolynomial:
    """Parse an expression in z0..z3 (aliases x,y,z,t) into canonical form.

    Raises ParseError on malformed input and NotHomogeneousError when the
    expression mixes total degrees.
    """
    from .parsing import parse_scalar

    return parse_scalar(text)

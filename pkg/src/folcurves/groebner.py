"""Groebner bases, Hilbert data, graded syzygies, free resolutions and the
first-cohomology dimensions of curve ideal sheaves.

Everything is exact.  The monomial order is fixed to degrevlex.  Hilbert
series of lead-term ideals drive degree and genus; resolutions are built
degree by degree with sparse rational elimination; the per-twist first
cohomology of a curve's ideal sheaf comes from graded duality applied to
the dualized tail of the resolution, so no saturation is ever computed.

The per-layer truncation degrees rest on two facts: generator twists in a
minimal resolution of S/I never exceed reg(S/I) + layer index, and
reg(S/I) is bounded by the regularity of the lead-term quotient, which is
computed by a recursive bound for monomial ideals.  A dimension audit over
all degrees up to the truncation bound cross-checks the construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import (
    DegreeMismatchError,
    NotACurveError,
    ResourceLimitError,
    WindowTooSmallError,
)
from .linalg import Echelon, kernel_of_columns
from .polyring import (
    HomogeneousPolynomial,
    NVARS,
    ONE_MONO,
    degrevlex_key,
    graded_piece_dimension,
    mono_coprime,
    mono_degree,
    mono_divides,
    mono_lcm,
    mono_mul,
    mono_quotient,
    monomials_of_degree,
)

DEFAULT_PAIR_CAP = 100_000


# ---------------------------------------------------------------------------
# division and Buchberger


def normal_form(f: HomogeneousPolynomial, basis) -> HomogeneousPolynomial:
    """Remainder of f under division by a list of nonzero polynomials."""
    table = [(g.lead_monomial(), g.lead_coefficient(), g) for g in basis if g]
    work = dict(f.terms)
    remainder = {}
    while work:
        m = max(work, key=degrevlex_key)
        c = work.pop(m)
        for lm, lc, g in table:
            if mono_divides(lm, m):
                q = mono_quotient(m, lm)
                factor = c / lc
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    mm = mono_mul(gm, q)
                    s = work.get(mm, 0) - factor * gc
                    if s:
                        work[mm] = s
                    else:
                        work.pop(mm, None)
                break
        else:
            remainder[m] = c
    return HomogeneousPolynomial(f.degree, remainder)


def s_polynomial(f: HomogeneousPolynomial, g: HomogeneousPolynomial) -> HomogeneousPolynomial:
    lcm = mono_lcm(f.lead_monomial(), g.lead_monomial())
    mf = mono_quotient(lcm, f.lead_monomial())
    mg = mono_quotient(lcm, g.lead_monomial())
    return f.multiply_monomial(mf, 1 / f.lead_coefficient()) - g.multiply_monomial(
        mg, 1 / g.lead_coefficient()
    )


def _interreduce(basis):
    """Autoreduced basis: monic, no term reducible by another element's lead.

    Remainders of dropped elements are kept (they carry new lead terms), so
    no ideal content is lost; the loop runs until the set is stable.
    """
    current = [g.monic() for g in basis if g]
    while True:
        current.sort(key=lambda g: degrevlex_key(g.lead_monomial()))
        result = []
        changed = False
        for i, g in enumerate(current):
            others = result + current[i + 1:]
            r = normal_form(g, others) if others else g
            if not r:
                changed = True
                continue
            r = r.monic()
            if r != g:
                changed = True
            result.append(r)
        current = result
        if not changed:
            return current


def buchberger(generators, pair_cap: int = DEFAULT_PAIR_CAP, degree_cap=None):
    """Reduced degrevlex Groebner basis.

    Pairs are processed in normal strategy order (lowest lcm first) with the
    product and chain criteria.  Raises ResourceLimitError when more than
    pair_cap pairs are processed or an S-polynomial exceeds degree_cap.
    """
    basis = _interreduce(list(generators))
    if not basis:
        return []
    if basis[0].degree == 0:
        return [HomogeneousPolynomial.constant(1)]

    lead = [g.lead_monomial() for g in basis]
    pending = set()
    for i in range(len(basis)):
        for j in range(i):
            pending.add((j, i))

    def pair_key(pair):
        lcm = mono_lcm(lead[pair[0]], lead[pair[1]])
        return (mono_degree(lcm),) + tuple(degrevlex_key(lcm)[1:]) + pair

    processed = 0
    while pending:
        pair = min(pending, key=pair_key)
        pending.discard(pair)
        processed += 1
        if processed > pair_cap:
            raise ResourceLimitError(f"pair cap {pair_cap} exceeded")
        i, j = pair
        if mono_coprime(lead[i], lead[j]):
            continue
        lcm = mono_lcm(lead[i], lead[j])
        chained = False
        for k in range(len(basis)):
            if k in (i, j) or not mono_divides(lead[k], lcm):
                continue
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if pik not in pending and pjk not in pending:
                chained = True
                break
        if chained:
            continue
        spoly = s_polynomial(basis[i], basis[j])
        if degree_cap is not None and spoly.degree > degree_cap:
            raise ResourceLimitError(f"degree cap {degree_cap} exceeded")
        r = normal_form(spoly, basis)
        if not r:
            continue
        r = r.monic()
        basis.append(r)
        lead.append(r.lead_monomial())
        new = len(basis) - 1
        for k in range(new):
            pending.add((k, new))
    return _interreduce(basis)


# ---------------------------------------------------------------------------
# Hilbert series of monomial ideals


def _minimalize(gens):
    gens = sorted(set(gens), key=mono_degree)
    out = []
    for g in gens:
        if not any(mono_divides(h, g) for h in out):
            out.append(g)
    return tuple(sorted(out))


def _support(m):
    return [i for i in range(NVARS) if m[i]]


@lru_cache(maxsize=None)
def _hilbert_numerator(gens: tuple) -> tuple:
    """Coefficients of HS(S/J) * (1-t)^4 for a monomial ideal J.

    Returned as a tuple of (exponent, coefficient) pairs.
    """
    gens = _minimalize(gens)
    if not gens:
        return ((0, 1),)
    if ONE_MONO in gens:
        return ()
    pure = all(len(_support(g)) == 1 for g in gens)
    if pure:
        coeffs = {0: 1}
        for g in gens:
            d = mono_degree(g)
            nxt = dict(coeffs)
            for a, c in coeffs.items():
                nxt[a + d] = nxt.get(a + d, 0) - c
            coeffs = {a: c for a, c in nxt.items() if c}
        return tuple(sorted(coeffs.items()))
    counts = [0] * NVARS
    for g in gens:
        if len(_support(g)) > 1 or max(g) > 1:
            for i in _support(g):
                counts[i] += 1
    v = max(range(NVARS), key=lambda i: counts[i])
    pivot = tuple(1 if i == v else 0 for i in range(NVARS))
    colon = []
    for g in gens:
        if g[v] > 0:
            colon.append(tuple(e - 1 if i == v else e for i, e in enumerate(g)))
        else:
            colon.append(g)
    plus = [g for g in gens if g[v] == 0] + [pivot]
    res = {}
    for a, c in _hilbert_numerator(_minimalize(tuple(plus))):
        res[a] = res.get(a, 0) + c
    for a, c in _hilbert_numerator(_minimalize(tuple(colon))):
        res[a + 1] = res.get(a + 1, 0) + c
    return tuple(sorted((a, c) for a, c in res.items() if c))


@lru_cache(maxsize=None)
def _regularity_bound(gens: tuple) -> int:
    """Upper bound for reg(S/J), J monomial; exact on complete intersections."""
    gens = _minimalize(gens)
    if not gens or ONE_MONO in gens:
        return 0
    mixed = [g for g in gens if len(_support(g)) > 1]
    if not mixed:
        return sum(mono_degree(g) - 1 for g in gens)
    counts = [0] * NVARS
    for g in mixed:
        for i in _support(g):
            counts[i] += 1
    v = max(range(NVARS), key=lambda i: counts[i])
    pivot = tuple(1 if i == v else 0 for i in range(NVARS))
    colon = tuple(
        tuple(e - 1 if i == v else e for i, e in enumerate(g)) if g[v] > 0 else g
        for g in gens
    )
    plus = tuple([g for g in gens if g[v] == 0] + [pivot])
    return max(_regularity_bound(_minimalize(colon)) + 1,
               _regularity_bound(_minimalize(plus)))


# ---------------------------------------------------------------------------
# Hilbert polynomials


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _binomial_poly(i: int):
    """Power-basis coefficients of C(t+i, i)."""
    coeffs = [Fraction(1)]
    for j in range(1, i + 1):
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k] += c * j
            nxt[k + 1] += c
        coeffs = nxt
    return [c / _factorial(i) for c in coeffs]


class HilbertPolynomial:
    """Polynomial in t stored in the binomial basis C(t+i, i)."""

    __slots__ = ("coeffs", "stable_from")

    def __init__(self, binomial_coeffs, stable_from: int = 0):
        coeffs = [Fraction(c) for c in binomial_coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.stable_from = stable_from

    @classmethod
    def from_power_coeffs(cls, power, stable_from: int = 0) -> "HilbertPolynomial":
        power = [Fraction(c) for c in power]
        while power and power[-1] == 0:
            power.pop()
        binom = []
        for i in range(len(power) - 1, -1, -1):
            b = power[i] * _factorial(i)
            base = _binomial_poly(i)
            for k in range(i + 1):
                power[k] -= b * base[k]
            binom.append(b)
        binom.reverse()
        return cls(binom, stable_from)

    def power_coeffs(self):
        out = [Fraction(0)] * max(len(self.coeffs), 1)
        for i, b in enumerate(self.coeffs):
            for k, c in enumerate(_binomial_poly(i)):
                out[k] += b * c
        return out

    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.power_coeffs()[-1]

    def __call__(self, t: int) -> Fraction:
        total = Fraction(0)
        for i, b in enumerate(self.coeffs):
            total += b * _binom_ext(t + i, i)
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, HilbertPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self) -> str:
        power = self.power_coeffs()
        parts = []
        for k in range(len(power) - 1, -1, -1):
            c = power[k]
            if c == 0 and not (k == 0 and len(power) == 1):
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"HilbertPolynomial({self})"


def _binom_ext(n: int, k: int) -> Fraction:
    """Polynomial extension of C(n, k) to negative n."""
    num = 1
    for j in range(k):
        num *= n - j
    return Fraction(num, _factorial(k))


# ---------------------------------------------------------------------------
# graded ideals


class GradedIdeal:
    """Homogeneous ideal with cached Groebner basis and Hilbert data."""

    def __init__(self, generators):
        gens = []
        for g in generators:
            if not isinstance(g, HomogeneousPolynomial):
                raise TypeError("generators must be homogeneous polynomials")
            if g:
                gens.append(g)
        self.generators = tuple(gens)
        self._gb = None
        self._lead = None
        self._numerator = None

    @classmethod
    def from_expressions(cls, expressions) -> "GradedIdeal":
        from .polyring import parse_polynomial

        return cls([parse_polynomial(e) for e in expressions])

    @classmethod
    def from_file(cls, path) -> "GradedIdeal":
        lines = []
        with open(path, "r", encoding="utf-8") as handle:
            for raw in handle:
                line = raw.split("#", 1)[0].strip()
                if line:
                    lines.append(line)
        return cls.from_expressions(lines)

    def groebner_basis(self, pair_cap: int = DEFAULT_PAIR_CAP, degree_cap=None):
        if self._gb is None:
            self._gb = tuple(buchberger(self.generators, pair_cap, degree_cap))
        return self._gb

    def lead_ideal(self) -> tuple:
        """Minimal monomial generators of the lead-term ideal."""
        if self._lead is None:
            self._lead = _minimalize(
                tuple(g.lead_monomial() for g in self.groebner_basis())
            )
        return self._lead

    def is_unit_ideal(self) -> bool:
        gb = self.groebner_basis()
        return bool(gb) and gb[0].degree == 0

    def contains(self, f: HomogeneousPolynomial) -> bool:
        if not f:
            return True
        return normal_form(f, list(self.groebner_basis())).is_zero()

    def equals(self, other: "GradedIdeal") -> bool:
        return self.groebner_basis() == other.groebner_basis()

    def hilbert_numerator(self) -> dict:
        """Coefficients of HS(S/I) * (1-t)^4, keyed by exponent."""
        if self._numerator is None:
            self._numerator = dict(_hilbert_numerator(self.lead_ideal()))
        return self._numerator

    def hilbert_function(self, k: int) -> int:
        """dim (S/I)_k, exact in every degree."""
        total = 0
        for a, c in self.hilbert_numerator().items():
            if k - a >= 0:
                total += c * comb(k - a + 3, 3)
        return total

    def hilbert_polynomial(self) -> HilbertPolynomial:
        if self.is_unit_ideal():
            raise ValueError("the unit ideal has no Hilbert polynomial")
        num = self.hilbert_numerator()
        power = [Fraction(0)] * 4
        for a, c in num.items():
            shifted = _shifted_cubic(a)
            for k in range(4):
                power[k] += c * shifted[k]
        stable = max(num, default=0) - 3
        return HilbertPolynomial.from_power_coeffs(power, stable_from=stable)

    def regularity_bound(self) -> int:
        """Certified upper bound for reg(S/I) via the lead-term ideal."""
        return _regularity_bound(self.lead_ideal())

    def max_generator_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"GradedIdeal({gens})"


@lru_cache(maxsize=None)
def _shifted_cubic(a: int):
    """Power-basis coefficients of C(t - a + 3, 3)."""
    coeffs = [Fraction(1)]
    for j in (1, 2, 3):
        shift = j - a
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k] += c * shift
            nxt[k + 1] += c
        coeffs = nxt
    return [c / 6 for c in coeffs]


def hilbert_polynomial(ideal: GradedIdeal) -> HilbertPolynomial:
    return ideal.hilbert_polynomial()


def curve_invariants(ideal: GradedIdeal):
    """(degree, arithmetic genus) of the curve cut out by the ideal."""
    P = ideal.hilbert_polynomial()
    if P.degree() != 1:
        raise NotACurveError(
            f"Hilbert polynomial {P} has degree {P.degree()}, expected 1"
        )
    power = P.power_coeffs()
    a, b = power[1], power[0]
    if a.denominator != 1 or b.denominator != 1:
        raise NotACurveError("non-integral Hilbert polynomial")
    return int(a), 1 - int(b)


# ---------------------------------------------------------------------------
# graded syzygies


def graded_syzygies(row, weights, target_degree: int):
    """Basis of tuples (g_i) with deg g_i = target_degree - weights[i] and
    sum g_i * row[i] = 0, by per-degree exact kernel computation."""
    row = list(row)
    weights = list(weights)
    if len(row) != len(weights):
        raise DegreeMismatchError("row and weights have different lengths")
    for p, w in zip(row, weights):
        if p and p.degree != w:
            raise DegreeMismatchError(
                f"row entry of degree {p.degree} in a slot of weight {w}"
            )
    target_monos = monomials_of_degree(target_degree)
    row_index = {m: i for i, m in enumerate(target_monos)}
    columns = []
    col_meta = []
    for slot, (p, w) in enumerate(zip(row, weights)):
        for m in monomials_of_degree(target_degree - w):
            vec = {}
            for pm, pc in p.terms.items():
                vec[row_index[mono_mul(pm, m)]] = pc
            columns.append(vec)
            col_meta.append((slot, m))
    out = []
    for combo in kernel_of_columns(columns):
        slots = [{} for _ in row]
        for ci, c in combo.items():
            slot, m = col_meta[ci]
            slots[slot][m] = c
        out.append(
            tuple(
                HomogeneousPolynomial(target_degree - w, terms)
                for terms, w in zip(slots, weights)
            )
        )
    return out


# ---------------------------------------------------------------------------
# minimal free resolutions


@dataclass
class FreeResolution:
    """Truncated minimal graded free resolution of S/I.

    twists[i] lists the signed twists b with F_i = (+) S(b); twists[0] = [0].
    differentials[i] holds the columns of d_{i+1} : F_{i+1} -> F_i, each a
    map from F_i slot index to a homogeneous polynomial.
    """

    twists: list
    differentials: list
    bound: int

    def length(self) -> int:
        return len(self.twists) - 1

    def layer_dimension(self, i: int, degree: int) -> int:
        if i >= len(self.twists):
            return 0
        return sum(graded_piece_dimension(degree + b) for b in self.twists[i])

    def betti(self):
        return [[i, sorted(tw)] for i, tw in enumerate(self.twists)]

    def betti_json(self):
        return {"betti": self.betti()}

    def alternating_sum_ok(self, hilbert_function) -> bool:
        for e in range(0, self.bound + 1):
            total = 0
            for i in range(len(self.twists)):
                total += (-1) ** i * self.layer_dimension(i, e)
            if total != hilbert_function(e):
                return False
        return True

    def composition_ok(self) -> bool:
        for i in range(1, len(self.differentials)):
            lower = self.differentials[i - 1]
            for column in self.differentials[i]:
                acc = {}
                for slot, poly in column.items():
                    for target, entry in lower[slot].items():
                        prod = poly * entry
                        cur = acc.get(target)
                        total = prod if cur is None else cur + prod
                        acc[target] = total
                if any(not p.is_zero() for p in acc.values()):
                    return False
        return True

    def is_minimal(self) -> bool:
        for cols in self.differentials:
            for column in cols:
                for poly in column.values():
                    if poly and poly.degree == 0:
                        return False
        return True


def _degree_basis(twists, degree):
    """Index map for the degree-e piece of (+) S(b): list of (slot, monomial)."""
    basis = []
    for slot, b in enumerate(twists):
        for m in monomials_of_degree(degree + b):
            basis.append((slot, m))
    return basis


def minimal_free_resolution(ideal: GradedIdeal, degree_bound=None) -> FreeResolution:
    """Minimal graded free resolution of S/I, complete in degrees <= bound."""
    if ideal.is_unit_ideal():
        raise ValueError("S/I is zero; no resolution is computed")
    maxdeg = ideal.max_generator_degree()
    regb = ideal.regularity_bound()
    if degree_bound is None:
        bound = regb + 6
    else:
        if degree_bound < maxdeg + 4:
            raise ValueError("degree bound must be at least max generator degree + 4")
        bound = degree_bound
    if bound > 60:
        raise ResourceLimitError(f"truncation bound {bound} is too large")

    gb = list(ideal.groebner_basis())
    lead_gens = ideal.lead_ideal()
    if not lead_gens:
        return FreeResolution(twists=[[0]], differentials=[], bound=bound)

    def lt_monomials(e):
        return [m for m in monomials_of_degree(e)
                if any(mono_divides(g, m) for g in lead_gens)]

    def reduced_element(m):
        lead = HomogeneousPolynomial.from_term(m)
        return lead - normal_form(lead, gb)

    # layer 1: minimal generators of I
    gens1 = []
    cap1 = min(bound, maxdeg)
    for e in range(1, cap1 + 1):
        monos_e = lt_monomials(e)
        if not monos_e:
            continue
        index = {m: i for i, m in enumerate(monomials_of_degree(e))}
        ech = Echelon()
        for m_prev in lt_monomials(e - 1):
            b = reduced_element(m_prev)
            for v in range(NVARS):
                mv = tuple(1 if i == v else 0 for i in range(NVARS))
                shifted = b.multiply_monomial(mv)
                ech.insert({index[mm]: c for mm, c in shifted.terms.items()})
        for m in monos_e:
            f = reduced_element(m)
            if ech.insert({index[mm]: c for mm, c in f.terms.items()}) is not None:
                gens1.append((e, f))
        if ech.rank != len(monos_e):
            raise ResourceLimitError("layer-1 dimension audit failed")

    twists = [[0], [-e for e, _ in gens1]]
    differentials = [[{0: f} for _, f in gens1]]

    # higher layers: kernels of the previous differential, degree by degree
    layer = 2
    while layer <= 5:
        prev_twists = twists[layer - 1]
        below_twists = twists[layer - 2]
        prev_cols = differentials[layer - 2]
        if not prev_twists:
            break
        cap = min(bound, regb + layer + 1)
        start = min(-b for b in prev_twists)
        new_gens = []  # (degree, column over F_{layer-1} slots)
        prev_kernel = []
        prev_col_meta = []
        for e in range(start, cap + 1):
            col_meta = _degree_basis(prev_twists, e)
            col_index = {key: i for i, key in enumerate(col_meta)}
            row_meta = _degree_basis(below_twists, e)
            row_index = {key: i for i, key in enumerate(row_meta)}
            columns = []
            for slot, m in col_meta:
                vec = {}
                for target, poly in prev_cols[slot].items():
                    for pm, pc in poly.terms.items():
                        vec[row_index[(target, mono_mul(pm, m))]] = pc
                columns.append(vec)
            kernel = kernel_of_columns(columns)
            ech_old = Echelon()
            for z in prev_kernel:
                for v in range(NVARS):
                    mv = tuple(1 if i == v else 0 for i in range(NVARS))
                    shifted = {}
                    for ci, c in z.items():
                        slot, m = prev_col_meta[ci]
                        shifted[col_index[(slot, mono_mul(m, mv))]] = c
                    ech_old.insert(shifted)
            for z in kernel:
                if ech_old.insert(z) is None:
                    continue
                if e == cap and cap == regb + layer + 1:
                    raise ResourceLimitError(
                        "resolution generator found at the safety margin degree"
                    )
                column = {}
                for ci, c in z.items():
                    slot, m = col_meta[ci]
                    column.setdefault(slot, {})[m] = c
                new_gens.append(
                    (e, {slot: HomogeneousPolynomial(e + prev_twists[slot], terms)
                         for slot, terms in column.items()})
                )
            prev_kernel = kernel
            prev_col_meta = col_meta
        if not new_gens:
            break
        twists.append([-e for e, _ in new_gens])
        differentials.append([col for _, col in new_gens])
        layer += 1
    if layer > 5:
        raise ResourceLimitError("resolution did not terminate at length 4")

    resolution = FreeResolution(twists=twists, differentials=differentials, bound=bound)
    if not resolution.alternating_sum_ok(ideal.hilbert_function):
        raise ResourceLimitError("resolution dimension audit failed")
    return resolution


# ---------------------------------------------------------------------------
# first cohomology of the ideal sheaf (Rao dimensions)


@dataclass
class RaoProfile:
    """Per-twist first cohomology of a curve's ideal sheaf."""

    profile: dict
    total: int
    window: tuple

    def to_json(self):
        return {"profile": {str(k): v for k, v in sorted(self.profile.items())},
                "total": self.total}


def default_rao_window(ideal: GradedIdeal):
    maxdeg = ideal.max_generator_degree()
    return (-maxdeg, 3 + sum(g.degree for g in ideal.generators))


def rao_module_dimensions(ideal: GradedIdeal, window=None) -> RaoProfile:
    """h^1 of the ideal sheaf of the curve, twist by twist, over the window.

    Computed as the dimension of the third Ext module of S/I against the
    twisted canonical module, read off the dualized resolution; the value at
    both window endpoints must vanish.
    """
    P = ideal.hilbert_polynomial()
    if P.degree() != 1:
        raise NotACurveError("the ideal does not cut out a curve")
    if window is None:
        window = default_rao_window(ideal)
    lo, hi = window
    if lo > hi:
        raise ValueError("empty window")

    res = minimal_free_resolution(ideal)
    profile = {}
    if res.length() >= 3:
        t2, t3 = res.twists[2], res.twists[3]
        t4 = res.twists[4] if res.length() >= 4 else []
        d3 = res.differentials[2]
        d4 = res.differentials[3] if res.length() >= 4 else []
        for k in range(lo, hi + 1):
            dim3 = sum(graded_piece_dimension(-b - 4 - k) for b in t3)
            if dim3 == 0:
                continue
            rank4 = _dual_map_rank(t3, t4, d4, k) if t4 else 0
            rank3 = _dual_map_rank(t2, t3, d3, k)
            h = dim3 - rank4 - rank3
            if h < 0:
                raise ResourceLimitError("negative cohomology dimension")
            if h:
                profile[k] = h
    if profile.get(lo) or profile.get(hi):
        raise WindowTooSmallError(
            f"nonzero value at a window endpoint of [{lo}, {hi}]"
        )
    return RaoProfile(profile=profile, total=sum(profile.values()), window=(lo, hi))


def _dual_map_rank(twists_dom, twists_cod, columns, k: int) -> int:
    """Rank of the dual of d : F_cod -> F_dom in dual degree -k.

    Domain basis: (slot j of F_dom, monomial of degree -b_j - 4 - k); the
    dual map multiplies by the transposed polynomial entries.
    """
    image_index = {}
    for l, b in enumerate(twists_cod):
        for m in monomials_of_degree(-b - 4 - k):
            image_index[(l, m)] = len(image_index)
    if not image_index:
        return 0
    ech = Echelon()
    for j, b in enumerate(twists_dom):
        for m in monomials_of_degree(-b - 4 - k):
            vec = {}
            for l, column in enumerate(columns):
                poly = column.get(j)
                if poly is None:
                    continue
                for pm, pc in poly.terms.items():
                    vec[image_index[(l, mono_mul(pm, m))]] = (
                        vec.get(image_index[(l, mono_mul(pm, m))], 0) + pc
                    )
            ech.insert({c: v for c, v in vec.items() if v})
    return ech.rank

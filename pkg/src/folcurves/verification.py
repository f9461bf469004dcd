"""Acceptance checks: every desk-scale number the package is expected to
reproduce, organized as named criteria grouped into suites.

Discrepancy flags raised by the checks are data, not failures; a criterion
fails only when a computation contradicts its expected value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random

from .classify import (
    ci_foliation_invariants,
    classify_low_degree,
    invariants_from_c2,
    legendrian_moduli_dim,
    nc_curve_invariants,
    nc_moduli_dim,
)
from .forms import (
    TwistedForm,
    legendrian_sample,
    parse_form,
    pencil_form,
    radial_contraction,
    random_polynomial,
    singular_ideal,
    standard_contact_form,
    wedge,
)
from .groebner import (
    GradedIdeal,
    curve_invariants,
    graded_syzygies,
    hilbert_polynomial,
    minimal_free_resolution,
    normal_form,
    rao_module_dimensions,
)
from .linalg import Echelon
from .monad import instanton_monad, monad_regularity_bound
from .polyring import HomogeneousPolynomial, parse_polynomial, monomials_of_degree
from .sheafcoh import (
    ChernTriple,
    SheafSymbol,
    euler_characteristic,
    instanton_cohomology,
    null_correlation_h0,
)

DEFAULT_SEED = 0


@dataclass
class CriterionResult:
    cid: str
    title: str
    ok: bool
    details: list = field(default_factory=list)
    flags: list = field(default_factory=list)

    def to_json(self):
        return {
            "id": self.cid,
            "title": self.title,
            "ok": self.ok,
            "details": self.details,
            "flags": self.flags,
        }


def _result(cid, title):
    return CriterionResult(cid=cid, title=title, ok=True)


def _check(result, condition, message):
    if condition:
        result.details.append(f"ok: {message}")
    else:
        result.ok = False
        result.details.append(f"FAIL: {message}")


# --------------------------------------------------------------------------
# criteria


def check_table1(seed=DEFAULT_SEED):
    r = _result("table1", "degree-3 classification table rows")
    expected = {
        10: ((8, 5), 1, 1, 1, 1),
        11: ((7, 2), 2, 4, 1, 1),
        12: ((6, -1), 3, [8, 9], [2, 3], [2, 3]),
        13: ((5, -4), 4, 14, 5, 5),
    }
    for c2, (curve, charge, dim_m, h0, comps) in expected.items():
        rep = classify_low_degree(3, c2, reduced_singular_scheme=True)
        _check(r, (rep.degC, rep.paC) == curve, f"c2={c2}: curve {curve}")
        _check(r, rep.charge == charge, f"c2={c2}: normalized c2 {charge}")
        _check(r, rep.dim_moduli == dim_m, f"c2={c2}: dim of cohomology module {dim_m}")
        _check(r, rep.h0_OC == h0, f"c2={c2}: h0 of the singular scheme {h0}")
        _check(r, rep.components == comps, f"c2={c2}: component count {comps}")
    return r


_PENCIL_CONTACT_WEDGE = (
    "z0*z2*dz1/\\dz3 - z0*z3*dz1/\\dz2 - z1*z2*dz0/\\dz3 + z1*z3*dz0/\\dz2"
)


def check_pencil_contact_example(seed=DEFAULT_SEED):
    r = _result("pencil-contact", "pencil and contact 1-forms, end to end")
    two_form = wedge(pencil_form(), standard_contact_form())
    _check(r, two_form == parse_form(_PENCIL_CONTACT_WEDGE), "wedge matches term for term")
    _check(r, str(two_form) == _PENCIL_CONTACT_WEDGE, "serialization matches")
    ideal = singular_ideal(two_form)
    reference = GradedIdeal.from_expressions(["z0*z2", "z0*z3", "z1*z2", "z1*z3"])
    _check(r, ideal.equals(reference), "singular ideal is the two-skew-lines ideal")
    _check(r, str(hilbert_polynomial(ideal)) == "2*t + 2", "Hilbert polynomial 2t + 2")
    _check(r, curve_invariants(ideal) == (2, -1), "degree 2, genus -1")
    profile = rao_module_dimensions(ideal)
    _check(r, profile.to_json() == {"profile": {"0": 1}, "total": 1},
           "Rao profile {0: 1}, total 1")
    return r


def check_legendrian_degree2(seed=DEFAULT_SEED):
    r = _result("legendrian-deg2", "five random degree-2 legendrian samples")
    rng = Random(seed)
    for i in range(5):
        presentation = legendrian_sample(2, rng)
        P = hilbert_polynomial(presentation.ideal)
        _check(r, str(P) == "5*t", f"sample {i}: Hilbert polynomial 5t")
        _check(r, curve_invariants(presentation.ideal) == (5, 1),
               f"sample {i}: curve (5, 1)")
        profile = rao_module_dimensions(presentation.ideal)
        _check(r, profile.total == 1, f"sample {i}: Rao total 1")
    return r


_REFERENCE_SYZYGIES = [
    ("0", "0", "-z0*z3", "z0*z2"),
    ("0", "0", "-z1*z3", "z1*z2"),
    ("0", "0", "-z3^2", "z2*z3"),
    ("0", "0", "-z2*z3", "z2^2"),
    ("0", "-z2", "z1^2", "0"),
    ("-z2", "0", "z0^2", "0"),
    ("0", "-z3", "0", "z1^2"),
    ("-z3", "0", "0", "z0^2"),
]


def _syzygy_vector(tup, weights, target):
    """Flatten a syzygy tuple into one coordinate vector."""
    vec = {}
    offset = 0
    for poly, w in zip(tup, weights):
        monos = monomials_of_degree(target - w)
        index = {m: i for i, m in enumerate(monos)}
        for m, c in poly.terms.items():
            vec[offset + index[m]] = c
        offset += len(monos)
    return vec


def check_syzygy_matrix(seed=DEFAULT_SEED):
    r = _result("syzygy", "degree-3 syzygies of [x^2, y^2, z, t]")
    row = [parse_polynomial(s) for s in ("z0^2", "z1^2", "z2", "z3")]
    weights = [2, 2, 1, 1]
    basis = graded_syzygies(row, weights, 3)
    _check(r, len(basis) == 8, "syzygy space has dimension 8")
    for tup in basis:
        total = HomogeneousPolynomial.zero(3)
        for g, p in zip(tup, row):
            total = total + g * p
        _check(r, total.is_zero(), "computed column annihilates the row")
    reference = []
    for col in _REFERENCE_SYZYGIES:
        tup = tuple(parse_polynomial(s) if s != "0" else
                    HomogeneousPolynomial.zero(3 - w)
                    for s, w in zip(col, weights))
        total = HomogeneousPolynomial.zero(3)
        for g, p in zip(tup, row):
            total = total + g * p
        _check(r, total.is_zero(), "reference column annihilates the row")
        reference.append(tup)
    mine = Echelon()
    for tup in basis:
        mine.insert(_syzygy_vector(tup, weights, 3))
    theirs = Echelon()
    for tup in reference:
        theirs.insert(_syzygy_vector(tup, weights, 3))
    both = Echelon()
    for tup in basis + reference:
        both.insert(_syzygy_vector(tup, weights, 3))
    _check(r, mine.rank == 8 and theirs.rank == 8 and both.rank == 8,
           "computed and reference columns span the same 8-dimensional space")
    # first four reference columns: every 2x2 minor vanishes identically
    first_four = [reference[i] for i in range(4)]
    all_zero = True
    for r1 in range(4):
        for r2 in range(r1 + 1, 4):
            for c1 in range(4):
                for c2 in range(c1 + 1, 4):
                    minor = (first_four[c1][r1] * first_four[c2][r2]
                             - first_four[c2][r1] * first_four[c1][r2])
                    if not minor.is_zero():
                        all_zero = False
    _check(r, all_zero, "first four columns have identically vanishing 2x2 minors")
    return r


def check_cohomology_identities(seed=DEFAULT_SEED):
    r = _result("cohomology", "Euler characteristics and instanton tables")
    for n in range(1, 6):
        sym = SheafSymbol(2, ChernTriple(0, n, 0))
        value = euler_characteristic(sym, 1)
        _check(r, value == 8 - 3 * n, f"chi at twist 1 equals {8 - 3 * n} for c2 = {n}")
    nc = SheafSymbol.null_correlation()
    for t in range(0, 9):
        _check(r, euler_characteristic(nc, t) == null_correlation_h0(t),
               f"null-correlation h0 route agrees at twist {t}")
    _check(r, null_correlation_h0(1) == 5, "h0 at twist 1 equals 5")
    expected_totals = {(1, None): 1, (2, None): 4, (3, 0): 8, (3, 1): 9, (4, None): 14}
    for (n, h0), total in expected_totals.items():
        table = instanton_cohomology(n, h0)
        sym = SheafSymbol.instanton(n)
        _check(r, table.chi_consistent(lambda k: euler_characteristic(sym, k)),
               f"charge {n}: chi-consistent rows")
        got = sum(v[1] for v in table.rows.values())
        _check(r, got == total, f"charge {n} (h0(E(1))={h0}): total h1 = {total}")
    return r


def check_moduli_dimensions(seed=DEFAULT_SEED):
    r = _result("moduli", "moduli dimensions and the off-by-one flag")
    for d, expected in ((1, 8), (2, 20), (3, 39)):
        _check(r, legendrian_moduli_dim(d) == expected,
               f"legendrian degree {d}: dimension {expected}")
    stated, derived, flagged = nc_moduli_dim(1)
    _check(r, (stated, derived, flagged) == (34, 33, True),
           "degree-3 null-correlation case: stated 34, derived 33, flagged")
    r.flags.append({
        "claim": "null-correlation moduli dimension: closed form exceeds the "
                 "deformation-count value by 1",
        "computed": derived,
        "stated": stated,
        "location": "nc-moduli-k1",
    })
    for k in range(1, 11):
        s, dv, fl = nc_moduli_dim(k)
        _check(r, s - dv == 1 and fl, f"k={k}: stated - derived = 1")
    return r


def check_regularity(seed=DEFAULT_SEED):
    r = _result("regularity", "instanton monads of charge n are n-regular")
    for n in range(1, 9):
        _check(r, monad_regularity_bound(instanton_monad(n)) == n,
               f"charge {n}: regularity bound {n}")
    return r


def check_chern_closure(seed=DEFAULT_SEED):
    r = _result("chern-closure", "Chern-number identity on locally free inputs")
    cases = 0
    for d in range(1, 7):
        for c2 in range(d + 2, d * d + 2 * d + 2):
            if (3 * (d - 1) * c2) % 2 != 0:
                continue
            inv = invariants_from_c2(d, c2, locally_free=True)
            if inv.identity_residual() != 0:
                _check(r, False, f"residual nonzero at (d={d}, c2={c2})")
            cases += 1
    _check(r, cases >= 50, f"identity holds on {cases} cases")
    return r


def check_degree3_genus_report(seed=DEFAULT_SEED):
    r = _result("deg3-genus", "degree-3 sample adjudicates the genus values")
    rng = Random(seed)
    presentation = legendrian_sample(3, rng)
    P = hilbert_polynomial(presentation.ideal)
    power = P.power_coeffs()
    _check(r, P.degree() == 1 and power[1] == 10, "Hilbert polynomial has slope 10")
    constant = int(power[0])
    genus = 1 - constant
    formula_value, tabulated_value = 11, 5
    if genus == formula_value:
        match = "formula"
    elif genus == tabulated_value:
        match = "tabulated"
    else:
        match = "neither"
    r.details.append(
        f"report: constant term {constant}, genus {genus}, matches the "
        f"{match} value (formula {formula_value}, tabulated {tabulated_value})"
    )
    r.flags.append({
        "claim": "degree-3 legendrian split case: tabulated genus 5, "
                 "formula genus 11, sampled instance decides",
        "computed": genus,
        "stated": tabulated_value,
        "location": "deg3-split-genus-sample",
    })
    return r


def _random_ideal(rng, max_gens=3, max_degree=3):
    while True:
        gens = []
        for _ in range(rng.randint(2, max_gens)):
            deg = rng.randint(1, max_degree)
            terms = {}
            monos = monomials_of_degree(deg)
            for m in rng.sample(monos, k=min(len(monos), rng.randint(2, 5))):
                c = rng.randint(-3, 3)
                if c:
                    terms[m] = c
            poly = HomogeneousPolynomial(deg, terms)
            if poly:
                gens.append(poly)
        if not gens:
            continue
        ideal = GradedIdeal(gens)
        if not ideal.is_unit_ideal():
            return ideal


def check_property_suites(seed=DEFAULT_SEED):
    r = _result("properties", "randomized structural invariants")
    rng = Random(seed)

    ok = True
    for _ in range(50):
        ideal = _random_ideal(rng)
        gb = list(ideal.groebner_basis())
        for g in ideal.generators:
            if not normal_form(g, gb).is_zero():
                ok = False
    _check(r, ok, "generators reduce to zero against the reduced basis (50 ideals)")

    ok = True
    for _ in range(20):
        ideal = _random_ideal(rng)
        res = minimal_free_resolution(ideal)
        if not (res.alternating_sum_ok(ideal.hilbert_function)
                and res.composition_ok() and res.is_minimal()):
            ok = False
    _check(r, ok, "resolutions are exact, composable to zero and minimal (20 ideals)")

    base = GradedIdeal.from_expressions(["z0*z2", "z0*z3", "z1*z2", "z1*z3"])
    redundant = GradedIdeal(list(base.generators)
                            + [parse_polynomial("z3^2") * base.generators[0]])
    _check(r, rao_module_dimensions(base).profile
           == rao_module_dimensions(redundant).profile,
           "Rao profile unchanged by a redundant generator")

    ok = True
    for _ in range(50):
        qa = rng.randint(1, 2)
        qb = rng.randint(1, min(3, 4 - qa))
        a = _random_form(rng, qa)
        b = _random_form(rng, qb)
        lhs = radial_contraction(wedge(a, b))
        rhs = wedge(radial_contraction(a), b) + wedge(a, radial_contraction(b)).scale(
            (-1) ** qa
        )
        if lhs != rhs:
            ok = False
    _check(r, ok, "contraction Leibniz identity on 50 random form pairs")

    ok = True
    for i in range(3):
        ci = _random_ci_curve(Random(seed + 100 + i))
        if rao_module_dimensions(ci).total != 0:
            ok = False
    _check(r, ok, "complete-intersection curves have empty Rao profile")
    return r


def _random_form(rng, q):
    coeff_degree = rng.randint(1, 2)
    coefficients = {}
    from itertools import combinations

    for idx in combinations(range(4), q):
        p = random_polynomial(coeff_degree, rng, bound=4)
        if p:
            coefficients[idx] = p
    return TwistedForm(q, coeff_degree, coefficients)


def _random_ci_curve(rng):
    while True:
        q1 = random_polynomial(2, rng, bound=4)
        q2 = random_polynomial(2, rng, bound=4)
        if not q1 or not q2:
            continue
        ideal = GradedIdeal([q1, q2])
        if ideal.is_unit_ideal():
            continue
        P = ideal.hilbert_polynomial()
        if P.degree() == 1:
            return ideal


def check_route_agreement(seed=DEFAULT_SEED):
    r = _result("routes", "independent formula routes agree")
    for k in range(1, 7):
        deg, genus = nc_curve_invariants(k)
        inv = invariants_from_c2(2 * k + 1, 1 + (k + 2) ** 2)
        _check(r, (deg, genus) == (inv.degC, inv.paC),
               f"null-correlation route agrees at k={k}")
    for d1 in range(0, 4):
        for d2 in range(d1, 4):
            deg, genus, _ = ci_foliation_invariants(d1, d2)
            inv = invariants_from_c2(d1 + d2 + 1, (2 + d1) * (2 + d2))
            _check(r, (deg, genus) == (inv.degC, inv.paC),
                   f"complete-intersection route agrees at ({d1}, {d2})")
    return r


CRITERIA = {
    "table1": check_table1,
    "pencil-contact": check_pencil_contact_example,
    "legendrian-deg2": check_legendrian_degree2,
    "syzygy": check_syzygy_matrix,
    "cohomology": check_cohomology_identities,
    "moduli": check_moduli_dimensions,
    "regularity": check_regularity,
    "chern-closure": check_chern_closure,
    "deg3-genus": check_degree3_genus_report,
    "properties": check_property_suites,
    "routes": check_route_agreement,
}

SUITES = {
    "table1": ["table1"],
    "formulas": ["cohomology", "regularity", "chern-closure", "routes"],
    "forms": ["pencil-contact", "legendrian-deg2", "deg3-genus", "properties"],
    "syzygy": ["syzygy"],
    "moduli": ["moduli"],
    "all": list(CRITERIA),
}


def run_suite(name: str, seed: int = DEFAULT_SEED):
    """Run a named suite; results come back sorted by criterion id."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    results = [CRITERIA[cid](seed) for cid in SUITES[name]]
    return sorted(results, key=lambda res: res.cid)

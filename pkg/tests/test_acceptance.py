"""Acceptance suite: every headline number, one test per criterion.

Each test prints one line of the form "criterion <id>: PASS/FAIL" (visible
with pytest -s or in failure reports) and asserts the expected values,
which are frozen here independently of the verification module's wiring.
"""

from random import Random

from folcurves.classify import (
    ci_foliation_invariants,
    classify_low_degree,
    invariants_from_c2,
    legendrian_moduli_dim,
    nc_curve_invariants,
    nc_moduli_dim,
)
from folcurves.forms import (
    legendrian_sample,
    parse_form,
    pencil_form,
    singular_ideal,
    standard_contact_form,
    wedge,
)
from folcurves.groebner import (
    GradedIdeal,
    curve_invariants,
    hilbert_polynomial,
    rao_module_dimensions,
)
from folcurves.monad import instanton_monad, monad_regularity_bound
from folcurves.sheafcoh import (
    ChernTriple,
    SheafSymbol,
    euler_characteristic,
    instanton_cohomology,
    null_correlation_h0,
)
from folcurves.verification import CRITERIA, run_suite

SEED = 0


def _report(cid, ok):
    print(f"criterion {cid}: {'PASS' if ok else 'FAIL'}")
    assert ok


def test_criterion_01_classification_table():
    expected = {
        10: ((8, 5), 1, 1, 1),
        11: ((7, 2), 2, 4, 1),
        12: ((6, -1), 3, [8, 9], [2, 3]),
        13: ((5, -4), 4, 14, 5),
    }
    ok = True
    for c2, (curve, charge, dim_m, h0) in expected.items():
        rep = classify_low_degree(3, c2, reduced_singular_scheme=True)
        ok = ok and (rep.degC, rep.paC) == curve and rep.charge == charge
        ok = ok and rep.dim_moduli == dim_m and rep.h0_OC == h0
    _report("01 degree-3 table", ok)


def test_criterion_02_pencil_contact_end_to_end():
    two_form = wedge(pencil_form(), standard_contact_form())
    expected = "z0*z2*dz1/\\dz3 - z0*z3*dz1/\\dz2 - z1*z2*dz0/\\dz3 + z1*z3*dz0/\\dz2"
    ok = two_form == parse_form(expected)
    ideal = singular_ideal(two_form)
    ok = ok and ideal.equals(
        GradedIdeal.from_expressions(["z0*z2", "z0*z3", "z1*z2", "z1*z3"])
    )
    ok = ok and str(hilbert_polynomial(ideal)) == "2*t + 2"
    ok = ok and curve_invariants(ideal) == (2, -1)
    ok = ok and rao_module_dimensions(ideal).to_json() == {
        "profile": {"0": 1}, "total": 1,
    }
    _report("02 pencil-contact example", ok)


def test_criterion_03_degree2_legendrian_sampling():
    rng = Random(SEED)
    ok = True
    for _ in range(5):
        presentation = legendrian_sample(2, rng, max_redraws=20)
        P = hilbert_polynomial(presentation.ideal)
        ok = ok and str(P) == "5*t"
        ok = ok and curve_invariants(presentation.ideal) == (5, 1)
        ok = ok and rao_module_dimensions(presentation.ideal).total == 1
    _report("03 degree-2 legendrian samples", ok)


def test_criterion_04_syzygy_reproduction():
    result = CRITERIA["syzygy"](SEED)
    _report("04 syzygy matrix", result.ok)


def test_criterion_05_cohomology_identities():
    ok = True
    for n in range(1, 6):
        ok = ok and euler_characteristic(SheafSymbol(2, ChernTriple(0, n, 0)), 1) == 8 - 3 * n
    nc = SheafSymbol.null_correlation()
    for t in range(0, 9):
        ok = ok and null_correlation_h0(t) == euler_characteristic(nc, t)
    ok = ok and null_correlation_h0(1) == 5
    totals = {(1, None): 1, (2, None): 4, (3, 0): 8, (3, 1): 9, (4, None): 14}
    for (n, h0), total in totals.items():
        table = instanton_cohomology(n, h0)
        sym = SheafSymbol.instanton(n)
        ok = ok and table.chi_consistent(lambda k: euler_characteristic(sym, k))
        ok = ok and sum(row[1] for row in table.rows.values()) == total
    _report("05 cohomology identities", ok)


def test_criterion_06_moduli_dimensions():
    ok = legendrian_moduli_dim(1) == 8
    ok = ok and legendrian_moduli_dim(2) == 20
    ok = ok and legendrian_moduli_dim(3) == 39
    stated, derived, flagged = nc_moduli_dim(1)
    ok = ok and (stated, derived, flagged) == (34, 33, True)
    for k in range(1, 11):
        s, dv, fl = nc_moduli_dim(k)
        ok = ok and s - dv == 1 and fl
    _report("06 moduli dimensions", ok)


def test_criterion_07_regularity():
    ok = all(monad_regularity_bound(instanton_monad(n)) == n for n in range(1, 9))
    _report("07 instanton regularity", ok)


def test_criterion_08_chern_closure():
    cases = 0
    ok = True
    for d in range(1, 7):
        for c2 in range(d + 2, d * d + 2 * d + 2):
            if (3 * (d - 1) * c2) % 2 != 0:
                continue
            ok = ok and invariants_from_c2(d, c2).identity_residual() == 0
            cases += 1
    ok = ok and cases >= 50
    _report("08 Chern-number closure", ok)


def test_criterion_09_degree3_genus_report():
    rng = Random(SEED)
    presentation = legendrian_sample(3, rng)
    P = hilbert_polynomial(presentation.ideal)
    power = P.power_coeffs()
    ok = P.degree() == 1 and power[1] == 10
    constant = int(power[0])
    genus = 1 - constant
    if genus == 11:
        match = "formula value 11"
    elif genus == 5:
        match = "tabulated value 5"
    else:
        match = "neither recorded value"
    print(f"criterion 09 report: sampled genus {genus}, matches the {match}")
    _report("09 degree-3 genus adjudication", ok)


def test_criterion_10_property_suites():
    result = CRITERIA["properties"](SEED)
    _report("10 property suites", result.ok)


def test_criterion_11_route_agreement():
    ok = True
    for k in range(1, 7):
        deg, genus = nc_curve_invariants(k)
        inv = invariants_from_c2(2 * k + 1, 1 + (k + 2) ** 2)
        ok = ok and (deg, genus) == (inv.degC, inv.paC)
    for d1 in range(0, 4):
        for d2 in range(d1, 4):
            deg, genus, _ = ci_foliation_invariants(d1, d2)
            inv = invariants_from_c2(d1 + d2 + 1, (2 + d1) * (2 + d2))
            ok = ok and (deg, genus) == (inv.degC, inv.paC)
    _report("11 route agreement", ok)


def test_full_verification_suite_is_green():
    results = run_suite("all", seed=SEED)
    for res in results:
        print(f"suite criterion {res.cid}: {'PASS' if res.ok else 'FAIL'}")
    assert all(res.ok for res in results)

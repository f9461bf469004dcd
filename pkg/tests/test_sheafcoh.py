"""Cohomology tables and Euler characteristics."""

from math import comb

import pytest

from folcurves.errors import InvalidProfileError, UnsupportedFormIndexError, UnsupportedRankError
from folcurves.sheafcoh import (
    ChernTriple,
    SheafSymbol,
    cotangent_cohomology,
    euler_characteristic,
    hom_lower_bound,
    hrr_polynomial,
    instanton_cohomology,
    line_bundle_cohomology,
    null_correlation_h0,
    serre_dual_twist,
)


def test_chi_line_bundles():
    for t in range(-3, 8):
        assert euler_characteristic(SheafSymbol.line_bundle(0), t) == \
            (t + 1) * (t + 2) * (t + 3) // 6
    assert euler_characteristic(SheafSymbol.line_bundle(0), 0) == 1
    assert euler_characteristic(SheafSymbol.line_bundle(-4), 0) == -1


def test_chi_rank2_twist_one_anchor():
    for n in range(1, 6):
        sym = SheafSymbol(2, ChernTriple(0, n, 0))
        assert euler_characteristic(sym, 1) == 8 - 3 * n


def test_chi_splits_as_sum_of_line_bundles():
    for a in range(-3, 4):
        for b in range(-3, 4):
            sym = SheafSymbol.line_sum([a, b])
            expected = sum(
                euler_characteristic(SheafSymbol.line_bundle(c), 0) for c in (a, b)
            )
            assert euler_characteristic(sym, 0) == expected


def test_chi_rejects_rank3():
    with pytest.raises(UnsupportedRankError):
        euler_characteristic(SheafSymbol.cotangent(), 0)


def test_twist_rule_agrees_with_hrr_polynomial():
    # two independent routes: twisted Chern triple versus the cubic in t
    for c1, c2 in ((0, 1), (0, 3), (-1, 2), (-6, 10)):
        sym = SheafSymbol(2, ChernTriple(c1, c2, 0))
        coeffs = hrr_polynomial(sym)
        for t in range(-6, 7):
            direct = euler_characteristic(sym, t)
            poly = sum(c * t ** k for k, c in enumerate(coeffs))
            assert direct == poly


def test_null_correlation_h0():
    assert null_correlation_h0(0) == 0
    assert null_correlation_h0(1) == 5
    assert null_correlation_h0(2) == 16
    assert null_correlation_h0(-3) == 0
    nc = SheafSymbol.null_correlation()
    for t in range(0, 9):
        assert null_correlation_h0(t) == euler_characteristic(nc, t)
        assert null_correlation_h0(t) == 2 * comb(t + 3, 3) - (t + 2)


def test_line_bundle_cohomology_rows():
    assert line_bundle_cohomology(0) == (1, 0, 0, 0)
    assert line_bundle_cohomology(-4) == (0, 0, 0, 1)
    assert line_bundle_cohomology(-2) == (0, 0, 0, 0)


def test_line_bundle_serre_duality():
    for a in range(-10, 11):
        row = line_bundle_cohomology(a)
        dual = line_bundle_cohomology(-4 - a)
        assert row == tuple(reversed(dual))


def test_cotangent_rows():
    assert cotangent_cohomology(1, 0) == (0, 1, 0, 0)
    assert cotangent_cohomology(1, 2)[0] == 6
    assert cotangent_cohomology(1, 1) == (0, 0, 0, 0)
    assert cotangent_cohomology(1, 3)[0] == 20
    assert cotangent_cohomology(1, -3) == (0, 0, 0, 4)
    with pytest.raises(UnsupportedFormIndexError):
        cotangent_cohomology(2, 0)


def test_cotangent_chi_via_euler_sequence():
    for k in range(-6, 7):
        h0, h1, h2, h3 = cotangent_cohomology(1, k)
        chi = h0 - h1 + h2 - h3
        euler = 4 * euler_characteristic(SheafSymbol.line_bundle(k - 1), 0) \
            - euler_characteristic(SheafSymbol.line_bundle(k), 0)
        assert chi == euler


def test_instanton_profiles():
    t1 = instanton_cohomology(1)
    assert t1.row(-1) == (0, 1, 0, 0)
    assert t1.row(1) == (5, 0, 0, 0)
    t2 = instanton_cohomology(2)
    assert t2.row(-1)[1] == 2 and t2.row(0)[1] == 2
    assert t2.row(1) == (2, 0, 0, 0)
    t3 = instanton_cohomology(3, 0)
    assert t3.row(-1)[1] == 3 and t3.row(0)[1] == 4 and t3.row(1)[1] == 1
    t3b = instanton_cohomology(3, 1)
    assert t3b.row(1) == (1, 2, 0, 0)
    t4 = instanton_cohomology(4)
    assert [t4.row(k)[1] for k in (-1, 0, 1)] == [4, 6, 4]


def test_instanton_chi_consistency_and_totals():
    expected = {(1, None): 1, (2, None): 4, (3, 0): 8, (3, 1): 9, (3, 2): 10,
                (4, None): 14}
    for (n, h0), total in expected.items():
        table = instanton_cohomology(n, h0)
        sym = SheafSymbol.instanton(n)
        assert table.chi_consistent(lambda k: euler_characteristic(sym, k))
        assert sum(row[1] for row in table.rows.values()) == total


def test_instanton_rejects_bad_profiles():
    with pytest.raises(InvalidProfileError):
        instanton_cohomology(3, 4)
    with pytest.raises(InvalidProfileError):
        instanton_cohomology(1, 2)
    with pytest.raises(InvalidProfileError):
        instanton_cohomology(5)


def test_serre_dual_twist():
    assert serre_dual_twist(3, 1) == 1
    assert serre_dual_twist(1, 0) == 0
    assert serre_dual_twist(3, -2) == 4


def test_hom_lower_bound():
    assert hom_lower_bound(1) == 29
    assert hom_lower_bound(2) == 18
    assert hom_lower_bound(3) == 7


def test_table_json_shape():
    table = instanton_cohomology(1, twists=range(-1, 2))
    data = table.to_json()
    assert data["twists"]["-1"] == [0, 1, 0, 0]
    assert set(data["provenance"]) == {"-1", "0", "1"}

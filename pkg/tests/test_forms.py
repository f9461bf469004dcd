"""Twisted forms: wedge, contraction, projectivity, the foliation pipeline."""

from random import Random

import pytest

from folcurves.errors import (
    DegreeOverflowError,
    NotContactError,
    NotProjectiveError,
    ProportionalInputError,
    WrongFormDegreeError,
    ZeroFormError,
)
from folcurves.forms import (
    TwistedForm,
    exterior_derivative,
    is_contact_form,
    is_decomposable,
    is_projective,
    legendrian_foliation,
    legendrian_sample,
    parse_form,
    pencil_form,
    radial_contraction,
    random_polynomial,
    random_projective_oneform,
    singular_ideal,
    standard_contact_form,
    vector_field_to_twoform,
    wedge,
)
from folcurves.groebner import GradedIdeal, curve_invariants, rao_module_dimensions
from folcurves.polyring import HomogeneousPolynomial, parse_polynomial

W1 = pencil_form()
W2 = standard_contact_form()

EXPECTED_WEDGE = "z0*z2*dz1/\\dz3 - z0*z3*dz1/\\dz2 - z1*z2*dz0/\\dz3 + z1*z3*dz0/\\dz2"


def _random_form(rng, q, coeff_degree=None):
    from itertools import combinations

    coeff_degree = coeff_degree or rng.randint(1, 2)
    coefficients = {}
    for idx in combinations(range(4), q):
        p = random_polynomial(coeff_degree, rng, bound=4)
        if p:
            coefficients[idx] = p
    return TwistedForm(q, coeff_degree, coefficients)


def test_wedge_pencil_contact_displayed_formula():
    result = wedge(W1, W2)
    assert str(result) == EXPECTED_WEDGE
    assert result == parse_form(EXPECTED_WEDGE)


def test_wedge_antisymmetry_and_square_zero():
    rng = Random(1)
    for _ in range(15):
        a = _random_form(rng, 1)
        b = _random_form(rng, 1)
        assert wedge(a, b) == -wedge(b, a)
        assert wedge(a, a).is_zero()


def test_wedge_associativity():
    rng = Random(2)
    for _ in range(10):
        a = _random_form(rng, 1, 1)
        b = _random_form(rng, 1, 1)
        c = _random_form(rng, 1, 1)
        assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


def test_wedge_degree_overflow():
    four_form = TwistedForm.volume()
    with pytest.raises(DegreeOverflowError):
        wedge(four_form, parse_form("dz0"))


def test_radial_contraction_examples():
    assert radial_contraction(W1).is_zero()
    dz0 = parse_form("dz0")
    assert radial_contraction(dz0) == TwistedForm.from_polynomial(parse_polynomial("z0"))
    assert radial_contraction(wedge(W1, W2)).is_zero()


def test_contraction_leibniz_identity():
    rng = Random(3)
    for _ in range(30):
        qa = rng.randint(1, 2)
        qb = rng.randint(1, min(3, 4 - qa))
        a = _random_form(rng, qa)
        b = _random_form(rng, qb)
        lhs = radial_contraction(wedge(a, b))
        rhs = wedge(radial_contraction(a), b) + \
            wedge(a, radial_contraction(b)).scale((-1) ** qa)
        assert lhs == rhs


def test_is_projective():
    assert is_projective(W2)
    assert not is_projective(parse_form("dz0"))
    assert is_projective(wedge(W1, W2))


def test_is_decomposable():
    assert is_decomposable(wedge(W1, W2))
    assert not is_decomposable(parse_form("dz0/\\dz1 + dz2/\\dz3"))
    assert is_decomposable(TwistedForm.zero(2, 2))
    with pytest.raises(WrongFormDegreeError):
        is_decomposable(W1)


def test_singular_ideal_pencil_contact():
    ideal = singular_ideal(wedge(W1, W2))
    reference = GradedIdeal.from_expressions(["z0*z2", "z0*z3", "z1*z2", "z1*z3"])
    assert ideal.equals(reference)
    assert curve_invariants(ideal) == (2, -1)
    with pytest.raises(ZeroFormError):
        singular_ideal(TwistedForm.zero(2, 2))
    with pytest.raises(WrongFormDegreeError):
        singular_ideal(W1)


def test_pencil_invariance_of_singular_ideal():
    # replacing b by b + f*a does not change the pencil, hence not the ideal
    rng = Random(8)
    a = W2
    b = random_projective_oneform(2, rng)
    f = parse_polynomial("z0 - 2*z3")
    ideal1 = singular_ideal(wedge(a, b))
    shifted = b + a.scale_by_polynomial(f)
    ideal2 = singular_ideal(wedge(a, shifted))
    assert ideal1.equals(ideal2)


def test_legendrian_foliation_degree1():
    presentation = legendrian_foliation(W2, W1)
    assert presentation.degree == 1
    assert presentation.conormal_twists == (-2, -2)
    assert curve_invariants(presentation.ideal) == (2, -1)
    assert rao_module_dimensions(presentation.ideal).total == 1


def test_legendrian_foliation_degree2_sample():
    rng = Random(0)
    presentation = legendrian_sample(2, rng)
    assert presentation.degree == 2
    assert presentation.conormal_twists == (-2, -3)
    assert curve_invariants(presentation.ideal) == (5, 1)


def test_legendrian_degree3_sample_has_degree10():
    rng = Random(0)
    presentation = legendrian_sample(3, rng)
    deg, _ = curve_invariants(presentation.ideal)
    assert deg == 10


def test_legendrian_rejections():
    with pytest.raises(NotContactError):
        legendrian_foliation(W1, W2)  # pencil form is not contact
    with pytest.raises(ProportionalInputError):
        legendrian_foliation(W2, W2.scale(3))
    with pytest.raises(ProportionalInputError):
        legendrian_foliation(W2, W2.scale_by_polynomial(parse_polynomial("z2")))
    with pytest.raises(NotProjectiveError):
        legendrian_foliation(W2, parse_form("z0*dz0"))


def test_contact_check():
    assert is_contact_form(W2)
    assert not is_contact_form(W1)
    assert is_contact_form(parse_form("z0*dz2 - z2*dz0 + z1*dz3 - z3*dz1"))


def test_exterior_derivative_of_contact_form():
    d = exterior_derivative(W2)
    assert d == parse_form("2*dz0/\\dz1 + 2*dz2/\\dz3")


def test_vector_field_to_twoform_euler_field_gives_zero():
    euler = tuple(HomogeneousPolynomial.variable(i) for i in range(4))
    assert vector_field_to_twoform(euler).is_zero()


def test_vector_field_to_twoform_examples():
    v = (parse_polynomial("z1"), HomogeneousPolynomial.zero(1),
         HomogeneousPolynomial.zero(1), HomogeneousPolynomial.zero(1))
    form = vector_field_to_twoform(v)
    assert form.form_degree == 2 and form.coefficient_degree == 2
    assert is_projective(form)
    assert is_decomposable(form)
    constant = (HomogeneousPolynomial.zero(0),) * 3 + (parse_polynomial("1"),)
    lin = vector_field_to_twoform(constant)
    assert lin.coefficient_degree == 1
    assert all(3 not in idx for idx in lin.coefficients)
    assert is_projective(lin)


def test_vector_field_radial_shift_invariance():
    rng = Random(5)
    v = tuple(random_polynomial(2, rng, bound=3) for _ in range(4))
    f = random_polynomial(1, rng, bound=3)
    shifted = tuple(vi + f * HomogeneousPolynomial.variable(i)
                    for i, vi in enumerate(v))
    assert vector_field_to_twoform(v) == vector_field_to_twoform(shifted)


def test_random_projective_oneform_is_projective():
    rng = Random(6)
    for degree in (1, 2, 3):
        form = random_projective_oneform(degree, rng)
        assert form.coefficient_degree == degree
        assert is_projective(form)

from fractions import Fraction
import itertools

import pytest

from rbcovers.scalars import (
    OMEGA_K,
    Constraint,
    NormalForm,
    ScalarPoly,
    classify,
    parse_poly,
    parse_scalar,
    poly_degree,
    scalar,
)


def test_scalar_coercion_is_exact():
    assert scalar(Fraction(6, 3)) == 2 and type(scalar(Fraction(6, 3))) is int
    assert scalar("3/6") == Fraction(1, 2)
    assert scalar("-4") == -4
    with pytest.raises(TypeError):
        scalar(0.5)
    with pytest.raises(TypeError):
        scalar(True)


@pytest.mark.parametrize("text", ["", "1/0", "a", "1/2/3"])
def test_parse_scalar_rejects(text):
    with pytest.raises(ValueError):
        parse_scalar(text)


def test_poly_degree():
    assert poly_degree(ScalarPoly()) is None
    assert poly_degree(ScalarPoly([5])) == 0
    assert poly_degree(ScalarPoly([1, 0, 1])) == 2
    assert ScalarPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert ScalarPoly([0, 0]).degree is None


def test_parse_poly():
    assert parse_poly("0,1") == ScalarPoly([0, 1])
    assert parse_poly("1") == ScalarPoly([1])
    assert parse_poly("") == ScalarPoly()
    assert parse_poly("1/2, 0, -3") == ScalarPoly([Fraction(1, 2), 0, -3])


def test_poly_evaluates_at_an_operator():
    p = ScalarPoly([1, 0, 2])
    assert p(lambda u: 3 * u, 1) == 1 + 2 * 9
    assert ScalarPoly()(lambda u: u, 5) is None


def test_classify_examples():
    v = classify(Constraint.parse("1", ""))
    assert v.in_omega0 and v.in_omegak
    v = classify(Constraint.parse("5", ""))
    assert v.in_omega0 and not v.in_omegak and v.normal_form is NormalForm.XY_MINUS_CONST and v.parameter == 5
    v = classify(Constraint.parse("0,0,1", ""))
    assert not v.in_omega0 and not v.in_omegak and v.normal_form is NormalForm.OUTSIDE
    v = classify(Constraint.parse("", "3,1"))
    assert v.in_omega0 and not v.in_omegak and v.normal_form is NormalForm.XY_MINUS_B0Y_YX and v.parameter == 3


def test_all_weight_family_members():
    assert [str(c) for c in OMEGA_K] == ["xy", "xy - 1", "xy - yx"]
    assert all(classify(c).in_omegak for c in OMEGA_K)


def _member_omega0(phi, psi):
    # phi and psi as full coefficient lists, possibly with trailing zeros
    phi_const = all(c == 0 for c in phi[1:])
    psi_zero = all(c == 0 for c in psi)
    phi_zero = all(c == 0 for c in phi)
    psi_is_b0_plus_x = len(psi) >= 2 and psi[1] == 1 and all(c == 0 for c in psi[2:])
    return (psi_zero and phi_const) or (phi_zero and psi_is_b0_plus_x)


def _member_omegak(phi, psi):
    trimmed = lambda cs: tuple(itertools.dropwhile(lambda c: c == 0, reversed(cs)))[::-1]
    return (trimmed(phi), trimmed(psi)) in {((), ()), ((1,), ()), ((), (0, 1))}


def test_classify_agrees_with_membership_predicate():
    values = range(-2, 3)
    polys = [cs for deg in range(4) for cs in itertools.product(values, repeat=deg + 1)]
    polys = polys[::7] + [(0,), (1,), (0, 1), (5,), (0, 0, 1), (3, 1)]
    for phi in polys:
        for psi in polys:
            v = classify(Constraint(ScalarPoly(phi), ScalarPoly(psi)))
            assert v.in_omega0 == _member_omega0(list(phi), list(psi)), (phi, psi)
            assert v.in_omegak == _member_omegak(list(phi), list(psi)), (phi, psi)
            assert not v.in_omegak or v.in_omega0


def test_constraint_renders():
    assert str(Constraint.from_coeffs((1, 2, 0, 3), (3, -1))) == "xy - (1 + 2x + 3x^3 + 3y - yx)"
    assert str(Constraint.from_coeffs((-2,), ())) == "xy + 2"
    assert str(Constraint.from_coeffs((), ())) == "xy"
    assert str(Constraint.from_coeffs((Fraction(1, 2),), (0, Fraction(-3, 4)))) == "xy - (1/2 - (3/4)yx)"

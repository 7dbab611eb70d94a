import itertools

import pytest

from rbcovers.cases import (
    CASE_ORDER,
    CaseSpec,
    Skip,
    case_family,
    constraint_grid,
    dispatch,
    evaluate_case,
    forcing_constraints,
    polys_over,
    run_case,
    run_counterexample_suite,
    select_cases,
)
from rbcovers.scalars import Constraint, ScalarPoly, classify

PRIMARY_CASES = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"}


def _expected_family(r, s):
    # the case table, transcribed independently of the dispatcher
    if s > 1:
        return "i" if r > s else ("ii" if r == s else "iii")
    if s == 1:
        return "iv" if r > 1 else ("v" if r == 1 else "vi")
    return "vii" if r >= 1 else "viii"


def test_dispatcher_is_total_for_nonzero_phi_and_psi():
    for r, s in itertools.product(range(5), repeat=2):
        for lead_a, lead_b in itertools.product((-2, -1, 1, 2), repeat=2):
            phi = ScalarPoly([1] * r + [lead_a])
            psi = ScalarPoly([1] * s + [lead_b])
            omega = Constraint(phi, psi)
            spec = dispatch(omega, 0)
            assert isinstance(spec, CaseSpec), (r, s)
            assert case_family(spec.case_id) == _expected_family(r, s)
            assert spec.modulus in (1, 2, 3)


def test_single_polynomial_cases():
    assert dispatch(Constraint.from_coeffs((0, 0, 3), ()), 0).case_id == "C1"
    assert dispatch(Constraint.from_coeffs((), (0, 0, 2)), 0).case_id == "C2-s2"
    assert dispatch(Constraint.from_coeffs((), (1, 2)), 0).case_id == "C2-s1"
    assert dispatch(Constraint.from_coeffs((), (4,)), 0).case_id == "C2-s0"


def test_weight_zero_family_is_skipped():
    for omega in (Constraint.from_coeffs((5,), ()), Constraint.from_coeffs((), (3, 1)), Constraint.from_coeffs((), ())):
        spec = dispatch(omega, 0)
        assert isinstance(spec, Skip) and "weight-zero family" in spec.reason


def test_nonzero_weight_dispatch():
    assert dispatch(Constraint.from_coeffs((5,), ()), 1).case_id == "W-a0"
    assert dispatch(Constraint.from_coeffs((), (3, 1)), 1).case_id == "W-b0"
    assert isinstance(dispatch(Constraint.from_coeffs((0, 1), ()), 1), Skip)


def test_case_iv_subcase_selection():
    # sum of b1^k for k < r vanishes exactly when b1 = -1 and r is even
    assert dispatch(Constraint.from_coeffs((0, 0, 1), (0, -1)), 0).case_id == "iv-b"
    assert dispatch(Constraint.from_coeffs((0, 0, 0, 1), (0, -1)), 0).case_id == "iv-a"
    assert dispatch(Constraint.from_coeffs((0, 0, 1), (0, -2)), 0).case_id == "iv-a"


def test_case_vi_subcase_selection():
    assert dispatch(Constraint.from_coeffs((3,), (0, 1)), 0).case_id == "vi-b"
    assert dispatch(Constraint.from_coeffs((3,), (0, 2)), 0).case_id == "vi-a"


@pytest.mark.parametrize(
    "phi, psi, case_id, expected",
    [
        ((0, 0, 0, 1), (0, 0, 1), "i", "z0"),
        ((0, 2), (0, 7), "v", "4·z0"),
        ((1, 0, 2), (0, 0, 3), "ii", "12·z1"),
        ((1,), (0, 0, 0, 2), "iii", "16·z2"),
        ((0, 0, 1), (0, -1), "iv-b", "2·z0"),
        ((0, 0, 0, 2), (0, 2), "iv-a", "28·z0"),
        ((3,), (0, 1), "vi-b", "6·z1"),
        ((3,), (0, -2), "vi-a", "6·z2"),
        ((0, 0, -2), (5,), "vii", "4·z0"),
        ((3,), (5,), "viii", "-10·z2"),
        ((), (5,), "C2-s0", "10·z2"),
        ((0, -3), (), "C1", "9·z0"),
    ],
)
def test_case_closed_forms(phi, psi, case_id, expected):
    res = run_case(Constraint.from_coeffs(phi, psi), 0)
    assert res.case_id == case_id
    assert str(res.computed) == expected
    assert res.match and res.passed


def test_weight_forcing_examples():
    res = run_case(Constraint.from_coeffs((1,), ()), 3)
    assert res.case_id == "W-a0" and res.computed.is_zero() and res.match
    res = run_case(Constraint.from_coeffs((5,), ()), 1)
    assert str(res.computed) == "20·z0" and res.match
    res = run_case(Constraint.from_coeffs((), (2, 1)), 3)
    assert str(res.computed) == "18·z1" and res.match


def test_orientation_sign():
    omega = Constraint.from_coeffs((0, 2), (0, 7))
    spec = dispatch(omega, 0)
    flipped = CaseSpec(**{**spec.__dict__, "orientation": -spec.orientation})
    assert evaluate_case(flipped, omega, 0) == -evaluate_case(spec, omega, 0)


def test_every_case_hits_on_small_grid():
    results = run_counterexample_suite(0, max_degree=2)
    seen = {r.case_id for r in results}
    assert {c for c in CASE_ORDER if not c.startswith("W") and c != "i"} <= seen
    assert all(r.passed for r in results)
    skipped = [r for r in results if r.skipped]
    assert all(classify(r.constraint).in_omega0 for r in skipped)


def test_grid_enumeration():
    polys = polys_over((-2, -1, 1, 2), 3)
    assert len(polys) == 1 + 4 + 16 + 64 + 256
    assert len(set(polys)) == len(polys)
    assert sum(1 for _ in constraint_grid((1,), 1)) == 9


def test_forcing_constraints_include_family_members():
    members = forcing_constraints((-1, 2))
    assert all(classify(c).in_omega0 for c in members)
    assert Constraint.from_coeffs((0,), ()) in members and Constraint.from_coeffs((), (0, 1)) in members


def test_select_cases():
    assert select_cases("all") is None
    assert select_cases("i,iv,C2,W") == {"i", "iv", "C2", "W"}
    with pytest.raises(ValueError):
        select_cases("ix")
    res = run_counterexample_suite(0, max_degree=1, cases=select_cases("v"))
    assert {r.case_id for r in res} == {"v"}

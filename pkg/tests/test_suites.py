from fractions import Fraction

import pytest

from rbcovers.free_rb import FreeRBAlgebra
from rbcovers.divided_power import DividedPowerAlgebra
from rbcovers.scalars import XY_MINUS_YX, Constraint
from rbcovers.suites import algebra_from_selector, predicts_rb, run_law_suite, run_positive_suite


def test_predictions():
    assert predicts_rb(XY_MINUS_YX, Fraction(3, 5))
    assert predicts_rb(Constraint.from_coeffs((5,), ()), 0)
    assert not predicts_rb(Constraint.from_coeffs((5,), ()), 1)
    assert not predicts_rb(Constraint.from_coeffs((0, 0, 1), ()), 0)


def test_selectors():
    assert algebra_from_selector("dp:3", 1) == DividedPowerAlgebra(3, 1)
    assert algebra_from_selector("dp:inf", 0) == DividedPowerAlgebra(None, 0)
    assert algebra_from_selector("free:dp:2", 1) == FreeRBAlgebra(DividedPowerAlgebra(2, 1))
    for bad in ("dp", "dp:x", "poly:3"):
        with pytest.raises(ValueError):
            algebra_from_selector(bad, 0)


def test_seed_is_required():
    with pytest.raises(ValueError, match="seed"):
        run_positive_suite(XY_MINUS_YX, seed=None)


def test_positive_suite_all_weight_member():
    entries = run_positive_suite(XY_MINUS_YX, weights=(-2,), trials=50, seed=0, order=8, extension_trials=20)
    assert entries and all(e.match for e in entries)
    assert {e.case for e in entries} >= {"cover-rb dp:1", "cover-rb dp:5", "extension-diff dp:inf"}


def test_positive_suite_weight_zero_member():
    omega = Constraint.from_coeffs((5,), ())
    entries = run_positive_suite(omega, weights=(0,), trials=20, seed=0, extension_trials=10)
    assert all(e.match for e in entries)


def test_positive_suite_finds_forced_defect():
    omega = Constraint.from_coeffs((5,), ())
    entries = run_positive_suite(omega, weights=(1,), trials=20, seed=0, algebras=("dp:1",), extension=False)
    rb = [e for e in entries if e.case.startswith("cover-rb")][0]
    assert rb.computed != "0" and rb.match and not rb.binding


def test_positive_suite_is_deterministic():
    omega = Constraint.from_coeffs((0, 1), (0, 1))
    run = lambda: [(e.case, e.computed, e.detail) for e in run_positive_suite(
        omega, weights=(0,), trials=5, seed=42, algebras=("dp:3",), extension_trials=5)]
    assert run() == run()


def test_law_suite_passes():
    results = run_law_suite(seed=3, degree_cap=2, weights=(0, 1), samples=5)
    assert results and all(r.passed for r in results)
    names = " ".join(r.name for r in results)
    for law in ("monad unit", "monad associativity", "comonad counit", "coassociativity", "vartheta", "theta"):
        assert law in names

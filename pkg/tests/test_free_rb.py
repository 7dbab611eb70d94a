from fractions import Fraction
import itertools
import random

import pytest

from rbcovers.algebra import CarrierMismatch, Operator, check_diff_axiom, check_rb_axiom, random_pairs
from rbcovers.divided_power import DividedPowerAlgebra, basis_product
from rbcovers.free_rb import (
    Extension,
    FreeRBAlgebra,
    extension_apply,
    free_map,
    free_P,
    mix_shuffle_mul,
    monad_mu,
    mu_word,
    unit_embed,
    vartheta,
)
from rbcovers.scalars import OMEGA_K, XY_MINUS_ONE, Constraint

WEIGHTS = (0, 1, -2, Fraction(3, 5))


def over_k(lam):
    return FreeRBAlgebra(DividedPowerAlgebra(1, lam))


def ones(F, n):
    # z_n as the pure word 1 ⊗ ... ⊗ 1 with n + 1 slots
    return F.word(*([0] * (n + 1)))


def test_degree_one_words_multiply_in_the_carrier():
    A = DividedPowerAlgebra(3, 1)
    F = FreeRBAlgebra(A)
    a, b = A.z(1), A.z(1) + 2 * A.z(2)
    assert F.mul(unit_embed(F, a), unit_embed(F, b)) == unit_embed(F, A.mul(a, b))


def test_z1_squared_over_k():
    lam = Fraction(3, 5)
    F = over_k(lam)
    assert F.mul(ones(F, 1), ones(F, 1)) == 2 * ones(F, 2) + lam * ones(F, 1)


@pytest.mark.parametrize("lam", (0, 1, -2))
def test_shuffle_matches_divided_power_formula(lam):
    F = over_k(lam)
    for m, n in itertools.product(range(6), repeat=2):
        expected = {(0,) * (k + 1): c for k, c in basis_product(m, n, lam).items()}
        assert mix_shuffle_mul(ones(F, m), ones(F, n), lam).terms == expected


def test_weight_argument_must_match():
    F = over_k(1)
    with pytest.raises(ValueError):
        mix_shuffle_mul(ones(F, 1), ones(F, 1), 2)
    with pytest.raises(CarrierMismatch):
        mix_shuffle_mul(ones(F, 1), ones(over_k(2), 1))


@pytest.mark.parametrize("lam", WEIGHTS)
@pytest.mark.parametrize("m", [1, 3])
def test_shuffle_commutative_associative(lam, m):
    F = FreeRBAlgebra(DividedPowerAlgebra(m, lam))
    rng = random.Random(1)
    for _ in range(10):
        u, v, w = (F.random_element(rng) for _ in range(3))
        assert F.mul(u, v) == F.mul(v, u)
        assert F.mul(u, F.mul(v, w)) == F.mul(F.mul(u, v), w)


@pytest.mark.parametrize("lam", WEIGHTS)
@pytest.mark.parametrize("m", [1, 3])
def test_free_operator_is_rota_baxter(lam, m):
    F = FreeRBAlgebra(DividedPowerAlgebra(m, lam))
    assert check_rb_axiom(F.P, lam, random_pairs(F, random.Random(2), 30))


def test_free_P_examples():
    A = DividedPowerAlgebra(3, 0)
    F = FreeRBAlgebra(A)
    assert free_P(F.word(2)) == F.word(0, 2)
    assert free_P(F.zero()) == F.zero()
    Fk = over_k(0)
    assert free_P(Fk.word(0)) == ones(Fk, 1)


def test_unit_embed():
    A = DividedPowerAlgebra(3, 1)
    F = FreeRBAlgebra(A)
    u = F.random_element(random.Random(3))
    assert F.mul(unit_embed(F, A.one()), u) == u
    assert unit_embed(F, A.zero()) == F.zero()
    with pytest.raises(CarrierMismatch):
        unit_embed(F, DividedPowerAlgebra(2, 1).z(0))


def test_degree_and_render():
    F = FreeRBAlgebra(DividedPowerAlgebra(3, 0))
    u = F.element({(0, 1): 2, (2,): -1, (0, 0, 1): Fraction(1, 2)})
    assert u.degree == 3
    assert F.zero().degree == 0
    assert str(u) == "-(z2) + 2·(z0 ⊗ z1) + 1/2·(z0 ⊗ z0 ⊗ z1)"
    assert str(F.zero()) == "0"
    assert F.element({(1,): 0}).terms == {}


def test_mu_examples():
    A = DividedPowerAlgebra(3, 1)
    F = FreeRBAlgebra(A)
    FF = FreeRBAlgebra(F)
    rng = random.Random(4)
    u, v = F.random_element(rng), F.random_element(rng)
    assert mu_word([u]) == u
    assert mu_word([u, v]) == F.mul(u, F.P(v))
    w = FF.zero()
    for word_u, cu in u.terms.items():
        for word_v, cv in v.terms.items():
            w = w + (cu * cv) * FF.word(word_u, word_v)
    assert monad_mu(w) == F.mul(u, F.P(v))
    with pytest.raises(CarrierMismatch):
        monad_mu(u)


@pytest.mark.parametrize("lam", (0, 1, Fraction(3, 5)))
def test_monad_laws(lam):
    A = DividedPowerAlgebra(2, lam)
    F = FreeRBAlgebra(A, max_word_length=2)
    FF = FreeRBAlgebra(F)
    FFF = FreeRBAlgebra(FF)
    rng = random.Random(5)
    for _ in range(10):
        u = F.random_element(rng)
        assert monad_mu(unit_embed(FF, u)) == u
        assert monad_mu(free_map(FF, lambda a: unit_embed(F, a), u)) == u
        word = tuple(FF.random_basis_index(rng, 2) for _ in range(2))
        w = FFF.basis(word)
        assert monad_mu(monad_mu(w)) == monad_mu(free_map(FF, monad_mu, w))


def test_vartheta_examples():
    A = DividedPowerAlgebra(3, 0)
    F = FreeRBAlgebra(A)
    assert vartheta(A.P, F.word(1)) == A.z(1)
    rng = random.Random(6)
    v0, v1 = A.random_element(rng), A.random_element(rng)
    w = F.zero()
    for i, a in A.coordinates(v0).items():
        for j, b in A.coordinates(v1).items():
            w = w + (a * b) * F.word(i, j)
    assert vartheta(A.P, w) == A.mul(v0, A.P(v1))
    assert vartheta(A.P, F.word(0, 0, 0)) == A.z(2)


@pytest.mark.parametrize("lam", WEIGHTS)
def test_vartheta_is_a_rota_baxter_morphism(lam):
    A = DividedPowerAlgebra(3, lam)
    F = FreeRBAlgebra(A)
    rng = random.Random(7)
    for _ in range(20):
        u, v = F.random_element(rng), F.random_element(rng)
        assert vartheta(A.P, F.P(u)) == A.P(vartheta(A.P, u))
        assert vartheta(A.P, F.mul(u, v)) == A.mul(vartheta(A.P, u), vartheta(A.P, v))


def test_extension_restricts_to_q():
    R = DividedPowerAlgebra(None, 1)
    F = FreeRBAlgebra(R)
    for omega in OMEGA_K + (Constraint.from_coeffs((2, 1), (1, 0, 3)),):
        ext = Extension(R.d, omega, F)
        for i in range(5):
            assert ext(F.word(i)) == unit_embed(F, R.d(R.z(i)))


def test_extension_for_xy_minus_one():
    # with q(1) = 0 the head term vanishes and the tail is returned unchanged
    R = DividedPowerAlgebra(None, 2)
    F = FreeRBAlgebra(R)
    for b in range(4):
        assert extension_apply(R.d, XY_MINUS_ONE, F.word(0, b)) == F.word(b)


def test_extension_filtration():
    R = DividedPowerAlgebra(4, 1)
    F = FreeRBAlgebra(R)
    rng = random.Random(8)
    table = {i: R.random_element(rng) for i in range(1, 4)}
    q = Operator(R, lambda u: sum((c * table[i] for i, c in R.coordinates(u).items() if i), R.zero()), "q")
    assert q(R.one()).is_zero()
    for omega in (Constraint.from_coeffs((1, 2, 1), (3, 1, 1)), Constraint.from_coeffs((), (0, 0, 2))):
        ext = Extension(q, omega, F)
        for _ in range(10):
            u = F.random_element(rng, max_length=3)
            assert ext(u).degree <= u.degree


def test_extension_precondition():
    R = DividedPowerAlgebra(3, 0)
    F = FreeRBAlgebra(R)
    with pytest.raises(ValueError, match=r"q\(1\) = z1"):
        Extension(R.P, XY_MINUS_ONE, F)
    with pytest.raises(ValueError):
        extension_apply(R.d, XY_MINUS_ONE, F.word(0), weight=5)


@pytest.mark.parametrize("lam", (0, 1, -2))
@pytest.mark.parametrize("omega", OMEGA_K, ids=str)
def test_extension_is_differential_for_all_weight_family(lam, omega):
    R = DividedPowerAlgebra(None, lam, max_random_index=4)
    F = FreeRBAlgebra(R)
    ext = Extension(R.d, omega, F).as_operator()
    assert check_diff_axiom(ext, lam, random_pairs(F, random.Random(9), 30))


def test_extension_fails_off_the_family():
    R = DividedPowerAlgebra(None, 1, max_random_index=4)
    F = FreeRBAlgebra(R)
    ext = Extension(R.d, Constraint.from_coeffs((5,), ()), F).as_operator()
    assert not check_diff_axiom(ext, 1, random_pairs(F, random.Random(10), 30))
    R0 = DividedPowerAlgebra(None, 0, max_random_index=4)
    F0 = FreeRBAlgebra(R0)
    for omega in (Constraint.from_coeffs((5,), ()), Constraint.from_coeffs((), (2, 1))):
        ext0 = Extension(R0.d, omega, F0).as_operator()
        assert check_diff_axiom(ext0, 0, random_pairs(F0, random.Random(11), 30))
    bad = Extension(R0.d, Constraint.from_coeffs((0, 0, 1), ()), F0).as_operator()
    assert not check_diff_axiom(bad, 0, random_pairs(F0, random.Random(12), 30))

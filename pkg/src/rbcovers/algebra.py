"""Commutative unital algebras with linear operators, and sample-based axiom checks.

A carrier is an :class:`Algebra` instance.  Its elements are immutable values
supporting ``+``, ``-`` and multiplication by scalars; the ring product goes
through :meth:`Algebra.mul` because it may depend on the weight.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Optional, Sequence, Tuple

from .scalars import Constraint, Scalar, scalar


class CarrierMismatch(ValueError):
    """An operator was applied to, or compared with, elements of another carrier."""


class Algebra:
    """Interface shared by every carrier.

    Subclasses set ``weight`` and implement the abstract methods.  Carriers
    with a distinguished basis also implement :meth:`basis`,
    :meth:`coordinates` and :meth:`random_basis_index`; tensor words over them
    are stored as tuples of basis indices.
    """

    weight: Scalar = 0

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def mul(self, u, v):
        raise NotImplementedError

    def contains(self, u) -> bool:
        raise NotImplementedError

    def equal(self, u, v) -> bool:
        return u == v

    def is_zero(self, u) -> bool:
        return self.equal(u, self.zero())

    def random_element(self, rng: random.Random):
        raise NotImplementedError

    def render(self, u) -> str:
        return str(u)

    # basis-carrier hooks
    def basis(self, index):
        raise NotImplementedError(f"{self!r} has no basis")

    def coordinates(self, u) -> dict:
        raise NotImplementedError(f"{self!r} has no basis")

    def random_basis_index(self, rng: random.Random):
        raise NotImplementedError(f"{self!r} has no basis")

    def render_basis(self, index) -> str:
        return self.render(self.basis(index))

    def power(self, u, n: int):
        out = self.one()
        for _ in range(n):
            out = self.mul(out, u)
        return out


@dataclass(frozen=True, eq=False)
class Operator:
    """A linear map on one carrier."""

    algebra: Algebra
    fn: Callable[[Any], Any]
    name: str = "op"

    def __call__(self, u):
        return self.fn(u)

    def __repr__(self) -> str:
        return f"Operator({self.name})"

    def compose(self, other: "Operator", name: Optional[str] = None) -> "Operator":
        _same_carrier(self.algebra, other.algebra)
        return Operator(self.algebra, lambda u: self.fn(other.fn(u)), name or f"{self.name}∘{other.name}")

    def iterate(self, u, n: int):
        for _ in range(n):
            u = self.fn(u)
        return u


def zero_operator(algebra: Algebra) -> Operator:
    z = algebra.zero()
    return Operator(algebra, lambda u: z, "0")


def identity_operator(algebra: Algebra) -> Operator:
    return Operator(algebra, lambda u: u, "id")


def _same_carrier(a: Algebra, b: Algebra) -> None:
    if a is not b and a != b:
        raise CarrierMismatch(f"operators act on different carriers: {a!r} vs {b!r}")


@dataclass
class CheckResult:
    """Outcome of a sample-based identity check.

    On failure ``witness`` holds the offending input(s) and ``defect`` the
    nonzero left-minus-right value, as carrier elements.
    """

    passed: bool
    checked: int
    witness: Optional[Tuple] = None
    defect: Any = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed


def _check_samples(algebra: Algebra, samples: Iterable[Sequence]) -> list:
    out = []
    for pair in samples:
        for u in pair:
            if not algebra.contains(u):
                raise CarrierMismatch(f"sample {u!r} is not an element of {algebra!r}")
        out.append(tuple(pair))
    return out


def rb_identity_defect(P: Operator, weight: Scalar, u, v):
    """``P(u)P(v) - (P(P(u)v) + P(uP(v)) + weight P(uv))``."""
    A = P.algebra
    Pu, Pv = P(u), P(v)
    lhs = A.mul(Pu, Pv)
    rhs = P(A.mul(Pu, v)) + P(A.mul(u, Pv))
    if weight != 0:
        rhs = rhs + weight * P(A.mul(u, v))
    return lhs - rhs


def check_rb_axiom(P: Operator, weight, samples: Iterable[Sequence]) -> CheckResult:
    """Check the Rota-Baxter identity of the given weight on sampled pairs."""
    weight = scalar(weight)
    A = P.algebra
    pairs = _check_samples(A, samples)
    for u, v in pairs:
        defect = rb_identity_defect(P, weight, u, v)
        if not A.is_zero(defect):
            return CheckResult(False, len(pairs), (u, v), defect)
    return CheckResult(True, len(pairs))


def diff_identity_defect(d: Operator, weight: Scalar, u, v):
    """``d(uv) - (d(u)v + u d(v) + weight d(u)d(v))``."""
    A = d.algebra
    du, dv = d(u), d(v)
    rhs = A.mul(du, v) + A.mul(u, dv)
    if weight != 0:
        rhs = rhs + weight * A.mul(du, dv)
    return d(A.mul(u, v)) - rhs


def check_diff_axiom(d: Operator, weight, samples: Iterable[Sequence]) -> CheckResult:
    """Check ``d(1) = 0`` and the weighted Leibniz rule on sampled pairs."""
    weight = scalar(weight)
    A = d.algebra
    pairs = _check_samples(A, samples)
    d_one = d(A.one())
    if not A.is_zero(d_one):
        return CheckResult(False, 0, (A.one(),), d_one, "d(1) != 0")
    for u, v in pairs:
        defect = diff_identity_defect(d, weight, u, v)
        if not A.is_zero(defect):
            return CheckResult(False, len(pairs), (u, v), defect)
    return CheckResult(True, len(pairs))


def omega_relation_defect(d: Operator, Q: Operator, omega: Constraint, u):
    """``d(Q(u)) - (phi(d)(u) + Q(psi(d)(u)))``."""
    out = d(Q(u))
    phi_part = omega.phi(d, u)
    if phi_part is not None:
        out = out - phi_part
    psi_part = omega.psi(d, u)
    if psi_part is not None:
        out = out - Q(psi_part)
    return out


def check_omega_relation(d: Operator, Q: Operator, omega: Constraint, samples: Iterable) -> CheckResult:
    """Check ``d Q = phi(d) + Q psi(d)`` on sampled elements."""
    _same_carrier(d.algebra, Q.algebra)
    A = d.algebra
    elems = [p[0] for p in _check_samples(A, ((u,) for u in samples))]
    for u in elems:
        defect = omega_relation_defect(d, Q, omega, u)
        if not A.is_zero(defect):
            return CheckResult(False, len(elems), (u,), defect)
    return CheckResult(True, len(elems))


def check_linearity(op: Operator, samples: Iterable[Sequence], scalars=(2, -3)) -> CheckResult:
    A = op.algebra
    pairs = _check_samples(A, samples)
    for u, v in pairs:
        defect = op(u + v) - (op(u) + op(v))
        if not A.is_zero(defect):
            return CheckResult(False, len(pairs), (u, v), defect, "additivity")
        for c in scalars:
            defect = op(c * u) - c * op(u)
            if not A.is_zero(defect):
                return CheckResult(False, len(pairs), (u,), defect, f"scaling by {c}")
    return CheckResult(True, len(pairs))


def random_pairs(algebra: Algebra, rng: random.Random, count: int) -> list:
    return [(algebra.random_element(rng), algebra.random_element(rng)) for _ in range(count)]

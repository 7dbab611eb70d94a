"""Counterexample recipes: for each constraint outside the classified families, a
carrier, a pair of series and a component at which the cover of ``P`` fails the
Rota-Baxter identity, together with the closed form of that failure.

Every recipe runs on a quotient ``Sha(k)/I_m`` with ``m <= 3`` and the shift
operator, reads the defect at component ``n = 1``, and uses series with a
single nonzero component ("spikes") or the identity series.

The closed forms are quoted in two sign conventions.  ``orientation = -1``
means the expected value is operator-side minus product-side, i.e. the
negative of :func:`rb_defect`; ``orientation = +1`` means it equals
:func:`rb_defect` as computed.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .divided_power import DividedPowerAlgebra, DPElement
from .hurwitz import CoverOperator, HurwitzRing, RBDefectSeries, Series
from .scalars import Constraint, NormalForm, Scalar, ScalarPoly, classify, scalar

CASE_ORDER = (
    "C1", "C2-s0", "C2-s1", "C2-s2",
    "i", "ii", "iii", "iv-a", "iv-b", "v", "vi-a", "vi-b", "vii", "viii",
    "W-a0", "W-b0",
)


@dataclass(frozen=True)
class CaseSpec:
    """One instantiated counterexample recipe.

    ``f`` and ``g`` are ``(index, basis)`` spikes ``index -> z_basis``, or
    ``None`` for the identity series.  The expected defect is
    ``expected_coeff * z_expected_index`` in the convention fixed by
    ``orientation``.
    """

    case_id: str
    modulus: int
    f: Optional[Tuple[int, int]]
    g: Optional[Tuple[int, int]]
    expected_coeff: Scalar
    expected_index: int
    orientation: int = -1
    n: int = 1
    nonzero_required: bool = True

    def expected(self) -> DPElement:
        return DPElement.from_dict({self.expected_index: self.expected_coeff}, self.modulus)


@dataclass(frozen=True)
class Skip:
    """No recipe applies; ``reason`` says why."""

    reason: str


def case_family(case_id: str) -> str:
    """``"iv-b" -> "iv"``, ``"C2-s1" -> "C2"``, ``"W-a0" -> "W"``."""
    return case_id.split("-")[0]


def dispatch(omega: Constraint, weight=0):
    """Select the recipe for ``omega`` at ``weight``, or a :class:`Skip`.

    At weight zero the recipes cover exactly the constraints outside the
    weight-zero family.  At nonzero weight the two forcing recipes cover
    the weight-zero family itself.
    """
    weight = scalar(weight)
    verdict = classify(omega)
    if weight != 0:
        if verdict.normal_form is NormalForm.XY_MINUS_CONST:
            a0 = verdict.parameter
            return CaseSpec("W-a0", 1, None, None, weight * a0 * (a0 - 1), 0, +1, nonzero_required=False)
        if verdict.normal_form is NormalForm.XY_MINUS_B0Y_YX:
            b0 = verdict.parameter
            return CaseSpec("W-b0", 2, (1, 0), None, weight * weight * b0, 1, +1, nonzero_required=False)
        return Skip("outside the weight-zero family: the weight-zero recipes already apply")
    if verdict.in_omega0:
        return Skip(f"in the weight-zero family ({verdict.describe()}); no counterexample exists")
    return _weight_zero_case(omega)


def _weight_zero_case(omega: Constraint) -> CaseSpec:
    phi, psi = omega.phi, omega.psi
    r, s = omega.r, omega.s
    if psi.is_zero():
        a = phi[r]
        return CaseSpec("C1", 2, (2 * r - 1, 0), None, a * a, 0)
    b = psi[s]
    if phi.is_zero():
        if s >= 2:
            return CaseSpec("C2-s2", 3, (s * s, 0), None, b ** (s + 1), 2)
        if s == 1:
            return CaseSpec("C2-s1", 3, (1, 0), None, b * (b - 1), 2)
        return CaseSpec("C2-s0", 3, None, None, 2 * b, 2, +1)
    a = phi[r]
    if s > 1:
        if r > s:
            return CaseSpec("i", 1, (r + (r - 1) * s, 0), None, a * a * b ** (r - 1), 0)
        if r == s:
            return CaseSpec("ii", 2, (s * s, 1), None, a * a * b ** (s - 1), 1)
        return CaseSpec("iii", 3, (s * s, 0), None, b ** (s + 1), 2)
    if s == 1:
        if r > 1:
            total = sum(b ** k for k in range(r))
            if total != 0:
                return CaseSpec("iv-a", 1, (2 * r - 1, 0), None, a * a * total, 0)
            return CaseSpec("iv-b", 1, (2 * r - 2, 0), (1, 0), -r * a * a * b ** (r - 1), 0)
        if r == 1:
            return CaseSpec("v", 1, (1, 0), None, a * a, 0)
        if b != 1:
            return CaseSpec("vi-a", 3, (1, 0), None, b * (b - 1), 2)
        return CaseSpec("vi-b", 3, None, None, 2 * phi[0], 1)
    if r >= 1:
        return CaseSpec("vii", 1, (2 * r - 1, 0), None, a * a, 0)
    return CaseSpec("viii", 3, None, None, -2 * b, 2)


class _Workspace:
    """Carriers, rings and input series shared across many constraints."""

    def __init__(self, weight: Scalar):
        self.weight = weight
        self.rings = {}
        self.series = {}

    def ring(self, m: int) -> HurwitzRing:
        hit = self.rings.get(m)
        if hit is None:
            hit = self.rings[m] = HurwitzRing(DividedPowerAlgebra(m, self.weight))
        return hit

    def recipe(self, m: int, spec: Optional[Tuple[int, int]]) -> Series:
        key = (m, spec)
        hit = self.series.get(key)
        if hit is None:
            R = self.ring(m)
            hit = R.one() if spec is None else R.spike(spec[0], R.carrier.z(spec[1]))
            self.series[key] = hit
        return hit


def evaluate_case(spec: CaseSpec, omega: Constraint, weight, workspace: Optional[_Workspace] = None) -> DPElement:
    """Run the full cover computation for ``spec`` and return the defect in the spec's convention."""
    weight = scalar(weight)
    ws = workspace or _Workspace(weight)
    R = ws.ring(spec.modulus)
    C = CoverOperator(R.carrier.P, omega, R)
    f = ws.recipe(spec.modulus, spec.f)
    g = ws.recipe(spec.modulus, spec.g)
    raw = RBDefectSeries(C, f, g)[spec.n]
    return raw if spec.orientation > 0 else -raw


@dataclass
class CaseResult:
    case_id: str
    constraint: Constraint
    weight: Scalar
    computed: Optional[DPElement]
    expected: Optional[DPElement]
    match: bool
    elapsed_ms: float = 0.0
    skipped: Optional[str] = None
    nonzero_ok: bool = True

    @property
    def passed(self) -> bool:
        return self.skipped is not None or (self.match and self.nonzero_ok)


def run_case(omega: Constraint, weight=0, workspace: Optional[_Workspace] = None, spec=None) -> CaseResult:
    weight = scalar(weight)
    if spec is None:
        spec = dispatch(omega, weight)
    if isinstance(spec, Skip):
        return CaseResult("skip", omega, weight, None, None, True, skipped=spec.reason)
    start = time.perf_counter()
    computed = evaluate_case(spec, omega, weight, workspace)
    elapsed = (time.perf_counter() - start) * 1000
    expected = spec.expected()
    nonzero_ok = not spec.nonzero_required or not expected.is_zero()
    return CaseResult(spec.case_id, omega, weight, computed, expected, computed == expected, elapsed, None, nonzero_ok)


def polys_over(grid: Sequence[int], max_degree: int, include_zero: bool = True) -> List[ScalarPoly]:
    """Every polynomial of degree ``<= max_degree`` whose coefficients all lie in ``grid``."""
    out = [ScalarPoly()] if include_zero else []
    for deg in range(max_degree + 1):
        for cs in itertools.product(grid, repeat=deg + 1):
            if cs[-1] != 0:
                out.append(ScalarPoly(cs))
    return out


def constraint_grid(grid: Sequence[int] = (-2, -1, 1, 2), max_degree: int = 3) -> Iterator[Constraint]:
    """All ``(phi, psi)`` pairs with each polynomial zero or drawn from :func:`polys_over`."""
    polys = polys_over(grid, max_degree)
    for phi in polys:
        for psi in polys:
            yield Constraint(phi, psi)


def forcing_constraints(grid: Sequence[int] = (-2, -1, 1, 2)) -> List[Constraint]:
    """The weight-zero family restricted to parameters in ``grid`` (plus 0 and 1)."""
    a0s = sorted(set(grid) | {0, 1})
    b0s = sorted(set(grid) | {0})
    return [Constraint.from_coeffs((a0,), ()) for a0 in a0s] + [Constraint.from_coeffs((), (b0, 1)) for b0 in b0s]


def select_cases(selector: str) -> Optional[set]:
    """Parse ``"all"`` or a comma list of case ids or families (``iv``, ``C2``, ``W``)."""
    selector = selector.strip()
    if selector in ("", "all"):
        return None
    wanted = {part.strip() for part in selector.split(",") if part.strip()}
    known = set(CASE_ORDER) | {case_family(c) for c in CASE_ORDER}
    unknown = wanted - known
    if unknown:
        raise ValueError(f"unknown case id(s): {', '.join(sorted(unknown))}")
    return wanted


def run_counterexample_suite(
    weight=0,
    grid: Sequence[int] = (-2, -1, 1, 2),
    max_degree: int = 3,
    cases: Optional[set] = None,
    constraints: Optional[Iterable[Constraint]] = None,
) -> List[CaseResult]:
    """Dispatch and evaluate every constraint; skipped constraints are kept with a reason.

    By default the source is :func:`constraint_grid` at weight zero and
    :func:`forcing_constraints` otherwise.  With a ``cases`` selection, skips
    are dropped.  Results are sorted by case id (in :data:`CASE_ORDER`) and
    then by constraint.
    """
    weight = scalar(weight)
    ws = _Workspace(weight)
    if constraints is not None:
        source = constraints
    elif weight == 0:
        source = constraint_grid(grid, max_degree)
    else:
        source = forcing_constraints(grid)
    results = []
    for omega in source:
        spec = dispatch(omega, weight)
        if isinstance(spec, Skip):
            if cases is None:
                results.append(CaseResult("skip", omega, weight, None, None, True, skipped=spec.reason))
            continue
        if cases is not None and spec.case_id not in cases and case_family(spec.case_id) not in cases:
            continue
        results.append(run_case(omega, weight, ws, spec))
    rank = {c: i for i, c in enumerate(CASE_ORDER)}
    results.sort(key=lambda res: (rank.get(res.case_id, len(rank)), res.constraint.phi.coeffs, res.constraint.psi.coeffs))
    return results

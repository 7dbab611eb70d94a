"""Hurwitz series over a carrier algebra, evaluated one component at a time.

A series is an immutable expression graph (literal, sum, scale, product,
shift, cover, ...) whose ``n``-th component is computed on demand and
memoised per node.  Every component depends on finitely many components of
the leaves, so all values are exact.

Series objects are not thread-safe: the per-node memo tables are plain dicts.
Evaluate a given series from one thread at a time.
"""
from __future__ import annotations

import random
import re
from math import comb
from typing import Dict, Optional

from .algebra import Algebra, CarrierMismatch, CheckResult, Operator
from .scalars import Constraint, Scalar, scalar


class HurwitzRing(Algebra):
    """The weight-``lam`` Hurwitz series ring over ``carrier``; ``lam`` is the carrier's weight.

    Equality of series is decided on components ``0 .. check_order``.
    """

    def __init__(self, carrier: Algebra, check_order: int = 8):
        self.carrier = carrier
        self.weight = carrier.weight
        self.check_order = check_order
        self.partial = Operator(self, partial, "∂")

    def __repr__(self) -> str:
        return f"HurwitzRing({self.carrier!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, HurwitzRing) and self.carrier == other.carrier

    def __hash__(self) -> int:
        return hash(("hurwitz", self.carrier))

    def series(self, support: Dict[int, object]) -> "LiteralSeries":
        return LiteralSeries(self, support)

    def spike(self, index: int, value) -> "LiteralSeries":
        """The series with ``value`` at ``index`` and zero elsewhere."""
        return LiteralSeries(self, {index: value})

    def zero(self) -> "LiteralSeries":
        return LiteralSeries(self, {})

    def one(self) -> "LiteralSeries":
        return LiteralSeries(self, {0: self.carrier.one()})

    def constant(self, value) -> "LiteralSeries":
        return LiteralSeries(self, {0: value})

    def mul(self, f: "Series", g: "Series") -> "Series":
        return ProductSeries(f, g)

    def contains(self, f) -> bool:
        return isinstance(f, Series) and f.ring == self

    def equal(self, f: "Series", g: "Series") -> bool:
        return all(self.carrier.equal(f[n], g[n]) for n in range(self.check_order + 1))

    def is_zero(self, f: "Series") -> bool:
        return all(self.carrier.is_zero(f[n]) for n in range(self.check_order + 1))

    def random_element(self, rng: random.Random, max_support: int = 6, max_index: int = 10) -> "LiteralSeries":
        size = rng.randint(1, max_support)
        indices = rng.sample(range(max_index + 1), size)
        return LiteralSeries(self, {i: self.carrier.random_element(rng) for i in indices})

    def render(self, f: "Series") -> str:
        return f.render()

    def parse(self, text: str) -> "LiteralSeries":
        return parse_series(self, text)


class Series:
    """Base class; subclasses implement :meth:`_compute`."""

    __slots__ = ("ring", "_memo")

    def __init__(self, ring: HurwitzRing):
        self.ring = ring
        self._memo: Dict[int, object] = {}

    def __getitem__(self, n: int):
        try:
            return self._memo[n]
        except KeyError:
            pass
        if n < 0:
            raise IndexError("series components are indexed by natural numbers")
        value = self._compute(n)
        self._memo[n] = value
        return value

    def _compute(self, n: int):
        raise NotImplementedError

    @property
    def carrier(self) -> Algebra:
        return self.ring.carrier

    def head(self, n: int) -> list:
        return [self[i] for i in range(n)]

    def _same_ring(self, other: "Series") -> None:
        if not isinstance(other, Series):
            raise TypeError(f"expected a Series, got {type(other).__name__}")
        if other.ring != self.ring:
            raise CarrierMismatch(f"series over different rings: {self.ring!r} vs {other.ring!r}")

    def __add__(self, other: "Series") -> "Series":
        self._same_ring(other)
        return SumSeries(self, other)

    def __sub__(self, other: "Series") -> "Series":
        self._same_ring(other)
        return SumSeries(self, ScaledSeries(-1, other))

    def __neg__(self) -> "Series":
        return ScaledSeries(-1, self)

    def __rmul__(self, c) -> "Series":
        if isinstance(c, Series):
            return NotImplemented
        return ScaledSeries(scalar(c), self)

    def __mul__(self, other) -> "Series":
        if isinstance(other, Series):
            self._same_ring(other)
            return ProductSeries(self, other)
        return ScaledSeries(scalar(other), self)

    def partial(self, k: int = 1) -> "Series":
        return self if k == 0 else ShiftSeries(self, k)

    def render(self, order: Optional[int] = None) -> str:
        order = self.ring.check_order if order is None else order
        carrier = self.carrier
        items = [f"{n}: {carrier.render(self[n])}" for n in range(order + 1) if not carrier.is_zero(self[n])]
        return "{" + ", ".join(items) + "}"

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.render(4)} ...)"


class LiteralSeries(Series):
    """Finitely supported series given by an explicit ``{index: element}`` map."""

    __slots__ = ("support", "_zero")

    def __init__(self, ring: HurwitzRing, support: Dict[int, object]):
        super().__init__(ring)
        carrier = ring.carrier
        clean = {}
        for i, u in support.items():
            if i < 0:
                raise IndexError("negative series index")
            if not carrier.contains(u):
                raise CarrierMismatch(f"{u!r} is not an element of {carrier!r}")
            if not carrier.is_zero(u):
                clean[int(i)] = u
        self.support = clean
        self._zero = carrier.zero()

    def __getitem__(self, n: int):
        if n < 0:
            raise IndexError("series components are indexed by natural numbers")
        return self.support.get(n, self._zero)

    def partial(self, k: int = 1) -> "LiteralSeries":
        return LiteralSeries(self.ring, {i - k: u for i, u in self.support.items() if i >= k})

    def render(self, order: Optional[int] = None) -> str:
        carrier = self.carrier
        return "{" + ", ".join(f"{i}: {carrier.render(self.support[i])}" for i in sorted(self.support)) + "}"

    def __eq__(self, other) -> bool:
        if isinstance(other, LiteralSeries):
            return self.ring == other.ring and self.support == other.support
        return NotImplemented

    __hash__ = None


class SumSeries(Series):
    __slots__ = ("f", "g")

    def __init__(self, f: Series, g: Series):
        super().__init__(f.ring)
        self.f, self.g = f, g

    def _compute(self, n):
        return self.f[n] + self.g[n]


class ScaledSeries(Series):
    __slots__ = ("c", "f")

    def __init__(self, c: Scalar, f: Series):
        super().__init__(f.ring)
        self.c, self.f = c, f

    def _compute(self, n):
        return self.c * self.f[n]


class ShiftSeries(Series):
    """``∂^k f``: component ``n`` is ``f[n + k]``."""

    __slots__ = ("f", "k")

    def __init__(self, f: Series, k: int):
        if isinstance(f, ShiftSeries):
            f, k = f.f, f.k + k
        super().__init__(f.ring)
        self.f, self.k = f, k

    def __getitem__(self, n):
        return self.f[n + self.k]

    def partial(self, k: int = 1) -> Series:
        return self if k == 0 else ShiftSeries(self.f, self.k + k)


class ProductSeries(Series):
    """The weight-``lam`` Hurwitz product of two series."""

    __slots__ = ("f", "g")

    def __init__(self, f: Series, g: Series):
        f._same_ring(g)
        super().__init__(f.ring)
        self.f, self.g = f, g

    def _compute(self, n):
        return hmul(self.f, self.g, self.ring.weight, n)


def hmul(f: Series, g: Series, weight, n: int):
    """Component ``n`` of the Hurwitz product:

        sum_{k=0}^{n} sum_{j=0}^{n-k} C(n,k) C(n-k,j) lam^k f_{n-j} g_{k+j}
    """
    f._same_ring(g)
    ring = f.ring
    if scalar(weight) != ring.weight:
        raise ValueError(f"weight {weight} does not match the series ring weight {ring.weight}")
    lam = ring.weight
    carrier = ring.carrier
    total = carrier.zero()
    k_max = n if lam != 0 else 0
    for k in range(k_max + 1):
        ck = comb(n, k) * (lam ** k if k else 1)
        for j in range(n - k + 1):
            a = f[n - j]
            if carrier.is_zero(a):
                continue
            b = g[k + j]
            if carrier.is_zero(b):
                continue
            total = total + (ck * comb(n - k, j)) * carrier.mul(a, b)
    return total


def partial(f: Series) -> Series:
    """``∂f``, with ``(∂f)_n = f_{n+1}``."""
    return f.partial(1)


def epsilon(f: Series):
    """The counit: component 0."""
    return f[0]


def delta(f: Series, m: int, n: int):
    """Entry ``n`` of row ``m`` of the comultiplication, i.e. ``f_{m+n}``."""
    return f[m + n]


def delta_row(f: Series, m: int) -> Series:
    """Row ``m`` of the comultiplication as a series (``∂^m f``)."""
    return f.partial(m)


def theta(d: Operator, u, n: int):
    """``d^n(u)``."""
    return d.iterate(u, n)


class ThetaSeries(Series):
    """The series ``(u, d(u), d^2(u), ...)`` in the Hurwitz ring over ``d``'s carrier."""

    __slots__ = ("d", "u")

    def __init__(self, ring: HurwitzRing, d: Operator, u):
        if d.algebra != ring.carrier:
            raise CarrierMismatch("operator and series ring use different carriers")
        super().__init__(ring)
        self.d, self.u = d, u

    def _compute(self, n):
        return self.u if n == 0 else self.d(self[n - 1])


def required_input_order(omega: Constraint, n: int) -> int:
    """Largest argument index that component ``n`` of the cover can read."""
    r, s = omega.r, omega.s
    bound = 0
    for k in range(1, n + 1):
        if s is None:
            bound = (k - 1 + r) if r is not None else 0
        elif r is None:
            bound = bound + s
        else:
            bound = max(k - 1 + r, bound + s)
    return bound


class CoverOperator:
    """The cover of an operator ``Q`` on the carrier, for the constraint ``omega``.

    Component ``0`` of the cover of ``f`` is ``Q(f_0)``; higher components
    follow ``cover_n(f) = sum_i a_i f_{n-1+i} + sum_j b_j cover_{n-1}(∂^j f)``.
    """

    def __init__(self, base: Operator, omega: Constraint, ring: Optional[HurwitzRing] = None):
        self.base = base
        self.omega = omega
        self.ring = ring if ring is not None else HurwitzRing(base.algebra)
        if self.ring.carrier != base.algebra:
            raise CarrierMismatch("base operator and Hurwitz ring use different carriers")
        self._nodes: Dict[int, tuple] = {}

    @property
    def weight(self) -> Scalar:
        return self.ring.weight

    def __call__(self, f: Series) -> "CoverSeries":
        if not self.ring.contains(f):
            raise CarrierMismatch(f"series is not over {self.ring!r}")
        hit = self._nodes.get(id(f))
        if hit is not None and hit[0] is f:
            return hit[1]
        node = CoverSeries(self, f)
        self._nodes[id(f)] = (f, node)
        return node

    def component(self, f: Series, n: int):
        return self(f)[n]

    def as_operator(self) -> Operator:
        return Operator(self.ring, self, f"cover({self.base.name})")


class CoverSeries(Series):
    __slots__ = ("f", "_Q", "_phi", "_psi", "_table", "_zero", "_is_zero")

    def __init__(self, cover: CoverOperator, f: Series):
        super().__init__(cover.ring)
        self.f = f
        self._Q = cover.base
        self._phi = list(cover.omega.phi.terms())
        self._psi = list(cover.omega.psi.terms())
        self._table: Dict[tuple, object] = {}
        self._zero = cover.ring.carrier.zero()
        self._is_zero = cover.ring.carrier.is_zero

    def _shifted(self, k: int, n: int):
        """Component ``n`` of the cover applied to ``∂^k f``."""
        key = (k, n)
        table = self._table
        if key in table:
            return table[key]
        f = self.f
        if n == 0:
            value = self._Q(f[k])
        else:
            # zero terms are common (spike inputs), so skip them before scaling
            is_zero = self._is_zero
            value = self._zero
            base = k + n - 1
            for i, a in self._phi:
                x = f[base + i]
                if not is_zero(x):
                    value = value + a * x
            for j, b in self._psi:
                x = self._shifted(k + j, n - 1)
                if not is_zero(x):
                    value = value + b * x
        table[key] = value
        return value

    def _compute(self, n):
        return self._shifted(0, n)


def cover_component(C: CoverOperator, f: Series, n: int):
    return C(f)[n]


class RBDefectSeries(Series):
    """Componentwise Rota-Baxter defect of a cover on a fixed pair ``(f, g)``:

        (Qf Qg)_n - (Q_n(Qf g) + Q_n(f Qg) + lam Q_n(fg))
    """

    __slots__ = ("lhs", "rhs_terms", "lam")

    def __init__(self, C: CoverOperator, f: Series, g: Series):
        super().__init__(C.ring)
        Qf, Qg = C(f), C(g)
        self.lam = C.weight
        self.lhs = ProductSeries(Qf, Qg)
        terms = [C(ProductSeries(Qf, g)), C(ProductSeries(f, Qg))]
        if self.lam != 0:
            terms.append(ScaledSeries(self.lam, C(ProductSeries(f, g))))
        self.rhs_terms = terms

    def _compute(self, n):
        value = self.lhs[n]
        for t in self.rhs_terms:
            value = value - t[n]
        return value


def rb_defect(C: CoverOperator, f: Series, g: Series, n: int):
    return RBDefectSeries(C, f, g)[n]


def check_cover_relation(C: CoverOperator, f: Series, N: int) -> CheckResult:
    """Re-derive ``cover(f)_{n+1} = sum a_i f_{n+i} + sum b_j cover(∂^j f)_n`` for ``n < N``."""
    carrier = C.ring.carrier
    Qf = C(f)
    for n in range(N):
        expected = carrier.zero()
        for i, a in C.omega.phi.terms():
            expected = expected + a * f[n + i]
        for j, b in C.omega.psi.terms():
            expected = expected + b * C(f.partial(j))[n]
        got = Qf[n + 1]
        if not carrier.equal(got, expected):
            return CheckResult(False, n + 1, (n + 1,), got - expected, f"relation fails at component {n + 1}")
    return CheckResult(True, N)


def check_cover_base(C: CoverOperator, f: Series) -> CheckResult:
    carrier = C.ring.carrier
    got, want = C(f)[0], C.base(f[0])
    if not carrier.equal(got, want):
        return CheckResult(False, 1, (0,), got - want, "component 0 differs from Q(f_0)")
    return CheckResult(True, 1)


_ENTRY = re.compile(r"\s*([0-9]+)\s*:\s*")


def parse_series(ring: HurwitzRing, text: str) -> LiteralSeries:
    """Parse ``"{0: z0, 3: 2·z1 - z2}"``; elements are parsed by the carrier."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"series literal must be wrapped in braces: {text!r}")
    body = text[1:-1].strip()
    support: Dict[int, object] = {}
    if body:
        for chunk in body.split(","):
            m = _ENTRY.match(chunk)
            if not m:
                raise ValueError(f"cannot parse series entry {chunk!r}")
            idx = int(m.group(1))
            value = ring.carrier.parse(chunk[m.end():])
            support[idx] = support[idx] + value if idx in support else value
    return LiteralSeries(ring, support)

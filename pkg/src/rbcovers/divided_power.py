"""The algebra on basis ``z_0, z_1, ...`` of pure tensors of ones, and its quotients.

``z_i`` is the tensor power ``1^{(i+1)}`` in the free Rota-Baxter algebra on
the rationals.  Its weight-``lam`` product is

    z_m z_n = sum_{j=0}^{m} C(m+n-j, n) C(n, j) lam^j z_{m+n-j}

and ``I_m``, spanned by ``z_i`` with ``i >= m``, is an ideal stable under the
shift ``z_i -> z_{i+1}``.  The quotients by ``I_m`` are small finite Rota-Baxter
algebras; ``modulus=None`` is the full algebra.
"""
from __future__ import annotations

import random
import re
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, Optional, Tuple

from .algebra import Algebra, CarrierMismatch, Operator
from .scalars import Scalar, parse_scalar, scalar


class DPElement:
    """Coefficient vector over ``z_0, z_1, ...``.

    In a quotient the vector has exactly ``modulus`` entries; in the full
    algebra trailing zeros are stripped.
    """

    __slots__ = ("modulus", "coeffs", "_hash")

    def __init__(self, modulus: Optional[int], coeffs: Iterable = ()):
        cs = list(coeffs)
        if modulus is None:
            while cs and cs[-1] == 0:
                cs.pop()
        else:
            if modulus < 1:
                raise ValueError("quotient modulus must be positive")
            cs = cs[:modulus] + [0] * (modulus - len(cs))
        self.modulus = modulus
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, modulus, coeffs: tuple) -> "DPElement":
        obj = object.__new__(cls)
        obj.modulus = modulus
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def basis(cls, i: int, modulus: Optional[int] = None) -> "DPElement":
        if modulus is not None and i >= modulus:
            return cls(modulus)
        return cls(modulus, [0] * i + [1])

    @classmethod
    def from_dict(cls, terms: Dict[int, Scalar], modulus: Optional[int] = None) -> "DPElement":
        size = (max(terms) + 1 if terms else 0) if modulus is None else modulus
        cs = [0] * size
        for i, c in terms.items():
            if modulus is None or i < modulus:
                cs[i] += scalar(c)
        return cls(modulus, cs)

    def __getitem__(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def support(self):
        return [i for i, c in enumerate(self.coeffs) if c != 0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: "DPElement") -> None:
        if not isinstance(other, DPElement):
            raise TypeError(f"expected DPElement, got {type(other).__name__}")
        if other.modulus != self.modulus:
            raise CarrierMismatch(f"modulus mismatch: {self.modulus} vs {other.modulus}")

    def __add__(self, other: "DPElement") -> "DPElement":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if self.modulus is not None:
            return DPElement._raw(self.modulus, tuple([x + y for x, y in zip(a, b)]))
        if len(a) < len(b):
            a, b = b, a
        return DPElement(None, [x + y for x, y in zip(a, b)] + list(a[len(b):]))

    def __neg__(self) -> "DPElement":
        return DPElement._raw(self.modulus, tuple([-x for x in self.coeffs]))

    def __sub__(self, other: "DPElement") -> "DPElement":
        return self + (-other)

    def __rmul__(self, c) -> "DPElement":
        if isinstance(c, DPElement):
            return NotImplemented
        if type(c) is not int:
            c = scalar(c)
        if c == 0:
            return DPElement(self.modulus)
        return DPElement._raw(self.modulus, tuple([c * x for x in self.coeffs]))

    def __mul__(self, c) -> "DPElement":
        if isinstance(c, DPElement):
            raise TypeError("ring product depends on the weight; use dp_mul or Algebra.mul")
        return self.__rmul__(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DPElement):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.modulus, self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"DPElement({render_dp(self)}, modulus={self.modulus})"

    def __str__(self) -> str:
        return render_dp(self)


def render_dp(u: DPElement) -> str:
    parts = []
    for i, c in enumerate(u.coeffs):
        if c == 0:
            continue
        mag = -c if c < 0 else c
        body = f"z{i}" if mag == 1 else f"{mag}·z{i}"
        parts.append(("- " if c < 0 else "+ ") + body)
    if not parts:
        return "0"
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


_TERM = re.compile(r"\s*([+-])?\s*(?:([0-9]+(?:/[0-9]+)?)\s*[·*]?\s*)?z\s*([0-9]+)\s*")


def parse_dp(text: str, modulus: Optional[int] = None) -> DPElement:
    """Parse ``"2·z0 - 3/5·z2"`` (``*`` also accepted in place of ``·``)."""
    text = text.strip()
    if text in ("", "0"):
        return DPElement(modulus)
    terms: Dict[int, Scalar] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (not first and not m.group(1)):
            raise ValueError(f"cannot parse divided-power element {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        c = parse_scalar(m.group(2)) if m.group(2) else 1
        i = int(m.group(3))
        terms[i] = terms.get(i, 0) + sign * c
        pos = m.end()
        first = False
    return DPElement.from_dict(terms, modulus)


@lru_cache(maxsize=None)
def _basis_product(m: int, n: int, weight: Scalar) -> Tuple[Tuple[int, Scalar], ...]:
    out = []
    for j in range(min(m, n) + 1):
        c = comb(m + n - j, n) * comb(n, j)
        if j:
            c = c * weight ** j
        if c != 0:
            out.append((m + n - j, c))
    return tuple(out)


def basis_product(m: int, n: int, weight) -> Dict[int, Scalar]:
    """``z_m z_n`` in the full algebra, as ``{index: coefficient}``."""
    return dict(_basis_product(m, n, scalar(weight)))


@lru_cache(maxsize=None)
def _quotient_table(modulus: int, weight: Scalar):
    table = []
    for i in range(modulus):
        row = []
        for j in range(modulus):
            row.append(tuple((k, c) for k, c in _basis_product(i, j, weight) if k < modulus))
        table.append(row)
    return table


def dp_mul(u: DPElement, v: DPElement, weight) -> DPElement:
    """Weight-``weight`` product, computed in the full algebra and projected."""
    u._check(v)
    weight = scalar(weight)
    m = u.modulus
    a, b = u.coeffs, v.coeffs
    if m is not None:
        table = _quotient_table(m, weight)
        out = [0] * m
        for i, x in enumerate(a):
            if x == 0:
                continue
            row = table[i]
            for j in range(m):
                y = b[j]
                if y == 0:
                    continue
                xy = x * y
                for k, c in row[j]:
                    out[k] += c * xy
        return DPElement._raw(m, tuple(out))
    if not a or not b:
        return DPElement(None)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y == 0:
                continue
            xy = x * y
            for k, c in _basis_product(i, j, weight):
                out[k] += c * xy
    return DPElement(None, out)


def dp_P(u: DPElement) -> DPElement:
    """The shift ``z_i -> z_{i+1}``; in a quotient the top coefficient falls into the ideal."""
    if u.modulus is None:
        return DPElement(None, (0,) + u.coeffs) if u.coeffs else u
    return DPElement._raw(u.modulus, (0,) + u.coeffs[:-1])


def dp_d(u: DPElement) -> DPElement:
    """The shift ``z_0 -> 0``, ``z_n -> z_{n-1}``."""
    if u.modulus is None:
        return DPElement(None, u.coeffs[1:])
    return DPElement._raw(u.modulus, u.coeffs[1:] + (0,))


class DividedPowerAlgebra(Algebra):
    """The carrier ``Sha(k)`` (``modulus=None``) or its quotient by ``I_modulus``."""

    def __init__(self, modulus: Optional[int] = None, weight=0, max_random_index: int = 5):
        if modulus is not None and modulus < 1:
            raise ValueError("quotient modulus must be positive")
        self.modulus = modulus
        self.weight = scalar(weight)
        self.max_random_index = max_random_index if modulus is None else modulus - 1
        self.P = Operator(self, dp_P, "P")
        self.d = Operator(self, dp_d, "d")

    def __repr__(self) -> str:
        m = "inf" if self.modulus is None else self.modulus
        return f"DividedPowerAlgebra(dp:{m}, weight={self.weight})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DividedPowerAlgebra)
            and self.modulus == other.modulus
            and self.weight == other.weight
        )

    def __hash__(self) -> int:
        return hash(("dp", self.modulus, self.weight))

    @property
    def dimension(self) -> Optional[int]:
        return self.modulus

    def z(self, i: int) -> DPElement:
        return DPElement.basis(i, self.modulus)

    def element(self, terms: Dict[int, Scalar]) -> DPElement:
        return DPElement.from_dict(terms, self.modulus)

    def zero(self) -> DPElement:
        return DPElement(self.modulus)

    def one(self) -> DPElement:
        return self.z(0)

    def mul(self, u: DPElement, v: DPElement) -> DPElement:
        return dp_mul(u, v, self.weight)

    def contains(self, u) -> bool:
        return isinstance(u, DPElement) and u.modulus == self.modulus

    def is_zero(self, u: DPElement) -> bool:
        return u.is_zero()

    def random_element(self, rng: random.Random) -> DPElement:
        top = self.max_random_index
        return self.element({i: rng.randint(-5, 5) for i in range(top + 1)})

    def render(self, u: DPElement) -> str:
        return render_dp(u)

    def parse(self, text: str) -> DPElement:
        return parse_dp(text, self.modulus)

    def basis(self, index: int) -> DPElement:
        return self.z(index)

    def coordinates(self, u: DPElement) -> Dict[int, Scalar]:
        return {i: c for i, c in enumerate(u.coeffs) if c != 0}

    def random_basis_index(self, rng: random.Random) -> int:
        return rng.randint(0, self.max_random_index)

    def render_basis(self, index: int) -> str:
        return f"z{index}"

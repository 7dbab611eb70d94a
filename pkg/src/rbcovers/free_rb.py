"""The free commutative Rota-Baxter algebra ``Sha(A)`` on a carrier with a basis.

``Sha(A)`` is the direct sum of the tensor powers ``A^{(n+1)}``.  Elements are
finite linear combinations of pure tensors of *basis* elements of ``A``,
stored as ``{word: coefficient}`` with ``word`` a tuple of basis indices, so
multilinearity is built into the representation.

The product is the weight-``lam`` mixable shuffle

    (a0 ⊗ a') (b0 ⊗ b') = (a0 b0) ⊗ (a' ⧢ b')

where ``⧢`` is the quasi-shuffle of the tails,

    (x ⊗ x') ⧢ (y ⊗ y') = x ⊗ (x' ⧢ y ⊗ y') + y ⊗ (x ⊗ x' ⧢ y') + lam (xy) ⊗ (x' ⧢ y').
"""
from __future__ import annotations

import random
from typing import Callable, Dict, Optional, Tuple

from .algebra import Algebra, CarrierMismatch, Operator
from .scalars import Constraint, Scalar, scalar

Word = Tuple


def _add_into(acc: dict, word, c) -> None:
    v = acc.get(word, 0) + c
    if v == 0:
        acc.pop(word, None)
    else:
        acc[word] = v


class FreeRBElement:
    """Finite linear combination of pure tensor words over a common carrier."""

    __slots__ = ("algebra", "terms", "_hash")

    def __init__(self, algebra: "FreeRBAlgebra", terms: Dict[Word, Scalar]):
        self.algebra = algebra
        self.terms = {w: c for w, c in terms.items() if c != 0}
        self._hash = None

    @property
    def degree(self) -> int:
        """Length of the longest word; 0 for the zero element."""
        return max((len(w) for w in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other) -> None:
        if not isinstance(other, FreeRBElement):
            raise TypeError(f"expected FreeRBElement, got {type(other).__name__}")
        if other.algebra != self.algebra:
            raise CarrierMismatch(f"{self.algebra!r} vs {other.algebra!r}")

    def __add__(self, other: "FreeRBElement") -> "FreeRBElement":
        self._check(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            _add_into(acc, w, c)
        return FreeRBElement(self.algebra, acc)

    def __neg__(self) -> "FreeRBElement":
        return FreeRBElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "FreeRBElement") -> "FreeRBElement":
        return self + (-other)

    def __rmul__(self, c) -> "FreeRBElement":
        if isinstance(c, FreeRBElement):
            return NotImplemented
        c = scalar(c)
        return FreeRBElement(self.algebra, {w: c * x for w, x in self.terms.items()})

    def __mul__(self, c) -> "FreeRBElement":
        if isinstance(c, FreeRBElement):
            raise TypeError("use mix_shuffle_mul or FreeRBAlgebra.mul for the ring product")
        return self.__rmul__(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeRBElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self) -> str:
        return self.algebra.render(self)

    def __repr__(self) -> str:
        return f"FreeRBElement({self})"


class FreeRBAlgebra(Algebra):
    """``Sha(base)`` with the weight-``lam`` mixable shuffle product and ``P(w) = 1 ⊗ w``.

    ``max_word_length`` bounds the words drawn by :meth:`random_element`.
    """

    def __init__(self, base: Algebra, weight=None, max_word_length: int = 3, max_terms: int = 4):
        self.base = base
        self.weight = base.weight if weight is None else scalar(weight)
        self.max_word_length = max_word_length
        self.max_terms = max_terms
        self._base_products: Dict[tuple, tuple] = {}
        self._shuffles: Dict[tuple, dict] = {}
        self._products: Dict[tuple, dict] = {}
        self._one_coords = tuple(base.coordinates(base.one()).items())
        self.P = Operator(self, free_P, "P_A")

    def __repr__(self) -> str:
        return f"FreeRBAlgebra({self.base!r}, weight={self.weight})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeRBAlgebra) and self.base == other.base and self.weight == other.weight

    def __hash__(self) -> int:
        return hash(("free", self.base, self.weight))

    def element(self, terms: Dict[Word, Scalar]) -> FreeRBElement:
        return FreeRBElement(self, {tuple(w): scalar(c) for w, c in terms.items()})

    def word(self, *indices) -> FreeRBElement:
        return FreeRBElement(self, {tuple(indices): 1})

    def zero(self) -> FreeRBElement:
        return FreeRBElement(self, {})

    def one(self) -> FreeRBElement:
        return unit_embed(self, self.base.one())

    def mul(self, u: FreeRBElement, v: FreeRBElement) -> FreeRBElement:
        return mix_shuffle_mul(u, v, self.weight)

    def contains(self, u) -> bool:
        return isinstance(u, FreeRBElement) and u.algebra == self

    def is_zero(self, u: FreeRBElement) -> bool:
        return u.is_zero()

    def basis(self, index: Word) -> FreeRBElement:
        return FreeRBElement(self, {tuple(index): 1})

    def coordinates(self, u: FreeRBElement) -> dict:
        return dict(u.terms)

    def random_basis_index(self, rng: random.Random, max_length: Optional[int] = None) -> Word:
        length = rng.randint(1, max_length or self.max_word_length)
        return tuple(self.base.random_basis_index(rng) for _ in range(length))

    def random_element(self, rng: random.Random, max_length: Optional[int] = None) -> FreeRBElement:
        acc: dict = {}
        for _ in range(rng.randint(1, self.max_terms)):
            c = rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5])
            _add_into(acc, self.random_basis_index(rng, max_length), c)
        return FreeRBElement(self, acc)

    def render_basis(self, index: Word) -> str:
        return "(" + " ⊗ ".join(self.base.render_basis(i) for i in index) + ")"

    def render(self, u: FreeRBElement) -> str:
        if not u.terms:
            return "0"
        parts = []
        for w in sorted(u.terms, key=lambda w: (len(w), repr(w))):
            c = u.terms[w]
            mag = -c if c < 0 else c
            body = self.render_basis(w) if mag == 1 else f"{mag}·{self.render_basis(w)}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    # -- product internals ------------------------------------------------

    def _base_product(self, i, j) -> tuple:
        key = (i, j)
        hit = self._base_products.get(key)
        if hit is None:
            b = self.base
            hit = tuple(b.coordinates(b.mul(b.basis(i), b.basis(j))).items())
            self._base_products[key] = hit
            self._base_products[(j, i)] = hit
        return hit

    def _shuffle(self, x: Word, y: Word) -> dict:
        """Weight-``lam`` quasi-shuffle of two (possibly empty) words."""
        if not x:
            return {y: 1}
        if not y:
            return {x: 1}
        key = (x, y)
        hit = self._shuffles.get(key)
        if hit is not None:
            return hit
        out: dict = {}
        x0, xr = x[:1], x[1:]
        y0, yr = y[:1], y[1:]
        for w, c in self._shuffle(xr, y).items():
            _add_into(out, x0 + w, c)
        for w, c in self._shuffle(x, yr).items():
            _add_into(out, y0 + w, c)
        lam = self.weight
        if lam != 0:
            tail = self._shuffle(xr, yr)
            for k, ck in self._base_product(x[0], y[0]):
                for w, c in tail.items():
                    _add_into(out, (k,) + w, lam * ck * c)
        self._shuffles[key] = out
        return out

    def word_product(self, x: Word, y: Word) -> dict:
        key = (x, y) if x <= y else (y, x)
        hit = self._products.get(key)
        if hit is not None:
            return hit
        out: dict = {}
        tail = self._shuffle(x[1:], y[1:])
        for k, ck in self._base_product(x[0], y[0]):
            for w, c in tail.items():
                _add_into(out, (k,) + w, ck * c)
        self._products[key] = out
        return out


def mix_shuffle_mul(u: FreeRBElement, v: FreeRBElement, weight=None) -> FreeRBElement:
    """Mixable shuffle product of two elements of the same ``Sha(A)``."""
    u._check(v)
    A = u.algebra
    if weight is not None and scalar(weight) != A.weight:
        raise ValueError(f"weight {weight} does not match the algebra weight {A.weight}")
    acc: dict = {}
    for x, cx in u.terms.items():
        for y, cy in v.terms.items():
            cxy = cx * cy
            for w, c in A.word_product(x, y).items():
                _add_into(acc, w, cxy * c)
    return FreeRBElement(A, acc)


def free_P(u: FreeRBElement) -> FreeRBElement:
    """Prepend the identity of the carrier to every word."""
    A = u.algebra
    acc: dict = {}
    for w, c in u.terms.items():
        for k, ck in A._one_coords:
            _add_into(acc, (k,) + w, ck * c)
    return FreeRBElement(A, acc)


def unit_embed(algebra: FreeRBAlgebra, a) -> FreeRBElement:
    """The degree-one word ``(a)``."""
    if not algebra.base.contains(a):
        raise CarrierMismatch(f"{a!r} is not an element of {algebra.base!r}")
    return FreeRBElement(algebra, {(i,): c for i, c in algebra.base.coordinates(a).items()})


def free_map(target: FreeRBAlgebra, fn: Callable, u: FreeRBElement) -> FreeRBElement:
    """Apply ``fn`` (source carrier -> target carrier) to every tensor slot, multilinearly."""
    source = u.algebra.base
    images: dict = {}
    acc: dict = {}
    for w, c in u.terms.items():
        partial = {(): c}
        for i in w:
            if i not in images:
                images[i] = tuple(target.base.coordinates(fn(source.basis(i))).items())
            nxt: dict = {}
            for prefix, pc in partial.items():
                for k, ck in images[i]:
                    _add_into(nxt, prefix + (k,), pc * ck)
            partial = nxt
        for word, wc in partial.items():
            _add_into(acc, word, wc)
    return FreeRBElement(target, acc)


def mu_word(blocks) -> FreeRBElement:
    """``u0 P(u1 P(... P(uk)...))`` for a nonempty sequence of elements of one ``Sha(A)``."""
    blocks = list(blocks)
    if not blocks:
        raise ValueError("mu needs at least one block")
    A = blocks[0].algebra
    acc = blocks[-1]
    for u in reversed(blocks[:-1]):
        acc = A.mul(u, free_P(acc))
    return acc


def monad_mu(w: FreeRBElement) -> FreeRBElement:
    """Flatten ``Sha(Sha(A)) -> Sha(A)`` by nested evaluation with ``P_A``."""
    inner = w.algebra.base
    if not isinstance(inner, FreeRBAlgebra):
        raise CarrierMismatch("monad_mu expects an element of Sha(Sha(A))")
    out = inner.zero()
    for word, c in w.terms.items():
        out = out + c * mu_word([inner.basis(i) for i in word])
    return out


def vartheta(P: Operator, u: FreeRBElement):
    """Evaluate ``v0 ⊗ v1 ⊗ ... ⊗ vm`` to ``v0 P(v1 P(... P(vm)...))`` in the carrier."""
    R = u.algebra.base
    if P.algebra != R:
        raise CarrierMismatch("operator does not act on the carrier of the tensor words")
    out = R.zero()
    for word, c in u.terms.items():
        acc = R.basis(word[-1])
        for i in reversed(word[:-1]):
            acc = R.mul(R.basis(i), P(acc))
        out = out + c * acc
    return out


class Extension:
    """The extension of ``q`` (with ``q(1) = 0``) to ``Sha(R)`` determined by ``omega``.

    On a word ``u0 ⊗ u'`` with nonempty tail:

        ext(u0 ⊗ u') = q(u0) ⊗ u' + (u0 + lam q(u0)) (phi(ext) + P psi(ext))(u')

    and ``ext((a)) = (q(a))`` on degree-one words.
    """

    def __init__(self, q: Operator, omega: Constraint, algebra: FreeRBAlgebra):
        if q.algebra != algebra.base:
            raise CarrierMismatch("q does not act on the carrier of the free algebra")
        R = algebra.base
        q_one = q(R.one())
        if not R.is_zero(q_one):
            raise ValueError(f"extension needs q(1) = 0, got q(1) = {R.render(q_one)}")
        self.q = q
        self.omega = omega
        self.algebra = algebra
        self._words: Dict[Word, FreeRBElement] = {}

    def __call__(self, u: FreeRBElement) -> FreeRBElement:
        if not self.algebra.contains(u):
            raise CarrierMismatch(f"{u!r} is not an element of {self.algebra!r}")
        out = self.algebra.zero()
        for w, c in u.terms.items():
            out = out + c * self._word(w)
        return out

    def _word(self, w: Word) -> FreeRBElement:
        hit = self._words.get(w)
        if hit is not None:
            return hit
        A = self.algebra
        R = A.base
        u0 = R.basis(w[0])
        qu0 = self.q(u0)
        if len(w) == 1:
            value = unit_embed(A, qu0)
        else:
            tail = w[1:]
            acc: dict = {}
            for k, c in R.coordinates(qu0).items():
                _add_into(acc, (k,) + tail, c)
            value = FreeRBElement(A, acc)
            t = A.basis(tail)
            inner = self.omega.phi(self, t)
            psi_part = self.omega.psi(self, t)
            if psi_part is not None:
                shifted = free_P(psi_part)
                inner = shifted if inner is None else inner + shifted
            if inner is not None:
                head = u0 if A.weight == 0 else u0 + A.weight * qu0
                value = value + A.mul(unit_embed(A, head), inner)
        self._words[w] = value
        return value

    def as_operator(self) -> Operator:
        return Operator(self.algebra, self, f"ext({self.q.name})")


def extension_apply(q: Operator, omega: Constraint, u: FreeRBElement, weight=None) -> FreeRBElement:
    A = u.algebra
    if weight is not None and scalar(weight) != A.weight:
        raise ValueError(f"weight {weight} does not match the algebra weight {A.weight}")
    return Extension(q, omega, A)(u)

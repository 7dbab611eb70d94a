"""Exact scalars, polynomials in one variable, and constraints ``xy - (phi(x) + y psi(x))``.

Scalars are plain Python ``int`` or :class:`fractions.Fraction` values.  Both
are exact and always in lowest terms; integers are kept as ``int`` so that
integral computations never pay for rational normalisation.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Scalar = Union[int, Fraction]


def scalar(value) -> Scalar:
    """Coerce ``value`` to an exact scalar, demoting integral fractions to ``int``."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        value = parse_scalar(value)
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or a 'p/q' string")
    q = Fraction(value)
    return q.numerator if q.denominator == 1 else q


def parse_scalar(text: str) -> Scalar:
    text = text.strip()
    if not text:
        raise ValueError("empty scalar")
    try:
        if "/" in text:
            num, den = text.split("/")
            q = Fraction(int(num), int(den))
        else:
            q = Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse rational {text!r}") from exc
    return q.numerator if q.denominator == 1 else q


def format_scalar(c: Scalar) -> str:
    return str(c)


@dataclass(frozen=True)
class ScalarPoly:
    """Polynomial ``c[0] + c[1] x + ... + c[deg] x**deg`` with exact coefficients.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple = ()

    def __init__(self, coeffs: Iterable = ()):
        cs = [scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> Optional[int]:
        return poly_degree(self)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def terms(self):
        """Yield ``(power, coefficient)`` for the nonzero coefficients."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                yield i, c

    def __call__(self, op, u):
        """Evaluate the polynomial at a linear operator: ``sum c_i op^i(u)``.

        ``u`` must support ``+`` and scalar ``*``.  Returns ``None`` for the
        zero polynomial so callers can add it into a running sum lazily.
        """
        total = None
        power = u
        for i in range(len(self.coeffs)):
            if i:
                power = op(power)
            c = self.coeffs[i]
            if c != 0:
                term = c * power
                total = term if total is None else total + term
        return total

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in self.terms():
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            else:
                if isinstance(c, Fraction) and mono:
                    coeff = f"-({-c})" if c < 0 else f"({c})"
                else:
                    coeff = str(c)
                parts.append(coeff + mono)
        return " + ".join(parts).replace("+ -", "- ")


def poly_degree(p: ScalarPoly) -> Optional[int]:
    """Index of the leading nonzero coefficient, or ``None`` for the zero polynomial."""
    return len(p.coeffs) - 1 if p.coeffs else None


def parse_poly(text: str) -> ScalarPoly:
    """Parse comma-separated coefficients, lowest degree first (``"0,1"`` is ``x``)."""
    text = text.strip()
    if not text:
        return ScalarPoly()
    return ScalarPoly(parse_scalar(part) for part in text.split(","))


@dataclass(frozen=True)
class Constraint:
    """The operator relation ``omega = xy - (phi(x) + y psi(x))``."""

    phi: ScalarPoly
    psi: ScalarPoly

    @classmethod
    def from_coeffs(cls, phi: Sequence = (), psi: Sequence = ()) -> "Constraint":
        return cls(ScalarPoly(phi), ScalarPoly(psi))

    @classmethod
    def parse(cls, phi_text: str, psi_text: str) -> "Constraint":
        return cls(parse_poly(phi_text), parse_poly(psi_text))

    @property
    def r(self) -> Optional[int]:
        return self.phi.degree

    @property
    def s(self) -> Optional[int]:
        return self.psi.degree

    def __str__(self) -> str:
        terms = [_monomial(c, "", i) for i, c in self.phi.terms()]
        terms += [_monomial(c, "y", j) for j, c in self.psi.terms()]
        if not terms:
            return "xy"
        inner = " + ".join(terms).replace("+ -", "- ")
        if len(terms) == 1:
            return f"xy + {inner[1:]}" if inner.startswith("-") else f"xy - {inner}"
        return f"xy - ({inner})"


def _monomial(c: Scalar, prefix: str, power: int) -> str:
    body = prefix + ("" if power == 0 else ("x" if power == 1 else f"x^{power}"))
    if not body:
        return str(c)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    if isinstance(c, Fraction):
        return (f"-({-c})" if c < 0 else f"({c})") + body
    return str(c) + body


class NormalForm(enum.Enum):
    XY_MINUS_CONST = "xy-a0"
    XY_MINUS_B0Y_YX = "xy-(b0y+yx)"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Verdict:
    in_omega0: bool
    in_omegak: bool
    normal_form: NormalForm
    parameter: Optional[Scalar] = None

    def describe(self) -> str:
        if self.normal_form is NormalForm.XY_MINUS_CONST:
            return f"xy - a0 with a0 = {self.parameter}"
        if self.normal_form is NormalForm.XY_MINUS_B0Y_YX:
            return f"xy - (b0 y + yx) with b0 = {self.parameter}"
        return "not of the form xy - a0 or xy - (b0 y + yx)"


def classify(omega: Constraint) -> Verdict:
    """Decide membership of ``omega`` in the weight-zero and all-weight families."""
    phi, psi = omega.phi, omega.psi
    if psi.is_zero() and (phi.degree or 0) == 0:
        a0 = phi[0]
        return Verdict(True, a0 in (0, 1), NormalForm.XY_MINUS_CONST, a0)
    if phi.is_zero() and psi.degree == 1 and psi[1] == 1:
        b0 = psi[0]
        return Verdict(True, b0 == 0, NormalForm.XY_MINUS_B0Y_YX, b0)
    return Verdict(False, False, NormalForm.OUTSIDE)


# Named members of the all-weight family.
XY = Constraint.from_coeffs((), ())
XY_MINUS_ONE = Constraint.from_coeffs((1,), ())
XY_MINUS_YX = Constraint.from_coeffs((), (0, 1))
OMEGA_K = (XY, XY_MINUS_ONE, XY_MINUS_YX)

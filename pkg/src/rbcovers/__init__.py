"""Exact Rota-Baxter and differential algebra: divided powers, Hurwitz series,
free Rota-Baxter algebras, covers and extensions of operators, and a verifier
for which constraints let covers stay Rota-Baxter.
"""
from .algebra import (
    Algebra,
    CarrierMismatch,
    CheckResult,
    Operator,
    check_diff_axiom,
    check_linearity,
    check_omega_relation,
    check_rb_axiom,
    identity_operator,
    zero_operator,
)
from .divided_power import DividedPowerAlgebra, DPElement, dp_d, dp_mul, dp_P
from .free_rb import (
    Extension,
    FreeRBAlgebra,
    FreeRBElement,
    extension_apply,
    free_P,
    mix_shuffle_mul,
    monad_mu,
    unit_embed,
    vartheta,
)
from .hurwitz import (
    CoverOperator,
    HurwitzRing,
    Series,
    check_cover_relation,
    cover_component,
    delta,
    epsilon,
    hmul,
    partial,
    rb_defect,
    required_input_order,
    theta,
)
from .scalars import Constraint, NormalForm, ScalarPoly, Verdict, classify, parse_poly, poly_degree

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "CarrierMismatch",
    "CheckResult",
    "Operator",
    "check_diff_axiom",
    "check_linearity",
    "check_omega_relation",
    "check_rb_axiom",
    "identity_operator",
    "zero_operator",
    "DividedPowerAlgebra",
    "DPElement",
    "dp_d",
    "dp_mul",
    "dp_P",
    "Extension",
    "FreeRBAlgebra",
    "FreeRBElement",
    "extension_apply",
    "free_P",
    "mix_shuffle_mul",
    "monad_mu",
    "unit_embed",
    "vartheta",
    "CoverOperator",
    "HurwitzRing",
    "Series",
    "check_cover_relation",
    "cover_component",
    "delta",
    "epsilon",
    "hmul",
    "partial",
    "rb_defect",
    "required_input_order",
    "theta",
    "Constraint",
    "NormalForm",
    "ScalarPoly",
    "Verdict",
    "classify",
    "parse_poly",
    "poly_degree",
]

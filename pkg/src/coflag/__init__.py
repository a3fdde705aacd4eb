"""Exact cohomology rings of flag manifolds and generalised symmetric spaces."""

from .groebner import GroebnerBasis, buchberger, is_groebner_basis, is_in_ideal, normal_form
from .poly import MonomialOrder, Polynomial, divide, format_poly, parse_poly, spoly
from .quotient import PoincarePolynomial, QuotientRing
from .spaces import (
    CartanModel,
    RestrictionData,
    SpacePresentation,
    cartan_model_poincare,
    cartan_type_check,
    expected_basis,
    fibration_factorization_check,
    flag_presentation,
    g2_flag_presentation,
    gss_model,
    gss_presentation,
    poincare_from_invariant_degrees,
    relation_family,
)
from .verify import VerificationReport, verify_presentation

__all__ = [
    "CartanModel",
    "GroebnerBasis",
    "MonomialOrder",
    "PoincarePolynomial",
    "Polynomial",
    "QuotientRing",
    "RestrictionData",
    "SpacePresentation",
    "VerificationReport",
    "buchberger",
    "cartan_model_poincare",
    "cartan_type_check",
    "divide",
    "expected_basis",
    "fibration_factorization_check",
    "flag_presentation",
    "format_poly",
    "g2_flag_presentation",
    "gss_model",
    "gss_presentation",
    "is_groebner_basis",
    "is_in_ideal",
    "normal_form",
    "parse_poly",
    "poincare_from_invariant_degrees",
    "relation_family",
    "spoly",
    "verify_presentation",
]

__version__ = "0.1.0"

"""Exact Morava-Euler characteristics of pi-finite p-spaces and their
l-adic extrapolation to n = -1."""

from .arith import binomial, inverse_binomial_transform, l_valuation, qbinomial
from .expoly import ExpoPoly, IntValuedPoly
from .groups import FiniteGroup, chi_bg, hkr_chi, parse_group, p_typical_cardinality
from .kernels import BACKEND
from .mahler import certify_continuity, lambda_shift_check, mahler_extrapolate
from .spaces import chi, chi_sequence, closed_form, homotopy_cardinality, parse_space

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ExpoPoly",
    "FiniteGroup",
    "IntValuedPoly",
    "binomial",
    "certify_continuity",
    "chi",
    "chi_bg",
    "chi_sequence",
    "closed_form",
    "hkr_chi",
    "homotopy_cardinality",
    "inverse_binomial_transform",
    "l_valuation",
    "lambda_shift_check",
    "mahler_extrapolate",
    "p_typical_cardinality",
    "parse_group",
    "parse_space",
    "qbinomial",
]

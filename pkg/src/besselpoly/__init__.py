"""Exact Bessel and reverse Bessel polynomials, the derivative coefficient
family a_j(N, x) of exp(x(1 - sqrt(1 - 2t))), and identity verification."""

from .exactmath import (
    ExactMathError,
    Rational,
    binomial,
    double_factorial,
    falling_factorial,
)
from .poly import Poly
from .series import Series, binom_series, generating_function
from .bessel import BesselFamily, p_poly, p_via_1f1, p_via_reversal, y_poly
from .coeffs import CoeffTable, coeff_closed_form, coeffs_recurrence
from .identities import VerifyReport, verify_all, verify_theorem1, verify_theorem2

__all__ = [
    "ExactMathError",
    "Rational",
    "binomial",
    "double_factorial",
    "falling_factorial",
    "Poly",
    "Series",
    "binom_series",
    "generating_function",
    "BesselFamily",
    "y_poly",
    "p_poly",
    "p_via_reversal",
    "p_via_1f1",
    "CoeffTable",
    "coeffs_recurrence",
    "coeff_closed_form",
    "VerifyReport",
    "verify_all",
    "verify_theorem1",
    "verify_theorem2",
]

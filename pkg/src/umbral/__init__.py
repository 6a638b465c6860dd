"""Exact umbral-calculus toolkit for higher-order Bernoulli, Euler and
Frobenius-Euler polynomials.

All scalars are :class:`fractions.Fraction`; nothing in the package touches
floating point.
"""

from umbral.errors import (
    BadConstantTerm,
    EvenModulus,
    IndexOutOfRange,
    LambdaForbidden,
    NonDivisible,
    NonRationalScale,
    OrderViolation,
    TruncationTooShort,
    UmbralError,
    ZeroConstantTerm,
)
from umbral.numeric import binomial, compositions, falling_factorial, multinomial
from umbral.series import Polynomial, TruncatedSeries, pairing, transfer_polynomial, umbral_apply

__version__ = "0.1.0"

__all__ = [
    "BadConstantTerm",
    "EvenModulus",
    "IndexOutOfRange",
    "LambdaForbidden",
    "NonDivisible",
    "NonRationalScale",
    "OrderViolation",
    "Polynomial",
    "TruncatedSeries",
    "TruncationTooShort",
    "UmbralError",
    "ZeroConstantTerm",
    "binomial",
    "compositions",
    "falling_factorial",
    "multinomial",
    "pairing",
    "transfer_polynomial",
    "umbral_apply",
]

"""Stirling numbers of the second kind and order-alpha Bernoulli, Euler and
Frobenius-Euler polynomials, built from their generating functions.

Each family is Appell: ``P_n(x) = sum_l C(n, l) P_l x^(n-l)`` where the
numbers ``P_l`` are EGF coefficients of the family's t-only factor

    Bernoulli        (t / (e^t - 1))^alpha
    Euler            (2 / (e^t + 1))^alpha
    Frobenius-Euler  ((1 - lam) / (e^t - lam))^alpha
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from umbral.errors import IndexOutOfRange, LambdaForbidden, NonRationalScale
from umbral.numeric import RationalLike, binomial, factorial, to_rational
from umbral.series import (
    Polynomial,
    TruncatedSeries,
    series_from_exponential,
    series_power,
    series_recip,
    series_shift_div_t,
)


class Kind(str, enum.Enum):
    BERNOULLI = "bernoulli"
    EULER = "euler"
    FROBENIUS_EULER = "frobenius-euler"


@dataclass(frozen=True)
class SequenceFamily:
    """One Appell family, optionally rescaled as in ``m^n P_n(x/m)``.

    ``hat`` selects the second Bernoulli normalization ``m^n m^-alpha B_n(x/m)``.
    """

    kind: Kind
    order: Fraction = Fraction(1)
    lam: Optional[Fraction] = None
    scale: int = 1
    hat: bool = False

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "order", to_rational(self.order))
        if self.kind is Kind.FROBENIUS_EULER:
            if self.lam is None:
                raise LambdaForbidden("Frobenius-Euler family needs lambda")
            lam = to_rational(self.lam)
            if lam == 1:
                raise LambdaForbidden("lambda = 1 makes (1 - lambda)/(e^t - lambda) vanish")
            object.__setattr__(self, "lam", lam)
        elif self.lam is not None:
            raise ValueError(f"lambda only applies to frobenius-euler, not {self.kind.value}")
        if self.scale < 1:
            raise ValueError(f"scale must be a positive integer, got {self.scale}")
        if self.hat and self.kind is not Kind.BERNOULLI:
            raise ValueError("the hat normalization only exists for the Bernoulli family")


# -- Stirling numbers -------------------------------------------------------

_stirling_lock = threading.Lock()
_stirling_rows: list[list[int]] = [[1]]


def stirling2(n: int, k: int) -> int:
    """S2(n, k) from S2(n, k) = k S2(n-1, k) + S2(n-1, k-1)."""
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"stirling2 needs 0 <= k <= n, got n={n}, k={k}")
    if n >= len(_stirling_rows):
        with _stirling_lock:
            while len(_stirling_rows) <= n:
                prev = _stirling_rows[-1]
                size = len(prev)
                row = [0] * (size + 1)
                row[size] = 1
                for j in range(1, size):
                    row[j] = j * prev[j] + prev[j - 1]
                _stirling_rows.append(row)
    return _stirling_rows[n][k]


def stirling2_egf(n: int, k: int) -> int:
    """S2(n, k) as n! [t^n] (e^t - 1)^k / k!; the cross-check route."""
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"stirling2 needs 0 <= k <= n, got n={n}, k={k}")
    s = (series_from_exponential(1, n) - 1) ** k
    value = s.egf_coeff(n) / factorial(k)
    assert value.denominator == 1
    return value.numerator


# -- generating functions ---------------------------------------------------


def bernoulli_kernel(N: int, scale: int = 1) -> TruncatedSeries:
    """(e^(m t) - 1) / (m t) to order N."""
    e = series_from_exponential(scale, N + 1) - 1
    return series_shift_div_t(e, 1) * Fraction(1, scale)


def euler_kernel(N: int, scale: int = 1) -> TruncatedSeries:
    """(e^(m t) + 1) / 2 to order N."""
    return (series_from_exponential(scale, N) + 1) * Fraction(1, 2)


def frobenius_kernel(lam: Fraction, N: int, scale: int = 1) -> TruncatedSeries:
    """(e^(m t) - lam) / (1 - lam) to order N."""
    return (series_from_exponential(scale, N) - lam) * (1 / (1 - lam))


def number_series(kind: Kind, alpha: RationalLike, N: int, lam: Optional[Fraction] = None) -> TruncatedSeries:
    """The t-only factor of the generating function, to order N."""
    kind = Kind(kind)
    alpha = to_rational(alpha)
    if kind is Kind.BERNOULLI:
        base = bernoulli_kernel(N)
    elif kind is Kind.EULER:
        base = euler_kernel(N)
    else:
        if lam is None or to_rational(lam) == 1:
            raise LambdaForbidden("Frobenius-Euler numbers need lambda != 1")
        base = frobenius_kernel(to_rational(lam), N)
    return series_power(series_recip(base), alpha)


class _NumberCache:
    """Numbers per (kind, alpha, lambda), grown on demand."""

    def __init__(self):
        self._lock = threading.Lock()
        self._store: dict[tuple, tuple[Fraction, ...]] = {}

    def get(self, kind: Kind, alpha: Fraction, lam: Optional[Fraction], n: int) -> tuple[Fraction, ...]:
        key = (kind, alpha, lam)
        with self._lock:
            have = self._store.get(key, ())
        if len(have) > n:
            return have
        N = max(n, 2 * len(have), 8)
        s = number_series(kind, alpha, N, lam)
        nums = tuple(s.egf_coeff(k) for k in range(N + 1))
        with self._lock:
            if len(self._store.get(key, ())) < len(nums):
                self._store[key] = nums
        return nums

    def clear(self) -> None:
        with self._lock:
            self._store.clear()


_numbers = _NumberCache()


def sequence_numbers(kind: Kind, alpha: RationalLike, n: int, lam: Optional[RationalLike] = None) -> tuple[Fraction, ...]:
    """(P_0, ..., P_n) for the given family."""
    kind = Kind(kind)
    lam_q = None if lam is None else to_rational(lam)
    if kind is Kind.FROBENIUS_EULER and (lam_q is None or lam_q == 1):
        raise LambdaForbidden("Frobenius-Euler numbers need lambda != 1")
    return _numbers.get(kind, to_rational(alpha), lam_q, n)[: n + 1]


def _appell(numbers: tuple[Fraction, ...], n: int) -> Polynomial:
    return Polynomial(binomial(n, n - i) * numbers[n - i] for i in range(n + 1))


def bernoulli_polynomial(alpha: RationalLike, n: int) -> Polynomial:
    """B_n^(alpha)(x)."""
    return _appell(sequence_numbers(Kind.BERNOULLI, alpha, n), n)


def euler_polynomial(alpha: RationalLike, n: int) -> Polynomial:
    """E_n^(alpha)(x)."""
    return _appell(sequence_numbers(Kind.EULER, alpha, n), n)


def frobenius_euler_polynomial(alpha: RationalLike, n: int, lam: RationalLike) -> Polynomial:
    """H_n^(alpha)(x | lam); lam = 1 is rejected."""
    return _appell(sequence_numbers(Kind.FROBENIUS_EULER, alpha, n, lam), n)


def family_polynomial(kind: Kind, alpha: RationalLike, n: int, lam: Optional[RationalLike] = None) -> Polynomial:
    kind = Kind(kind)
    if kind is Kind.FROBENIUS_EULER:
        return frobenius_euler_polynomial(alpha, n, lam)
    if lam is not None:
        raise ValueError(f"lambda only applies to frobenius-euler, not {kind.value}")
    if kind is Kind.BERNOULLI:
        return bernoulli_polynomial(alpha, n)
    return euler_polynomial(alpha, n)


def poly_scale_arg(p: Polynomial, m: int) -> Polynomial:
    """p(x/m)."""
    if m < 1:
        raise ValueError(f"scale must be a positive integer, got {m}")
    return p.scale_arg(m)


def scale_power(m: int, alpha: Fraction) -> Fraction:
    """m^alpha, refused unless alpha is an integer or m == 1."""
    if m == 1:
        return Fraction(1)
    if alpha.denominator != 1:
        raise NonRationalScale(f"{m}^({alpha}) is not handled; use an integer order when m > 1")
    return Fraction(m) ** alpha.numerator


def scaled_family_polynomial(family: SequenceFamily, n: int) -> Polynomial:
    """m^n P_n(x/m), or m^n m^-alpha B_n(x/m) for the hat family."""
    m = family.scale
    factor = Fraction(m) ** n
    if family.hat:
        factor /= scale_power(m, family.order)
    base = family_polynomial(family.kind, family.order, n, family.lam)
    return poly_scale_arg(base, m) * factor


def sheffer_g(family: SequenceFamily, N: int) -> TruncatedSeries:
    """The invertible series g(t) that makes the scaled family Sheffer for (g, t)."""
    m, alpha = family.scale, family.order
    if family.kind is Kind.BERNOULLI:
        base = bernoulli_kernel(N, m)
        if family.hat:
            # (e^(mt) - 1)/t = m * (e^(mt) - 1)/(mt)
            return series_power(base, alpha) * scale_power(m, alpha)
        return series_power(base, alpha)
    if family.kind is Kind.EULER:
        return series_power(euler_kernel(N, m), alpha)
    return series_power(frobenius_kernel(family.lam, N, m), alpha)


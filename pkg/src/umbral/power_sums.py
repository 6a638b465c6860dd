"""Multiple power sums over weak compositions of n into m parts.

For weights ``w`` the three families share one shape::

    sum_{v_1+...+v_m = n} C(n; v) w^(v_1 + 2 v_2 + ... + m v_m) (v_1 + 2 v_2 + ... + m v_m)^k

with ``w = 1`` (plain), ``w = -1`` (alternating) and ``w = 1/lam`` (lambda
analogue). Equivalently the value is ``k! [t^k] (sum_{l=1..m} w^l e^(l t))^n``.
Both routes are implemented: ``enum`` walks the compositions, ``series``
extracts the coefficient. ``series`` is the default.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from umbral.errors import LambdaForbidden
from umbral.numeric import RationalLike, binomial, factorial, to_rational
from umbral.series import TruncatedSeries, series_pow_int


class Family(str, enum.Enum):
    PLAIN = "plain"
    ALTERNATING = "alt"
    LAMBDA = "lambda"


ALGORITHMS = ("series", "enum")


@dataclass(frozen=True)
class PowerSumValue:
    family: Family
    k: int
    n: int
    m: int
    value: Fraction
    lam: Optional[Fraction] = None


def _check(k: int, n: int, m: int) -> None:
    if n < 1 or m < 1 or k < 0:
        raise ValueError(f"power sums need n >= 1, m >= 1, k >= 0; got k={k}, n={n}, m={m}")


def _weighted_walk(n: int, m: int) -> Iterator[tuple[int, int]]:
    """Yield (multinomial, v_1 + 2 v_2 + ... + m v_m) for every composition.

    The multinomial is built incrementally as C(n, v_1) C(n - v_1, v_2) ...
    instead of from factorials at each leaf.
    """

    def walk(slot: int, remaining: int, coeff: int, weight: int) -> Iterator[tuple[int, int]]:
        if slot == m:
            yield coeff, weight + m * remaining
            return
        for v in range(remaining, -1, -1):
            yield from walk(slot + 1, remaining - v, coeff * binomial(remaining, v), weight + slot * v)

    yield from walk(1, n, 1, 0)


def _base_series(w: Fraction, kmax: int, m: int) -> TruncatedSeries:
    """sum_{l=1..m} w^l e^(l t) to order kmax."""
    return TruncatedSeries(tuple(
        sum((w**l * l**j for l in range(1, m + 1)), Fraction(0)) / factorial(j)
        for j in range(kmax + 1)
    ))


def _row(w: Fraction, kmax: int, n: int, m: int, algorithm: str) -> list[Fraction]:
    _check(kmax, n, m)
    if algorithm == "series":
        s = series_pow_int(_base_series(w, kmax, m), n)
        return [s.egf_coeff(k) for k in range(kmax + 1)]
    if algorithm == "enum":
        out = [Fraction(0)] * (kmax + 1)
        for coeff, s in _weighted_walk(n, m):
            term = coeff * w**s
            for k in range(kmax + 1):
                out[k] += term
                term *= s
        return out
    raise ValueError(f"unknown algorithm {algorithm!r}; pick one of {ALGORITHMS}")


def _compute(k: int, n: int, m: int, w: Fraction, algorithm: str) -> Fraction:
    return _row(w, k, n, m, algorithm)[k]


def multiple_power_sum_enum(k: int, n: int, m: int) -> PowerSumValue:
    return PowerSumValue(Family.PLAIN, k, n, m, _compute(k, n, m, Fraction(1), "enum"))


def multiple_power_sum_series(k: int, n: int, m: int) -> PowerSumValue:
    return PowerSumValue(Family.PLAIN, k, n, m, _compute(k, n, m, Fraction(1), "series"))


def multiple_power_sum(k: int, n: int, m: int, algorithm: str = "series") -> PowerSumValue:
    return PowerSumValue(Family.PLAIN, k, n, m, _compute(k, n, m, Fraction(1), algorithm))


def alternating_power_sum(k: int, n: int, m: int, algorithm: str = "series") -> PowerSumValue:
    return PowerSumValue(Family.ALTERNATING, k, n, m, _compute(k, n, m, Fraction(-1), algorithm))


def lambda_power_sum(k: int, n: int, m: int, lam: RationalLike, algorithm: str = "series") -> PowerSumValue:
    lam = to_rational(lam)
    if lam == 0:
        raise LambdaForbidden("lambda = 0 has no inverse powers")
    return PowerSumValue(Family.LAMBDA, k, n, m, _compute(k, n, m, 1 / lam, algorithm), lam)


def power_sum(family: Family, k: int, n: int, m: int, lam: Optional[RationalLike] = None, algorithm: str = "series") -> PowerSumValue:
    family = Family(family)
    if family is Family.PLAIN:
        return multiple_power_sum(k, n, m, algorithm)
    if family is Family.ALTERNATING:
        return alternating_power_sum(k, n, m, algorithm)
    if lam is None:
        raise LambdaForbidden("the lambda family needs a lambda value")
    return lambda_power_sum(k, n, m, lam, algorithm)


def _weight(family: Family, lam: Optional[RationalLike]) -> Fraction:
    if family is Family.PLAIN:
        return Fraction(1)
    if family is Family.ALTERNATING:
        return Fraction(-1)
    if lam is None:
        raise LambdaForbidden("the lambda family needs a lambda value")
    lam = to_rational(lam)
    if lam == 0:
        raise LambdaForbidden("lambda = 0 has no inverse powers")
    return 1 / lam


def power_sum_row(family: Family, kmax: int, n: int, m: int, lam: Optional[RationalLike] = None, algorithm: str = "series") -> list[Fraction]:
    """Values for k = 0..kmax in one pass."""
    return _row(_weight(Family(family), lam), kmax, n, m, algorithm)

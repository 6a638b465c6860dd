"""Polynomials in x and truncated power series in t over the rationals.

A series ``f(t) = sum a_k t^k`` acts on polynomials as the differential
operator ``sum a_k d^k/dx^k`` (:func:`umbral_apply`) and as the linear
functional ``<f | x^n> = n! a_n`` (:func:`pairing`). Series carry their
truncation order ``N`` explicitly; binary operations keep the smaller one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from umbral.errors import (
    BadConstantTerm,
    NonDivisible,
    OrderViolation,
    TruncationTooShort,
    ZeroConstantTerm,
)
from umbral.numeric import RationalLike, factorial, falling_factorial, format_rational, to_rational

Scalar = Union[int, Fraction]


def _trim(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies ``x**i``."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> Polynomial:
        return cls((0,) * n + (c,))

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(i) + other.coeff(i) for i in range(size))

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union[Polynomial, Scalar]) -> Polynomial:
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return Polynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return Polynomial(out)
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def mul_x(self) -> Polynomial:
        return Polynomial((0,) + self.coeffs)

    def div_x(self) -> Polynomial:
        """Exact division by x; the constant term must vanish."""
        if self.coeff(0) != 0:
            raise NonDivisible("polynomial has a nonzero constant term")
        return Polynomial(self.coeffs[1:])

    def derivative(self, k: int = 1) -> Polynomial:
        return Polynomial(
            c * falling_factorial(i, k) for i, c in enumerate(self.coeffs) if i >= k
        )

    def scale_arg(self, m: Scalar) -> Polynomial:
        """p(x/m)."""
        m = Fraction(m)
        return Polynomial(c / m**i for i, c in enumerate(self.coeffs))

    def first_difference(self, other: Polynomial) -> Optional[int]:
        """Lowest degree where the two coefficient lists differ, or None."""
        size = max(len(self.coeffs), len(other.coeffs))
        for i in range(size):
            if self.coeff(i) != other.coeff(i):
                return i
        return None

    def to_list(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    def __str__(self) -> str:
        return "[" + ", ".join(self.to_list()) + "]"

    def pretty(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = format_rational(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class TruncatedSeries:
    """``a_0 + a_1 t + ... + a_N t^N + O(t^(N+1))`` with ordinary coefficients."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least a_0")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Scalar], N: int) -> TruncatedSeries:
        padded = list(coeffs[: N + 1]) + [0] * max(0, N + 1 - len(coeffs))
        return cls(tuple(padded))

    @classmethod
    def constant(cls, c: Scalar, N: int) -> TruncatedSeries:
        return cls.from_coeffs([c], N)

    @classmethod
    def monomial(cls, k: int, N: int, c: Scalar = 1) -> TruncatedSeries:
        return cls.from_coeffs([0] * k + [c], N)

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def egf_coeff(self, k: int) -> Fraction:
        """k! a_k, the coefficient in the exponential-generating-function view."""
        if k > self.N:
            raise TruncationTooShort(f"coefficient {k} is beyond truncation order {self.N}")
        return factorial(k) * self.coeffs[k]

    def order(self) -> Optional[int]:
        """Index of the first nonzero coefficient; None if all known ones vanish."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return None

    def truncate(self, N: int) -> TruncatedSeries:
        if N > self.N:
            raise TruncationTooShort(f"cannot extend a series known to order {self.N} to {N}")
        return TruncatedSeries(self.coeffs[: N + 1])

    def __add__(self, other: Union[TruncatedSeries, Scalar]) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries((self.coeffs[0] + other,) + self.coeffs[1:])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        N = min(self.N, other.N)
        return TruncatedSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(N + 1)))

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union[TruncatedSeries, Scalar]) -> TruncatedSeries:
        return self + (-other)

    def __rsub__(self, other: Scalar) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other: Union[TruncatedSeries, Scalar]) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(tuple(c * other for c in self.coeffs))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        N = min(self.N, other.N)
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(N + 1):
            acc = Fraction(0)
            for i in range(n + 1):
                if a[i] and b[n - i]:
                    acc += a[i] * b[n - i]
            out.append(acc)
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> TruncatedSeries:
        return series_pow_int(self, n)

    def __str__(self) -> str:
        return "[" + ", ".join(format_rational(c) for c in self.coeffs) + f"] + O(t^{self.N + 1})"


def series_from_exponential(c: RationalLike, N: int) -> TruncatedSeries:
    """e^(c t) truncated at order N."""
    if N < 0:
        raise ValueError(f"truncation order must be >= 0, got {N}")
    c = to_rational(c)
    out = [Fraction(1)]
    for k in range(1, N + 1):
        out.append(out[-1] * c / k)
    return TruncatedSeries(tuple(out))


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_scale(a: TruncatedSeries, c: RationalLike) -> TruncatedSeries:
    return a * to_rational(c)


def series_recip(a: TruncatedSeries) -> TruncatedSeries:
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ZeroConstantTerm("reciprocal of a series with zero constant term")
    inv0 = 1 / a0
    b = [inv0]
    for n in range(1, a.N + 1):
        acc = Fraction(0)
        for i in range(1, n + 1):
            if a.coeffs[i]:
                acc += a.coeffs[i] * b[n - i]
        b.append(-acc * inv0)
    return TruncatedSeries(tuple(b))


def series_pow_int(a: TruncatedSeries, n: int) -> TruncatedSeries:
    if n < 0:
        return series_pow_int(series_recip(a), -n)
    result = TruncatedSeries.constant(1, a.N)
    base = a
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def series_log(a: TruncatedSeries) -> TruncatedSeries:
    """Formal logarithm; needs a_0 = 1."""
    if a.coeffs[0] != 1:
        raise BadConstantTerm(f"log needs constant term 1, got {a.coeffs[0]}")
    # (log a)' = a' / a, integrated term by term
    N = a.N
    deriv = [a.coeffs[k + 1] * (k + 1) for k in range(N)]
    if N == 0:
        return TruncatedSeries.constant(0, 0)
    q = series_recip(a.truncate(N - 1)) * TruncatedSeries(tuple(deriv))
    return TruncatedSeries((Fraction(0),) + tuple(q.coeffs[k] / (k + 1) for k in range(N)))


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """Formal exponential; needs a_0 = 0."""
    if a.coeffs[0] != 0:
        raise BadConstantTerm(f"exp needs constant term 0, got {a.coeffs[0]}")
    # b' = a' b  =>  n b_n = sum_{k=1..n} k a_k b_{n-k}
    b = [Fraction(1)]
    for n in range(1, a.N + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if a.coeffs[k]:
                acc += k * a.coeffs[k] * b[n - k]
        b.append(acc / n)
    return TruncatedSeries(tuple(b))


def series_pow_rational(a: TruncatedSeries, alpha: RationalLike) -> TruncatedSeries:
    """a^alpha = exp(alpha log a); needs a_0 = 1."""
    alpha = to_rational(alpha)
    if a.coeffs[0] != 1:
        raise BadConstantTerm(f"rational power needs constant term 1, got {a.coeffs[0]}")
    return series_exp(series_log(a) * alpha)


def series_power(a: TruncatedSeries, alpha: RationalLike) -> TruncatedSeries:
    """Integer powers by repeated product, other rationals via exp/log."""
    alpha = to_rational(alpha)
    if alpha.denominator == 1:
        return series_pow_int(a, alpha.numerator)
    return series_pow_rational(a, alpha)


def series_shift_div_t(a: TruncatedSeries, k: int = 1) -> TruncatedSeries:
    """a(t) / t^k; the first k coefficients must vanish."""
    if k < 1:
        raise ValueError(f"shift must be positive, got {k}")
    if k > a.N:
        raise TruncationTooShort(f"cannot divide by t^{k} a series known to order {a.N}")
    if any(a.coeffs[i] != 0 for i in range(k)):
        raise NonDivisible(f"series is not divisible by t^{k}")
    return TruncatedSeries(a.coeffs[k:])


def umbral_apply(f: TruncatedSeries, p: Polynomial) -> Polynomial:
    """Act with f(t) = sum a_k t^k on p as sum a_k p^(k)(x).

    Coefficients of f beyond its truncation order are treated as absent.
    """
    c = p.coeffs
    out = []
    for j in range(len(c)):
        acc = Fraction(0)
        for k in range(min(f.N, len(c) - 1 - j) + 1):
            if f.coeffs[k]:
                acc += f.coeffs[k] * c[j + k] * falling_factorial(j + k, k)
        out.append(acc)
    return Polynomial(out)


def pairing(f: TruncatedSeries, p: Polynomial) -> Fraction:
    """<f(t) | p(x)> = sum_n c_n n! a_n."""
    if f.N < p.degree:
        raise TruncationTooShort(
            f"pairing a degree-{p.degree} polynomial needs truncation >= {p.degree}, got {f.N}"
        )
    return sum(
        (c * factorial(n) * f.coeffs[n] for n, c in enumerate(p.coeffs)),
        Fraction(0),
    )


class OrthogonalityResult(NamedTuple):
    holds: bool
    first_failure: Optional[tuple[int, int]]
    values: tuple[tuple[Fraction, ...], ...]
    """values[n][k] = <g f^k | polys[n]>"""


def _check_delta_pair(g: TruncatedSeries, f: TruncatedSeries) -> None:
    if f.order() != 1:
        raise OrderViolation(f"f must be a delta series (order 1), got order {f.order()}")
    if g.order() != 0:
        raise OrderViolation(f"g must be invertible (order 0), got order {g.order()}")


def sheffer_orthogonality_check(
    g: TruncatedSeries, f: TruncatedSeries, polys: Sequence[Polynomial]
) -> OrthogonalityResult:
    """Test <g f^k | polys[n]> = n! delta_{n,k} for all n, k < len(polys)."""
    _check_delta_pair(g, f)
    size = len(polys)
    rows = []
    failure = None
    gfk = g
    columns = []
    for _ in range(size):
        columns.append(gfk)
        gfk = gfk * f
    for n, p in enumerate(polys):
        row = tuple(pairing(columns[k], p) for k in range(size))
        rows.append(row)
        if failure is None:
            for k, v in enumerate(row):
                if v != (factorial(n) if n == k else 0):
                    failure = (n, k)
                    break
    return OrthogonalityResult(failure is None, failure, tuple(rows))


def transfer_polynomial(g: TruncatedSeries, f: TruncatedSeries, n: int) -> Polynomial:
    """S_n(x) = g(t)^-1 x (t / f(t))^n x^(n-1) for S_n ~ (g, f), n >= 1."""
    if n < 1:
        raise ValueError(f"transfer formula needs n >= 1, got {n}")
    _check_delta_pair(g, f)
    if f.N < n or g.N < n:
        raise TruncationTooShort(f"transfer at n={n} needs truncation >= {n}")
    t_over_f = series_recip(series_shift_div_t(f, 1))
    q = umbral_apply(series_pow_int(t_over_f, n), Polynomial.monomial(n - 1))
    return umbral_apply(series_recip(g), q.mul_x())

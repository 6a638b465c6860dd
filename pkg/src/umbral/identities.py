"""Exact verification of the scaled Sheffer families and the four
power-sum identities for higher-order Bernoulli, Euler and Frobenius-Euler
polynomials.

Each ``verify_*`` builds both sides as :class:`Polynomial` objects and
compares coefficients exactly. There is no tolerance anywhere.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from umbral.errors import EvenModulus, LambdaForbidden, TruncationTooShort
from umbral.numeric import RationalLike, binomial, factorial, to_rational
from umbral.power_sums import power_sum_row
from umbral.sequences import (
    Kind,
    SequenceFamily,
    bernoulli_polynomial,
    euler_polynomial,
    frobenius_euler_polynomial,
    scaled_family_polynomial,
    sheffer_g,
    stirling2,
)
from umbral.series import (
    Polynomial,
    TruncatedSeries,
    series_from_exponential,
    series_recip,
    series_shift_div_t,
    sheffer_orthogonality_check,
    transfer_polynomial,
)

IDENTITY_IDS = (
    "Lemma1.B",
    "Lemma1.Bhat",
    "Lemma1.E",
    "Lemma1.H",
    "Thm3",
    "Thm4.printed",
    "Thm4.corrected",
    "Thm5",
    "Thm6",
    "Eq16",
    "Eq17",
)

LEMMA1_FAMILIES = {
    "Lemma1.B": (Kind.BERNOULLI, False),
    "Lemma1.Bhat": (Kind.BERNOULLI, True),
    "Lemma1.E": (Kind.EULER, False),
    "Lemma1.H": (Kind.FROBENIUS_EULER, False),
}

EQUAL, MISMATCH, SKIPPED = "equal", "mismatch", "skipped"


def default_trunc(n: int) -> int:
    return 2 * n + 2


@dataclass(frozen=True)
class IdentityInstance:
    identity_id: str
    n: int
    m: int
    lam: Optional[Fraction] = None
    alpha: Optional[Fraction] = None
    trunc: int = 0

    def sort_key(self) -> tuple:
        return (
            IDENTITY_IDS.index(self.identity_id),
            self.n,
            self.m,
            self.alpha if self.alpha is not None else Fraction(0),
            self.lam if self.lam is not None else Fraction(0),
        )


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity instance.

    For polynomial identities ``lhs``/``rhs`` are ascending coefficient
    lists and ``first_mismatch`` is the lowest degree where they differ. For
    the Lemma 1 orthogonality checks they are the flattened pairing matrix
    ``<g t^k | S_n>`` (row n, column k) and its target ``n! delta_{n,k}``;
    ``failing_pair`` then names the first bad ``(n, k)``.
    """

    instance: IdentityInstance
    lhs: tuple[Fraction, ...]
    rhs: tuple[Fraction, ...]
    verdict: str
    first_mismatch: Optional[int] = None
    failing_pair: Optional[tuple[int, int]] = None
    note: str = ""

    @property
    def is_polynomial(self) -> bool:
        return not self.instance.identity_id.startswith("Lemma1")


def _compare(instance: IdentityInstance, lhs: Polynomial, rhs: Polynomial) -> VerificationReport:
    diff = lhs.first_difference(rhs)
    return VerificationReport(
        instance,
        lhs.coeffs,
        rhs.coeffs,
        EQUAL if diff is None else MISMATCH,
        first_mismatch=diff,
    )


def _skip(instance: IdentityInstance, reason: str) -> VerificationReport:
    return VerificationReport(instance, (), (), SKIPPED, note=reason)


def _need(trunc: int, needed: int) -> None:
    if trunc < needed:
        raise TruncationTooShort(f"truncation {trunc} is below the {needed} this instance consumes")


def _shifted_moments(values: Sequence[Fraction], n: int) -> list[Fraction]:
    """EGF coefficients of e^(-n t) * sum_k values[k] t^k / k!.

    c_s = sum_{k<=s} C(s, k) (-n)^(s-k) values[k].
    """
    return [
        sum((binomial(s, k) * (-n) ** (s - k) * values[k] for k in range(s + 1)), Fraction(0))
        for s in range(len(values))
    ]


# -- Lemma 1 -------------------------------------------------------------------


def verify_lemma1(
    family_id: str,
    alpha: RationalLike,
    m: int,
    n_max: int,
    lam: Optional[RationalLike] = None,
    trunc: Optional[int] = None,
    polys: Optional[Sequence[Polynomial]] = None,
) -> VerificationReport:
    """Check that the scaled family is Sheffer for (g(t), t).

    ``polys`` overrides the generated sequence; used to inject faults.
    """
    kind, hat = LEMMA1_FAMILIES[family_id]
    alpha = to_rational(alpha)
    lam_q = to_rational(lam) if kind is Kind.FROBENIUS_EULER else None
    family = SequenceFamily(kind, alpha, lam_q, m, hat)
    trunc = default_trunc(n_max) if trunc is None else trunc
    _need(trunc, n_max)
    instance = IdentityInstance(family_id, n_max, m, lam_q, alpha, trunc)
    if polys is None:
        polys = [scaled_family_polynomial(family, n) for n in range(n_max + 1)]
    g = sheffer_g(family, trunc)
    f = TruncatedSeries.monomial(1, trunc)
    result = sheffer_orthogonality_check(g, f, polys)
    size = len(polys)
    lhs = tuple(v for row in result.values for v in row)
    rhs = tuple(Fraction(factorial(n)) if n == k else Fraction(0) for n in range(size) for k in range(size))
    first = None if result.holds else result.first_failure[0] * size + result.first_failure[1]
    return VerificationReport(
        instance, lhs, rhs, EQUAL if result.holds else MISMATCH,
        first_mismatch=first, failing_pair=result.first_failure,
    )


# -- closed forms of the transfer formula ----------------------------------


def eq16_closed_form(n: int, m: int = 1) -> Polynomial:
    """x sum_r C(n-1, r) / C(2n-1-r, n) S2(2n-1-r, n) m^(2n-1-r) x^r."""
    inner = Polynomial(
        Fraction(binomial(n - 1, r) * stirling2(2 * n - 1 - r, n) * m ** (2 * n - 1 - r), binomial(2 * n - 1 - r, n))
        for r in range(n)
    )
    return inner.mul_x()


def stirling_delta(m: int, N: int) -> TruncatedSeries:
    """t^2 / (e^(m t) - 1) = t * recip((e^(m t) - 1) / t), to order N >= 1."""
    t_over = series_recip(series_shift_div_t(series_from_exponential(m, N) - 1, 1))
    return TruncatedSeries((Fraction(0),) + t_over.coeffs)


def _transfer_instance(identity_id: str, n: int, m: int, trunc: Optional[int]) -> VerificationReport:
    trunc = default_trunc(n) if trunc is None else trunc
    _need(trunc, n)
    instance = IdentityInstance(identity_id, n, m, trunc=trunc)
    f = stirling_delta(m, trunc)
    g = TruncatedSeries.constant(1, f.N)
    return _compare(instance, transfer_polynomial(g, f, n), eq16_closed_form(n, m))


def verify_eq16(n: int, m: int = 1, trunc: Optional[int] = None) -> VerificationReport:
    return _transfer_instance("Eq16", n, 1, trunc)


def verify_eq17(n: int, m: int, trunc: Optional[int] = None) -> VerificationReport:
    return _transfer_instance("Eq17", n, m, trunc)


# -- Theorems ------------------------------------------------------------------


def theorem3_lhs(n: int, m: int, algorithm: str = "series") -> Polynomial:
    sums = power_sum_row("plain", n - 1, n, m, algorithm=algorithm)
    moments = _shifted_moments(sums, n)
    coeffs = [Fraction(0)] * n
    for r in range(n):
        outer = Fraction(binomial(n - 1, r) * stirling2(2 * n - 1 - r, n), binomial(2 * n - 1 - r, n))
        for s in range(r + 1):
            coeffs[r - s] += outer * binomial(r, s) * moments[s]
    return Polynomial(coeffs)


def theorem3_rhs(n: int, m: int) -> Polynomial:
    total = Polynomial()
    for r in range(n):
        outer = Fraction(binomial(n - 1, r) * stirling2(2 * n - 1 - r, n), binomial(2 * n - 1 - r, n))
        for s in range(r + 1):
            c = outer * Fraction(binomial(r, s) * stirling2(s + n, n) * m ** (n + s), binomial(s + n, n))
            total = total + bernoulli_polynomial(n, r - s) * c
    return total


def verify_theorem3(n: int, m: int, trunc: Optional[int] = None, algorithm: str = "series") -> VerificationReport:
    if n < 1 or m < 1:
        raise ValueError(f"Theorem 3 needs n, m >= 1; got n={n}, m={m}")
    trunc = default_trunc(n) if trunc is None else trunc
    _need(trunc, n - 1)
    instance = IdentityInstance("Thm3", n, m, trunc=trunc)
    return _compare(instance, theorem3_lhs(n, m, algorithm), theorem3_rhs(n, m))


def theorem4_corrected_rhs(n: int, m: int, algorithm: str = "series") -> Polynomial:
    sums = power_sum_row("plain", n - 1, n, m, algorithm=algorithm)
    moments = _shifted_moments(sums, n)
    total = Polynomial()
    for s in range(n):
        c = binomial(n - 1, s) * moments[s] / Fraction(m) ** (s + 1)
        total = total + bernoulli_polynomial(n, n - 1 - s).scale_arg(m) * c
    return total


def verify_theorem4(n: int, m: int, variant: str = "corrected", trunc: Optional[int] = None, algorithm: str = "series") -> VerificationReport:
    """B_{n-1}^(n)(x) against either printed or derivation-consistent right side.

    The printed right side is the left side of Theorem 3 verbatim; the
    corrected one follows from S_n(x) = x B_{n-1}^(n)(x) and the expansion of
    ((e^(mt) - 1)/(e^t - 1))^n acting on (x/m) B_{n-1}^(n)(x/m).
    """
    if n < 1 or m < 1:
        raise ValueError(f"Theorem 4 needs n, m >= 1; got n={n}, m={m}")
    if variant not in ("printed", "corrected"):
        raise ValueError(f"variant must be 'printed' or 'corrected', got {variant!r}")
    trunc = default_trunc(n) if trunc is None else trunc
    _need(trunc, n - 1)
    instance = IdentityInstance(f"Thm4.{variant}", n, m, trunc=trunc)
    lhs = bernoulli_polynomial(n, n - 1)
    rhs = theorem3_lhs(n, m, algorithm) if variant == "printed" else theorem4_corrected_rhs(n, m, algorithm)
    return _compare(instance, lhs, rhs)


def theorem5_rhs(n: int, m: int, algorithm: str = "series") -> Polynomial:
    sums = power_sum_row("alt", n - 1, n, m, algorithm=algorithm)
    moments = _shifted_moments(sums, n)
    total = Polynomial()
    for s in range(n):
        c = (-1) ** n * binomial(n - 1, s) * moments[s] * Fraction(m) ** (n - 1 - s)
        total = total + euler_polynomial(n, n - 1 - s).scale_arg(m) * c
    return total


def verify_theorem5(n: int, m: int, trunc: Optional[int] = None, algorithm: str = "series") -> VerificationReport:
    if n < 1 or m < 1:
        raise ValueError(f"Theorem 5 needs n, m >= 1; got n={n}, m={m}")
    if m % 2 == 0:
        raise EvenModulus(f"Theorem 5 needs odd m, got {m}")
    trunc = default_trunc(n) if trunc is None else trunc
    _need(trunc, n - 1)
    instance = IdentityInstance("Thm5", n, m, trunc=trunc)
    return _compare(instance, euler_polynomial(n, n - 1), theorem5_rhs(n, m, algorithm))


def check_theorem6_lambda(m: int, lam: Fraction) -> None:
    if lam == 0:
        raise LambdaForbidden("Theorem 6 needs lambda != 0")
    if lam == 1:
        raise LambdaForbidden("Theorem 6 needs lambda != 1")
    if lam**m == 1:
        raise LambdaForbidden(f"Theorem 6 needs lambda^m != 1; ({lam})^{m} = 1")


def theorem6_rhs(n: int, m: int, lam: Fraction, algorithm: str = "series") -> Polynomial:
    sums = power_sum_row("lambda", n - 1, n, m, lam=lam, algorithm=algorithm)
    moments = _shifted_moments(sums, n)
    prefactor = ((1 - lam) / (1 - lam**m)) ** n * lam ** (m * n)
    total = Polynomial()
    for s in range(n):
        c = prefactor * binomial(n - 1, s) * moments[s] * Fraction(m) ** (n - 1 - s)
        total = total + frobenius_euler_polynomial(n, n - 1 - s, lam**m).scale_arg(m) * c
    return total


def verify_theorem6(n: int, m: int, lam: RationalLike, trunc: Optional[int] = None, algorithm: str = "series") -> VerificationReport:
    if n < 1 or m < 1:
        raise ValueError(f"Theorem 6 needs n, m >= 1; got n={n}, m={m}")
    lam = to_rational(lam)
    check_theorem6_lambda(m, lam)
    trunc = default_trunc(n) if trunc is None else trunc
    _need(trunc, n - 1)
    instance = IdentityInstance("Thm6", n, m, lam, trunc=trunc)
    return _compare(instance, frobenius_euler_polynomial(n, n - 1, lam), theorem6_rhs(n, m, lam, algorithm))


# -- sweeps --------------------------------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    identities: tuple[str, ...] = IDENTITY_IDS
    n_max: int = 4
    m_max: int = 3
    n_min: int = 1
    m_min: int = 1
    lambdas: tuple[Fraction, ...] = (Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(-2, 3))
    alphas: tuple[Fraction, ...] = (Fraction(1), Fraction(2), Fraction(3))
    trunc: Optional[int] = None
    algorithm: str = "series"
    jobs: int = 1

    def __post_init__(self):
        for ident in self.identities:
            if ident not in IDENTITY_IDS:
                raise ValueError(f"unknown identity {ident!r}")
        object.__setattr__(self, "lambdas", tuple(to_rational(x) for x in self.lambdas))
        object.__setattr__(self, "alphas", tuple(to_rational(x) for x in self.alphas))
        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}")


@dataclass(frozen=True)
class _Task:
    identity_id: str
    n: int
    m: int
    lam: Optional[Fraction] = None
    alpha: Optional[Fraction] = None


def _tasks(config: SweepConfig) -> list[_Task]:
    ns = range(config.n_min, config.n_max + 1)
    ms = range(config.m_min, config.m_max + 1)
    lams = sorted(set(config.lambdas))
    alphas = sorted(set(config.alphas))
    out = []
    for ident in IDENTITY_IDS:
        if ident not in config.identities:
            continue
        if ident.startswith("Lemma1"):
            # one orthogonality matrix per (m, alpha[, lambda]) covering n, k <= n_max
            if config.n_max < 0 or not ns:
                continue
            for m in ms:
                for alpha in alphas:
                    if ident == "Lemma1.H":
                        out.extend(_Task(ident, config.n_max, m, lam, alpha) for lam in lams if lam != 1)
                    else:
                        out.append(_Task(ident, config.n_max, m, None, alpha))
        elif ident == "Thm6":
            out.extend(_Task(ident, n, m, lam) for n in ns for m in ms for lam in lams)
        elif ident == "Eq16":
            out.extend(_Task(ident, n, 1) for n in ns)
        else:
            out.extend(_Task(ident, n, m) for n in ns for m in ms)
    return out


def run_task(task: _Task, trunc: Optional[int] = None, algorithm: str = "series") -> VerificationReport:
    ident, n, m = task.identity_id, task.n, task.m
    if ident.startswith("Lemma1"):
        if ident == "Lemma1.Bhat" and m > 1 and task.alpha.denominator != 1:
            instance = IdentityInstance(ident, n, m, None, task.alpha, trunc or default_trunc(n))
            return _skip(instance, "m^alpha is not rational")
        return verify_lemma1(ident, task.alpha, m, n, task.lam, trunc)
    if ident == "Thm3":
        return verify_theorem3(n, m, trunc, algorithm)
    if ident in ("Thm4.printed", "Thm4.corrected"):
        return verify_theorem4(n, m, ident.split(".")[1], trunc, algorithm)
    if ident == "Thm5":
        if m % 2 == 0:
            return _skip(IdentityInstance(ident, n, m, trunc=trunc or default_trunc(n)), "m must be odd")
        return verify_theorem5(n, m, trunc, algorithm)
    if ident == "Thm6":
        try:
            check_theorem6_lambda(m, task.lam)
        except LambdaForbidden as exc:
            return _skip(IdentityInstance(ident, n, m, task.lam, trunc=trunc or default_trunc(n)), str(exc))
        return verify_theorem6(n, m, task.lam, trunc, algorithm)
    if ident == "Eq16":
        return verify_eq16(n, trunc=trunc)
    if ident == "Eq17":
        return verify_eq17(n, m, trunc)
    raise ValueError(f"unknown identity {ident!r}")


def _run_packed(args: tuple) -> VerificationReport:
    return run_task(*args)


def run_sweep(config: SweepConfig) -> list[VerificationReport]:
    """All instances selected by ``config``, ordered by (identity, n, m, alpha, lambda).

    With ``jobs > 1`` instances run in worker processes; the returned order
    does not depend on completion order.
    """
    tasks = _tasks(config)
    packed = [(t, config.trunc, config.algorithm) for t in tasks]
    if config.jobs == 1 or len(tasks) <= 1:
        reports = [_run_packed(p) for p in packed]
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            reports = list(pool.map(_run_packed, packed))
    return sorted(reports, key=lambda r: r.instance.sort_key())


def summarize(reports: Iterable[VerificationReport]) -> dict[str, int]:
    counts = {EQUAL: 0, MISMATCH: 0, SKIPPED: 0}
    for r in reports:
        counts[r.verdict] += 1
    return counts

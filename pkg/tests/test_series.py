from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from oracles import operator_transfer, coeffs_of, t as T
from umbral.errors import BadConstantTerm, NonDivisible, OrderViolation, TruncationTooShort, ZeroConstantTerm
from umbral.numeric import factorial
from umbral.sequences import bernoulli_polynomial
from umbral.series import (
    Polynomial,
    TruncatedSeries,
    pairing,
    series_exp,
    series_from_exponential,
    series_log,
    series_mul,
    series_pow_int,
    series_pow_rational,
    series_recip,
    series_scale,
    series_shift_div_t,
    sheffer_orthogonality_check,
    transfer_polynomial,
    umbral_apply,
)

F = Fraction

small_q = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def series(draw, N=8, unit=False, invertible=False):
    coeffs = draw(st.lists(small_q, min_size=N + 1, max_size=N + 1))
    if unit:
        coeffs[0] = F(1)
    elif invertible and coeffs[0] == 0:
        coeffs[0] = F(1)
    return TruncatedSeries(tuple(coeffs))


@st.composite
def polynomials(draw, max_degree=8):
    return Polynomial(draw(st.lists(small_q, max_size=max_degree + 1)))


def S(*coeffs):
    return TruncatedSeries(tuple(F(c) for c in coeffs))


# -- Polynomial --------------------------------------------------------------


def test_polynomial_trims_and_degree():
    assert Polynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert Polynomial().degree == -1
    assert Polynomial((0, 0, 3)).degree == 2


def test_polynomial_text_forms():
    p = Polynomial((F(-1), F(1)))
    assert str(p) == "[-1, 1]"
    assert p.pretty() == "x - 1"
    assert Polynomial((0, -1, 1)).pretty() == "x^2 - x"
    assert Polynomial((F(-3, 1280), 0, 0, 0, 1)).pretty() == "x^4 - 3/1280"
    assert Polynomial().pretty() == "0"


@given(polynomials(), polynomials(), small_q)
def test_polynomial_ring_ops_agree_with_evaluation(p, q, y):
    assert (p * q)(y) == p(y) * q(y)
    assert (p + q)(y) == p(y) + q(y)
    assert (p - q)(y) == p(y) - q(y)


def test_scale_arg():
    assert Polynomial((0, 0, 1)).scale_arg(2) == Polynomial((0, 0, F(1, 4)))
    assert Polynomial((-1, 1)).scale_arg(3) == Polynomial((-1, F(1, 3)))


# -- series arithmetic -----------------------------------------------------


def test_series_from_exponential():
    assert series_from_exponential(0, 4) == S(1, 0, 0, 0, 0)
    assert series_from_exponential(1, 3) == S(1, 1, F(1, 2), F(1, 6))
    assert series_from_exponential(2, 2) == S(1, 2, 2)


def test_egf_view():
    e = series_from_exponential(3, 6)
    assert [e.egf_coeff(k) for k in range(7)] == [3**k for k in range(7)]
    with pytest.raises(TruncationTooShort):
        e.egf_coeff(7)


def test_order():
    assert S(0, 0, 2).order() == 2
    assert S(1, 0).order() == 0
    assert S(0, 0).order() is None


def test_mul_examples():
    a = S(1, 2, 3)
    assert a * S(1, 0, 0) == a
    assert series_mul(S(1, 1, 0), S(1, -1, 0)) == S(1, 0, -1)
    e = series_from_exponential(1, 6)
    assert e * e == series_from_exponential(2, 6)
    assert series_scale(a, "1/2") == S(F(1, 2), 1, F(3, 2))


def test_binary_ops_keep_shorter_truncation():
    assert (S(1, 1, 1, 1) * S(1, 1)).N == 1
    assert (S(1, 1, 1, 1) + S(1, 1)).N == 1


def test_recip_examples():
    assert series_recip(S(1, 0, 0)) == S(1, 0, 0)
    assert series_recip(S(1, 1, 0, 0)) == S(1, -1, 1, -1)
    with pytest.raises(ZeroConstantTerm):
        series_recip(S(0, 1))


@given(series(invertible=True))
def test_recip_is_involution(a):
    assert series_recip(series_recip(a)) == a
    assert a * series_recip(a) == TruncatedSeries.constant(1, a.N)


def test_pow_int_examples():
    a = S(2, 3, 5)
    assert series_pow_int(a, 0) == S(1, 0, 0)
    assert series_pow_int(a, 1) == a
    kernel = series_shift_div_t(series_from_exponential(1, 3) - 1, 1)
    assert series_pow_int(kernel, 2) == S(1, 1, F(7, 12))
    with pytest.raises(ZeroConstantTerm):
        series_pow_int(S(0, 1), -1)


@given(series(N=6, invertible=True), st.integers(-4, 4), st.integers(-4, 4))
def test_pow_int_adds_exponents(a, i, j):
    assert series_pow_int(a, i) * series_pow_int(a, j) == series_pow_int(a, i + j)


def test_exp_log_inverse_pair():
    one_plus_t = S(1, 1, 0, 0, 0, 0, 0, 0, 0)
    assert series_exp(series_log(one_plus_t)) == one_plus_t
    with pytest.raises(BadConstantTerm):
        series_log(S(2, 1))
    with pytest.raises(BadConstantTerm):
        series_exp(S(1, 1))


def test_log_of_exponential_is_linear():
    assert series_log(series_from_exponential(F(3, 2), 7)) == TruncatedSeries.from_coeffs([0, F(3, 2)], 7)


def test_pow_rational_square_root():
    one_plus_t = TruncatedSeries.from_coeffs([1, 1], 8)
    root = series_pow_rational(one_plus_t, F(1, 2))
    assert root * root == one_plus_t
    # binomial series oracle: C(1/2, k)
    expected = sp.series(sp.sqrt(1 + T), T, 0, 9).removeO()
    assert [F(str(expected.coeff(T, k))) for k in range(9)] == list(root.coeffs)


@settings(max_examples=40)
@given(series(N=6, unit=True), st.integers(-3, 3), st.sampled_from([1, 2, 3]))
def test_pow_rational_consistent_with_integer_powers(a, p, q):
    if p == 0 and q > 1:
        p = 1
    r = series_pow_rational(a, F(p, q))
    assert series_pow_int(r, q) == series_pow_int(a, p)
    if q == 1:
        assert r == series_pow_int(a, p)


def test_shift_div_t():
    e = series_from_exponential(1, 4) - 1
    assert series_shift_div_t(e, 1) == S(1, F(1, 2), F(1, 6), F(1, 24))
    assert series_shift_div_t(S(0, 0, 1), 1) == S(0, 1)
    with pytest.raises(NonDivisible):
        series_shift_div_t(S(1, 1), 1)


# -- umbral operator and pairing ----------------------------------------------


def test_umbral_apply_examples():
    t2 = TruncatedSeries.monomial(2, 4)
    assert umbral_apply(t2, Polynomial.monomial(3)) == Polynomial((0, 6))
    shift = series_from_exponential(1, 4)
    assert umbral_apply(shift, Polynomial.monomial(2)) == Polynomial((1, 2, 1))
    p = Polynomial((3, F(1, 2), -7))
    assert umbral_apply(TruncatedSeries.constant(1, 3), p) == p


@given(polynomials(max_degree=6), small_q)
def test_exponential_is_taylor_shift(p, y):
    shifted = umbral_apply(series_from_exponential(y, 6), p)
    for point in (F(0), F(1), F(-2, 3)):
        assert shifted(point) == p(point + y)


@settings(max_examples=60)
@given(series(N=8), series(N=8), polynomials(max_degree=8))
def test_umbral_apply_is_homomorphism(f, g, p):
    assert umbral_apply(f * g, p) == umbral_apply(f, umbral_apply(g, p))


@given(series(N=8), polynomials(max_degree=8))
def test_pairing_is_constant_term_of_action(f, p):
    assert pairing(f, p) == umbral_apply(f, p).coeff(0)


def test_pairing_kronecker():
    for n in range(7):
        for k in range(7):
            value = pairing(TruncatedSeries.monomial(k, 6), Polynomial.monomial(n))
            assert value == (factorial(n) if n == k else 0)


def test_pairing_evaluates_at_point():
    assert pairing(series_from_exponential(3, 4), Polynomial((-1, 0, 1))) == 8
    p = Polynomial((F(5, 3), 2, 9))
    assert pairing(TruncatedSeries.constant(1, 2), p) == F(5, 3)
    with pytest.raises(TruncationTooShort):
        pairing(TruncatedSeries.constant(1, 1), p)


# -- Sheffer sequences and the transfer formula --------------------------------


def test_orthogonality_powers_of_x():
    N = 6
    one, t = TruncatedSeries.constant(1, N), TruncatedSeries.monomial(1, N)
    res = sheffer_orthogonality_check(one, t, [Polynomial.monomial(n) for n in range(N + 1)])
    assert res.holds and res.first_failure is None


def test_orthogonality_detects_fault():
    N = 4
    one, t = TruncatedSeries.constant(1, N), TruncatedSeries.monomial(1, N)
    polys = [Polynomial.monomial(n) for n in range(N + 1)]
    polys[1] = Polynomial((1, 1))
    res = sheffer_orthogonality_check(one, t, polys)
    assert not res.holds and res.first_failure == (1, 0)


def test_orthogonality_for_associated_bernoulli_family():
    # x B_{n-1}^(n)(x) ~ (1, e^t - 1)
    N = 7
    f = series_from_exponential(1, N) - 1
    polys = [Polynomial.constant(1)] + [bernoulli_polynomial(n, n - 1).mul_x() for n in range(1, N + 1)]
    assert sheffer_orthogonality_check(TruncatedSeries.constant(1, N), f, polys).holds


def test_orthogonality_order_checks():
    with pytest.raises(OrderViolation):
        sheffer_orthogonality_check(S(1, 0), S(0, 0, 1), [])
    with pytest.raises(OrderViolation):
        sheffer_orthogonality_check(S(0, 1), S(0, 1), [])


def _t2_over(m, N):
    e = series_shift_div_t(series_from_exponential(m, N) - 1, 1)
    return TruncatedSeries((F(0),) + series_recip(e).coeffs)


def test_transfer_examples():
    one = TruncatedSeries.constant(1, 8)
    assert transfer_polynomial(one, TruncatedSeries.monomial(1, 8), 5) == Polynomial.monomial(5)
    assert transfer_polynomial(one, _t2_over(1, 8), 2) == Polynomial((0, 1, 1))
    assert transfer_polynomial(one, series_from_exponential(1, 8) - 1, 2) == Polynomial((0, -1, 1))
    with pytest.raises(OrderViolation):
        transfer_polynomial(one, S(1, 1, 0, 0, 0, 0, 0, 0, 0), 2)
    with pytest.raises(TruncationTooShort):
        transfer_polynomial(one, TruncatedSeries.monomial(1, 2), 5)


@pytest.mark.parametrize("n", range(1, 7))
def test_transfer_matches_symbolic_operator(n):
    f_expr = T**2 / (sp.exp(T) - 1)
    expected = coeffs_of(operator_transfer(f_expr, n), n)
    got = transfer_polynomial(TruncatedSeries.constant(1, 2 * n + 2), _t2_over(1, 2 * n + 2), n)
    assert list(got.coeffs) == expected


@given(series(N=9), st.integers(1, 7))
def test_transfer_shape_for_delta_series(f, n):
    coeffs = list(f.coeffs)
    coeffs[0] = F(0)
    if coeffs[1] == 0:
        coeffs[1] = F(1)
    delta = TruncatedSeries(tuple(coeffs))
    p = transfer_polynomial(TruncatedSeries.constant(1, 9), delta, n)
    assert p.degree == n
    assert p.coeff(0) == 0


@given(series(N=8, invertible=True), st.integers(1, 6))
def test_transfer_output_is_sheffer(g, n):
    # the transfer output for (g, e^t - 1) satisfies <g f^k | S_n> = n! delta
    f = series_from_exponential(1, 8) - 1
    polys = [umbral_apply(series_recip(g), Polynomial.constant(1))] + [transfer_polynomial(g, f, j) for j in range(1, n + 1)]
    assert sheffer_orthogonality_check(g, f, polys).holds

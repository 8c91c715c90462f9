"""Truncated series arithmetic and the named generating functions.

Derived expected values were computed with independent oracles (direct
convolution, term-by-term substitution, the convolution recurrence for
Catalan numbers) and frozen here; the tests then check the series engine
against them, never against itself.
"""

import random
from fractions import Fraction

import pytest

from pascal_rhombus import (
    TruncatedSeries,
    catalan_gf,
    column_gf,
    fibonacci_gf,
    motzkin2_gf,
)

FIBONACCI = [0, 1, 1, 2, 3, 5, 8, 13]
# convolution of FIBONACCI with itself, by hand
FIBONACCI_SQUARED = [0, 0, 1, 2, 5, 10, 20, 38]
CATALAN = [1, 1, 2, 5, 14, 42]
# square root of 1 - 2x - 5x^2 + 2x^3 + x^4, verified by re-squaring
SQRT_RADICAND = [1, -1, -3, -2, -6, -12, -32, -80]
# Catalan series evaluated at Fibonacci^2: sum_k c_k (F^2)^k, term by term
CATALAN_OF_FIB_SQ = [1, 0, 1, 2, 7, 18, 53]
MOTZKIN2 = [1, 1, 3, 6, 16, 40]
COLUMN0 = [1, 1, 4, 9, 29, 82, 255]
COLUMN1 = [1, 2, 8, 22, 72, 218, 691, 2158]
COLUMN3 = [1, 4, 19, 70, 261, 914, 3177]

RADICAND = [1, -2, -5, 2, 1]


def series(values, order=None):
    return TruncatedSeries.from_coeffs(values, order)


# -- construction and inspection ------------------------------------------


def test_from_coeffs_pads_and_reduces():
    s = series([1, 2], 4)
    assert s.order == 4
    assert s.coeffs == (Fraction(1), Fraction(2), Fraction(0), Fraction(0))
    assert series([1, 2, 3, 4], 2).coeffs == (Fraction(1), Fraction(2))


def test_order_must_be_positive():
    with pytest.raises(ValueError):
        series([1], 0)


def test_coefficient_access_is_bounded():
    s = series([5, 6], 2)
    assert s.coefficient(1) == 6
    with pytest.raises(IndexError):
        s.coefficient(2)


def test_valuation():
    assert series([0, 0, 7], 5).valuation() == 2
    assert series([0], 4).valuation() == 4
    assert series([3], 4).valuation() == 0


def test_structural_equality():
    assert series([1, 2], 3) == series([1, 2, 0], 3)
    assert series([1, 2], 3) != series([1, 2], 4)


# -- ring operations --------------------------------------------------------


def test_add_cancellation():
    assert series([1, 1], 3) + series([1, -1], 3) == series([2], 3)


def test_add_identity():
    s = series([3, 1, 4], 3)
    assert s + TruncatedSeries.zero(3) == s


def test_add_monomials():
    assert series([0, 1], 4) + series([0, 0, 1], 4) == series([0, 1, 1], 4)


def test_binary_ops_reject_order_mismatch():
    a, b = series([1], 3), series([1], 4)
    for op in (lambda: a + b, lambda: a - b, lambda: a * b, lambda: a.compose(b)):
        with pytest.raises(ValueError, match="order mismatch"):
            op()


def test_mul_difference_of_squares():
    assert series([1, 1], 3) * series([1, -1], 3) == series([1, 0, -1], 3)


def test_mul_identity():
    s = series([2, 7, 1, 8], 4)
    assert s * TruncatedSeries.one(4) == s


def test_mul_fibonacci_square():
    f = fibonacci_gf(8)
    assert (f * f).integer_coefficients() == FIBONACCI_SQUARED


def test_scalar_mul_and_div():
    s = series([2, 4], 2)
    assert s * Fraction(1, 2) == series([1, 2], 2)
    assert 3 * s == series([6, 12], 2)
    assert s / 2 == series([1, 2], 2)


def test_pow():
    s = series([1, 1], 6)
    assert s ** 0 == TruncatedSeries.one(6)
    assert s ** 3 == s * s * s
    with pytest.raises(ValueError):
        s ** -1


# -- reciprocal --------------------------------------------------------------


def test_reciprocal_geometric():
    assert series([1, -1], 6).reciprocal() == series([1] * 6, 6)


def test_reciprocal_of_one():
    assert TruncatedSeries.one(5).reciprocal() == TruncatedSeries.one(5)


def test_reciprocal_fibonacci_denominator():
    got = series([1, -1, -1], 8).reciprocal()
    assert got.integer_coefficients() == [1, 1, 2, 3, 5, 8, 13, 21]
    assert got * series([1, -1, -1], 8) == TruncatedSeries.one(8)


def test_reciprocal_needs_unit_constant():
    with pytest.raises(ValueError):
        series([0, 1], 4).reciprocal()


def test_reciprocal_round_trip_battery():
    rng = random.Random(424242)
    for _ in range(25):
        coeffs = [Fraction(rng.randrange(1, 7))] + [
            Fraction(rng.randrange(-9, 10), rng.randrange(1, 5)) for _ in range(9)
        ]
        s = series(coeffs, 10)
        assert s * s.reciprocal() == TruncatedSeries.one(10)


# -- sqrt --------------------------------------------------------------------


def test_sqrt_of_one():
    assert TruncatedSeries.one(5).sqrt() == TruncatedSeries.one(5)


def test_sqrt_perfect_square():
    square = series([1, 1], 6) * series([1, 1], 6)
    assert square.sqrt() == series([1, 1], 6)


def test_sqrt_radicand_prefix():
    got = series(RADICAND, 8).sqrt()
    assert got == series(SQRT_RADICAND, 8)


def test_sqrt_squares_back():
    rad = series(RADICAND, 30)
    root = rad.sqrt()
    assert root * root == rad
    assert root.coefficient(0) == 1


def test_sqrt_requires_constant_one():
    for bad in ([0, 1], [4], [2, 1]):
        with pytest.raises(ValueError):
            series(bad, 4).sqrt()


def test_sqrt_round_trip_battery():
    rng = random.Random(77)
    for _ in range(25):
        coeffs = [Fraction(1)] + [
            Fraction(rng.randrange(-9, 10), rng.randrange(1, 5)) for _ in range(11)
        ]
        s = series(coeffs, 12)
        root = s.sqrt()
        assert root * root == s


# -- compose -----------------------------------------------------------------


def test_compose_identity_substitution():
    c = catalan_gf(10)
    x = TruncatedSeries.monomial(1, 10)
    assert c.compose(x) == c


def test_compose_geometric_with_x_squared():
    geom = series([1, -1], 7).reciprocal()
    x2 = TruncatedSeries.monomial(2, 7)
    assert geom.compose(x2) == series([1, 0, 1, 0, 1, 0, 1], 7)


def test_compose_catalan_of_fibonacci_squared():
    f = fibonacci_gf(7)
    got = catalan_gf(7).compose(f * f)
    assert got.integer_coefficients() == CATALAN_OF_FIB_SQ


def test_compose_rejects_unit_inner():
    with pytest.raises(ValueError):
        series([1, 1], 4).compose(series([1, 1], 4))


# -- shift_div and truncate ----------------------------------------------------


def test_shift_div_basic():
    got = series([0, 1, 1], 3).shift_div(1)
    assert got == series([1, 1], 2)
    assert got.order == 2


def test_shift_div_zero_is_identity():
    s = series([0, 1, 5], 3)
    assert s.shift_div(0) is s


def test_shift_div_fibonacci():
    got = fibonacci_gf(9).shift_div(1)
    assert got.integer_coefficients() == [1, 1, 2, 3, 5, 8, 13, 21]


def test_shift_div_requires_divisibility():
    with pytest.raises(ValueError, match="not divisible"):
        series([1, 1], 4).shift_div(1)
    with pytest.raises(ValueError):
        series([0, 1], 2).shift_div(2)


def test_truncate():
    s = series([1, 2, 3], 3)
    assert s.truncate(2) == series([1, 2], 2)
    with pytest.raises(ValueError):
        s.truncate(4)


# -- named series ------------------------------------------------------------


def test_fibonacci_gf():
    assert fibonacci_gf(8).integer_coefficients() == FIBONACCI
    assert fibonacci_gf(1).integer_coefficients() == [0]
    assert fibonacci_gf(2).integer_coefficients() == [0, 1]


def test_catalan_gf_prefix():
    assert catalan_gf(6).integer_coefficients() == CATALAN


def test_catalan_gf_convolution_recurrence():
    # independent oracle: c_{n+1} = sum_i c_i c_{n-i}
    expected = [1]
    while len(expected) < 16:
        expected.append(sum(expected[i] * expected[-1 - i] for i in range(len(expected))))
    assert catalan_gf(16).integer_coefficients() == expected


def test_catalan_defining_equation():
    c = catalan_gf(20)
    x = TruncatedSeries.monomial(1, 20)
    assert c == TruncatedSeries.one(20) + x * c * c


def test_motzkin2_prefix():
    assert motzkin2_gf(6).integer_coefficients() == MOTZKIN2
    assert motzkin2_gf(1).integer_coefficients() == [1]


def test_motzkin2_all_routes_agree_at_order_30():
    closed = motzkin2_gf(30, "closed_form")
    comp = motzkin2_gf(30, "compositional")
    rec = motzkin2_gf(30, "functional_equation")
    assert closed == comp == rec


def test_motzkin2_rejects_unknown_method():
    with pytest.raises(ValueError, match="unknown method"):
        motzkin2_gf(5, "magic")


def test_column_gf_golden_prefixes():
    assert column_gf(0, 7).integer_coefficients() == COLUMN0
    assert column_gf(1, 9).integer_coefficients()[1:] == COLUMN1
    assert column_gf(3, 10).integer_coefficients()[3:] == COLUMN3


def test_column_gf_leading_zeros():
    assert column_gf(3, 10).valuation() == 3


def test_column_gf_routes_agree():
    for j in range(7):
        assert column_gf(j, 30, "closed_form") == column_gf(j, 30, "functional_equation")


def test_column_gf_integrality():
    # rational sqrt/reciprocal intermediates must cancel to integers
    for j in range(7):
        s = column_gf(j, 30)
        assert s.is_integral()
        assert all(c >= 0 for c in s.coeffs)


def test_column_zero_is_reciprocal_sqrt_radicand():
    # the central column generating function is 1/sqrt(1 - 2x - 5x^2 + 2x^3 + x^4)
    rad = series(RADICAND, 30)
    assert column_gf(0, 30) == rad.sqrt().reciprocal()


def test_column_gf_rejects_bad_arguments():
    with pytest.raises(ValueError):
        column_gf(-1, 10)
    with pytest.raises(ValueError, match="unknown method"):
        column_gf(0, 10, "magic")


def test_catalan_binomial_identity_in_x_squared():
    # C(x^2)^j / (1 - 2x^2 C(x^2)) = sum_m binomial(2m+j, m) x^(2m);
    # the even-substitution shape the series route leans on
    from pascal_rhombus import binomial

    order = 24
    c_sq = catalan_gf(order).compose(TruncatedSeries.monomial(2, order))
    denom = TruncatedSeries.one(order) - TruncatedSeries.monomial(2, order) * c_sq * 2
    inv = denom.reciprocal()
    for j in range(5):
        lhs = (c_sq ** j * inv).integer_coefficients()
        expected = [0] * order
        for m in range(order // 2 + 1):
            if 2 * m < order:
                expected[2 * m] = binomial(2 * m + j, m)
        assert lhs == expected

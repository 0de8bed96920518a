from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from esp_spectra.errors import DegreeError, DimensionError, PoleError
from esp_spectra.poly import (
    Polynomial,
    RationalFunction,
    check_engine_recursion,
    directional_derivative,
    elem_sym,
    elem_sym_values,
    evaluate,
    partial_derivative,
    q_ratio,
    restrict_univariate,
)


def x(n, i):
    return Polynomial.variable(n, i)


def to_sympy(p: Polynomial, symbols):
    return sum((sympy.Rational(c.numerator, c.denominator)
                * sympy.Mul(*[s**e for s, e in zip(symbols, mono)])
                for mono, c in p.items()), sympy.Integer(0))


def sympy_elem_sym(symbols, k):
    return sum((sympy.Mul(*t) for t in combinations(symbols, k)), sympy.Integer(0))


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


# --- elem_sym ---------------------------------------------------------------

def test_elem_sym_examples():
    n = 3
    assert elem_sym(3, [1, 2, 3], 2) == x(n, 1) * x(n, 2) + x(n, 1) * x(n, 3) + x(n, 2) * x(n, 3)
    assert elem_sym(4, [1, 2, 3], 1) == x(4, 1) + x(4, 2) + x(4, 3)
    assert evaluate(elem_sym(4, [1, 2, 3, 4], 3), [1, 1, 1, 1]) == 4


def test_elem_sym_zero_degree_is_one():
    assert elem_sym(3, [1, 2], 0) == 1
    assert elem_sym(3, [], 0) == 1


def test_elem_sym_degree_exceeding_set_is_an_error():
    with pytest.raises(DegreeError, match="degree exceeds set size"):
        elem_sym(4, [1, 2], 3)


def test_elem_sym_rejects_indices_outside_ambient_dim():
    with pytest.raises((DimensionError, ValueError)):
        elem_sym(3, [1, 4], 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_elem_sym_matches_sympy(n):
    syms = sympy.symbols(f"y1:{n + 1}")
    for k in range(n + 1):
        assert sympy.expand(to_sympy(elem_sym(n, range(1, n + 1), k), syms) - sympy_elem_sym(syms, k)) == 0


@pytest.mark.parametrize("n", range(1, 7))
def test_elem_sym_at_ones_is_binomial(n):
    for k in range(n + 1):
        assert evaluate(elem_sym(n, range(1, n + 1), k), [1] * n) == comb(n, k)


@pytest.mark.parametrize("size", range(1, 7))
def test_sum_recursion_and_decomposition_identities(size):
    n = size
    S = list(range(1, size + 1))
    for k in range(1, size + 1):
        lhs = elem_sym(n, S, k) * k
        rhs = Polynomial.zero(n)
        for j in S:
            rest = [i for i in S if i != j]
            rhs = rhs + x(n, j) * elem_sym(n, rest, k - 1)
        assert lhs == rhs
        for j in S:
            rest = [i for i in S if i != j]
            upper = elem_sym(n, rest, k) if k <= len(rest) else Polynomial.zero(n)
            assert elem_sym(n, S, k) == upper + x(n, j) * elem_sym(n, rest, k - 1)


@settings(max_examples=60, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=6), rationals)
def test_homogeneity(point, lam):
    n = len(point)
    for k in range(n + 1):
        p = elem_sym(n, range(1, n + 1), k)
        assert evaluate(p, [lam * v for v in point]) == lam**k * evaluate(p, point)


@settings(max_examples=60, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=6))
def test_numeric_elem_sym_matches_polynomial(point):
    n = len(point)
    values = elem_sym_values(point)
    for k in range(n + 1):
        assert values[k] == evaluate(elem_sym(n, range(1, n + 1), k), point)


# --- derivatives --------------------------------------------------------------

def test_partial_derivative_examples():
    assert partial_derivative(elem_sym(3, [1, 2, 3], 2), [1]) == x(3, 2) + x(3, 3)
    assert partial_derivative(elem_sym(4, [1, 2, 3, 4], 2), [1, 2]) == 1
    assert partial_derivative(elem_sym(4, [1, 2, 3, 4], 3), [4]) == elem_sym(4, [1, 2, 3], 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_partial_derivative_of_elem_sym_is_elem_sym_of_complement(n):
    full = range(1, n + 1)
    for k in range(n + 1):
        ek = elem_sym(n, full, k)
        for size in range(k + 1):
            for S in combinations(full, size):
                rest = [i for i in full if i not in S]
                assert partial_derivative(ek, S) == elem_sym(n, rest, k - size)


def test_partial_derivative_can_vanish():
    assert partial_derivative(elem_sym(3, [1, 2, 3], 1), [1, 2]).is_zero()


def test_directional_derivative_examples():
    assert directional_derivative(elem_sym(3, [1, 2, 3], 2), [1, 1, 1]) == elem_sym(3, [1, 2, 3], 1) * 2
    assert directional_derivative(elem_sym(5, range(1, 6), 1), [1] * 5) == 5
    assert directional_derivative(elem_sym(4, [1, 2, 3, 4], 3), [1] * 4) == elem_sym(4, [1, 2, 3, 4], 2) * 2


def test_directional_derivative_matches_sympy():
    syms = sympy.symbols("y1:5")
    v = [Fraction(2), Fraction(-1, 3), Fraction(0), Fraction(5)]
    p = elem_sym(4, range(1, 5), 3) * elem_sym(4, [1, 3], 1)
    expected = sum(sympy.Rational(c.numerator, c.denominator) * sympy.diff(to_sympy(p, syms), s)
                   for c, s in zip(v, syms))
    assert sympy.expand(to_sympy(directional_derivative(p, v), syms) - expected) == 0


# --- q ratios and evaluation --------------------------------------------------

def test_q_ratio_examples():
    assert q_ratio(2, [1, 2], 1) == RationalFunction(x(2, 1) + x(2, 2))
    assert evaluate(q_ratio(3, [1, 2, 3], 2), [1, 1, 1]) == 1
    q = q_ratio(4, [1, 2, 3], 2)
    assert q == RationalFunction(elem_sym(4, [1, 2, 3], 2), elem_sym(4, [1, 2, 3], 1))
    assert q.numerator == elem_sym(4, [1, 2, 3], 2)


def test_q_ratio_rejects_degree_zero():
    with pytest.raises(DegreeError):
        q_ratio(3, [1, 2], 0)


def test_rational_function_equality_is_by_cross_multiplication():
    a = RationalFunction(x(2, 1) * x(2, 2), x(2, 1))
    assert a == RationalFunction(x(2, 2))
    assert a != RationalFunction(x(2, 1))


def test_evaluate_examples():
    assert evaluate(elem_sym(3, [1, 2, 3], 2), [1, 1, 1]) == 3
    assert evaluate(elem_sym(4, [1, 2, 3, 4], 3), [1, 2, 3, 4]) == 50
    assert evaluate(q_ratio(3, [1, 2, 3], 2), [1, 1, -1]) == -1


def test_evaluate_pole_is_explicit():
    with pytest.raises(PoleError, match="pole"):
        evaluate(q_ratio(2, [1, 2], 2), [1, -1])


def test_evaluate_dimension_mismatch():
    with pytest.raises(DimensionError):
        evaluate(elem_sym(3, [1, 2, 3], 1), [1, 2])


# --- univariate restriction ----------------------------------------------------

def test_restrict_univariate_examples():
    e1, e2 = elem_sym(3, [1, 2, 3], 1), elem_sym(3, [1, 2, 3], 2)
    assert restrict_univariate(e1, [1, 0, 0], [1, 1, 1]).coefficients == (1, 3)
    assert restrict_univariate(e2, [0, 0, 0], [1, 1, 1]).coefficients == (0, 0, 3)
    f = restrict_univariate(e2, [1, 1, -1], [1, 1, 1])
    assert f.coefficients == (-1, 2, 3)
    assert f(-1) == 0 and f(Fraction(1, 3)) == 0


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=2, max_size=6), st.data())
def test_restriction_of_elem_sym_is_real_rooted(point, data):
    n = len(point)
    k = data.draw(st.integers(1, n))
    f = restrict_univariate(elem_sym(n, range(1, n + 1), k), point, [1] * n)
    assert f.degree == k
    assert f.is_real_rooted()


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=3, max_size=3), st.lists(rationals, min_size=3, max_size=3), rationals)
def test_restriction_agrees_with_pointwise_evaluation(point, direction, t):
    p = elem_sym(3, [1, 2, 3], 2) * x(3, 1) + 7
    f = restrict_univariate(p, point, direction)
    assert f(t) == evaluate(p, [a + t * b for a, b in zip(point, direction)])


# --- engine recursion ------------------------------------------------------------

def test_engine_recursion_examples():
    assert check_engine_recursion(3, [1, 2, 3], 2, [1, 1, 1]) is True
    assert check_engine_recursion(4, [1, 2, 3, 4], 3, [1, 2, 3, 4]) is True
    assert check_engine_recursion(3, [1, 2, 3], 2, [1, 1, -2]) in (True, None)


def test_engine_recursion_signals_pole_with_none():
    # x_1 + q_1({2,3}) = 1 + (1 - 2) = 0 at this point
    assert check_engine_recursion(3, [1, 2, 3], 2, [1, 1, -2]) is None


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=2, max_size=5), st.data())
def test_engine_recursion_never_false(point, data):
    n = len(point)
    k = data.draw(st.integers(2, n))
    assert check_engine_recursion(n, range(1, n + 1), k, point) in (True, None)


# --- polynomial arithmetic ---------------------------------------------------------

def test_polynomial_canonical_form():
    p = Polynomial(2, {(1, 0): 2, (0, 1): 0})
    assert p.terms == {(1, 0): Fraction(2)}
    assert (x(2, 1) - x(2, 1)).is_zero()
    assert hash(x(2, 1) + x(2, 2)) == hash(x(2, 2) + x(2, 1))


def test_exact_divide():
    a = elem_sym(3, [1, 2, 3], 2) + x(3, 1)
    b = elem_sym(3, [1, 2, 3], 1) - 3
    assert (a * b).exact_divide(b) == a
    with pytest.raises(ValueError, match="not exact"):
        (a + 1).exact_divide(x(3, 1))

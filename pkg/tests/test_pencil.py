from fractions import Fraction
from math import factorial, perm

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from esp_spectra.errors import DegreeError, DimensionError, InadmissibleBasePoint
from esp_spectra.graph import Vertex, assign_weights, build_G, reduced_laplacian, weighted_laplacian
from esp_spectra.linalg import PsdVerdict, SymMatrix, det_exact, det_polynomial, psd_check_exact
from esp_spectra.pencil import (
    LinearFormsSystem,
    Verdict,
    build_esp_pencil,
    derivative_cone_pencil,
    hkk_product,
    hkk_product_polynomial,
    membership,
    pencil_determinant,
    pencil_eval,
    pencil_polynomial_matrix,
    substitute_linear,
)
from esp_spectra.poly import Polynomial, elem_sym, elem_sym_values, evaluate
from esp_spectra.verify import oracle_membership_esp, root_oracle_membership

SMALL = [(n, k) for n in range(2, 6) for k in range(1, n)]
rationals = st.fractions(min_value=-30, max_value=30, max_denominator=8)


def series_parallel_constant(n, k):
    """Closed form obtained by tracking the factorial multipliers of every series reduction.

    Used only to cross-check the inferred constants; the library never uses it.
    """
    c = factorial(k + 1)
    for i in range(1, k + 1):
        c *= factorial(k - i + 1) ** perm(n, i)
    return c


# --- construction ------------------------------------------------------------------

def test_small_pencil_sizes_and_constants():
    P = build_esp_pencil(3, 1)
    assert (P.n, P.k, P.m) == (3, 1, 4)
    assert P.constant == 2
    P = build_esp_pencil(4, 2)
    assert P.m == 17 and P.constant == 96


@pytest.mark.parametrize("n,k", SMALL + [(6, 1), (6, 3)])
def test_constant_matches_series_parallel_tracking(n, k):
    assert build_esp_pencil(n, k).constant == series_parallel_constant(n, k)


def test_out_of_range():
    with pytest.raises(DegreeError, match="k out of range"):
        build_esp_pencil(2, 2)
    with pytest.raises(DegreeError):
        build_esp_pencil(3, 0)


@pytest.mark.parametrize("n,k", SMALL)
def test_pencil_is_the_reduced_weighted_laplacian(n, k):
    g = build_G(n, k)
    lap = reduced_laplacian(weighted_laplacian(g, assign_weights(g, k)), Vertex.sink())
    symbolic = pencil_polynomial_matrix(build_esp_pencil(n, k))
    expected = lap.polynomial_matrix()
    assert symbolic == expected


@pytest.mark.parametrize("n,k", SMALL)
def test_matrices_are_integral_psd_and_sum_is_pd(n, k):
    P = build_esp_pencil(n, k)
    for B in P.matrices:
        assert B.is_integral()
        assert psd_check_exact(B).is_psd
    total = SymMatrix.linear_combination([1] * n, P.matrices)
    assert psd_check_exact(total).verdict is PsdVerdict.PD
    assert det_exact(total) == P.constant * hkk_product(n, k, [1] * n)


def test_determinant_at_ones_for_n3_k1():
    assert pencil_determinant(build_esp_pencil(3, 1), [1, 1, 1]) == 54


@pytest.mark.parametrize("n,k", [(3, 1), (3, 2)])
def test_symbolic_determinant_identity(n, k):
    P = build_esp_pencil(n, k)
    det = det_polynomial(pencil_polynomial_matrix(P))
    assert det == hkk_product_polynomial(n, k) * P.constant


def test_symbolic_determinant_n3_k1_is_2_e2_e1_squared():
    det = det_polynomial(pencil_polynomial_matrix(build_esp_pencil(3, 1)))
    e1, e2 = elem_sym(3, [1, 2, 3], 1), elem_sym(3, [1, 2, 3], 2)
    assert det == e2 * e1 * e1 * 2


@pytest.mark.parametrize("n,k", SMALL)
def test_degree_bookkeeping(n, k):
    # total degree of the product side must equal the pencil size
    deg = (k + 1) + sum(factorial(s) * (n - s - 1) * perm(n, s) // factorial(s) * (k - s) for s in range(k))
    assert deg == build_esp_pencil(n, k).m


def test_numeric_identity_at_random_points():
    rng = np.random.default_rng(11)
    for n, k in SMALL + [(6, 4)]:
        P = build_esp_pencil(n, k)
        for _ in range(5):
            x = [Fraction(int(v)) for v in rng.integers(-10**6, 10**6, size=n)]
            assert pencil_determinant(P, x) == P.constant * hkk_product(n, k, x)


def test_hkk_product_numeric_matches_polynomial():
    p = hkk_product_polynomial(4, 2)
    x = [Fraction(3), Fraction(-1, 2), Fraction(7), Fraction(2)]
    assert evaluate(p, x) == hkk_product(4, 2, x)


# --- evaluation and membership --------------------------------------------------------

def test_pencil_eval_examples():
    P = build_esp_pencil(3, 1)
    assert pencil_eval(P, [0, 0, 0]) == SymMatrix(4)
    assert pencil_eval(P, [1, 0, 0]) == P.matrices[0]
    with pytest.raises(DimensionError):
        pencil_eval(P, [1, 1])


def test_membership_examples():
    P = build_esp_pencil(3, 1)
    assert membership(P, [1, 1, 1]) is Verdict.INTERIOR
    assert membership(P, [1, 1, Fraction(-2, 5)]).is_member
    assert membership(P, [1, 1, -1]) is Verdict.OUTSIDE
    assert membership(P, [1, 1, Fraction(-1, 2)]) is Verdict.BOUNDARY


@pytest.mark.parametrize("n,k", SMALL)
def test_coordinate_directions_are_members(n, k):
    P = build_esp_pencil(n, k)
    for i in range(n):
        x = [0] * n
        x[i] = 1
        assert membership(P, x).is_member


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_membership_agrees_with_sign_oracle(nk, data):
    n, k = nk
    x = data.draw(st.lists(rationals, min_size=n, max_size=n))
    assert membership(build_esp_pencil(n, k), x) is oracle_membership_esp(n, k, x)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.data(), st.fractions(min_value=Fraction(1, 9), max_value=9))
def test_scale_invariance_and_homogeneity(nk, data, lam):
    n, k = nk
    P = build_esp_pencil(n, k)
    x = data.draw(st.lists(rationals, min_size=n, max_size=n))
    assert membership(P, [lam * v for v in x]) is membership(P, x)
    assert pencil_determinant(P, [lam * v for v in x]) == lam**P.m * pencil_determinant(P, x)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_midpoint_of_members_is_member(nk, data):
    n, k = nk
    P = build_esp_pencil(n, k)
    # shift towards the all-ones direction until both points are members
    pts = []
    for _ in range(2):
        x = data.draw(st.lists(rationals, min_size=n, max_size=n))
        while not membership(P, x).is_member:
            x = [v + 8 for v in x]
        pts.append(x)
    mid = [(a + b) / 2 for a, b in zip(*pts)]
    assert membership(P, mid).is_member


# --- substitution and derivative cones ------------------------------------------------

def test_substitute_identity_and_permutation():
    P = build_esp_pencil(3, 1)
    eye = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    assert substitute_linear(P, eye).matrices == P.matrices
    swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    Q = substitute_linear(P, swap)
    assert Q.matrices == (P.matrices[1], P.matrices[0], P.matrices[2])
    with pytest.raises(DimensionError):
        substitute_linear(P, [[1, 0, 0]])


def test_substitute_zero_row_drops_a_variable():
    P = build_esp_pencil(4, 2)
    T = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1]]
    Q = substitute_linear(P, T)
    x = [Fraction(5), Fraction(-3), Fraction(11), Fraction(2)]
    assert pencil_determinant(Q, x) == pencil_determinant(P, [x[0], x[1], 0, x[3]])


def test_forms_system_normalizes_signs_and_rejects_bad_base_point():
    F = LinearFormsSystem(((1, 0), (0, -1)), (1, 1))
    assert F.coefficients == ((1, 0), (0, 1))
    with pytest.raises(InadmissibleBasePoint, match="e not admissible"):
        LinearFormsSystem(((1, 0), (1, -1)), (1, 1))


@pytest.mark.parametrize("n,k", [(3, 1), (4, 2), (5, 1)])
def test_identity_forms_reproduce_the_esp_pencil(n, k):
    F = LinearFormsSystem(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), (1,) * n)
    D = derivative_cone_pencil(F, n - k - 1)
    assert D.matrices == build_esp_pencil(n, k).matrices


def test_derivative_cone_of_three_forms_in_the_plane():
    F = LinearFormsSystem(((1, 0), (0, 1), (1, 1)), (1, 1))
    P = derivative_cone_pencil(F, 1)
    assert membership(P, [1, 1]) is Verdict.INTERIOR
    rng = np.random.default_rng(5)
    h = F.product_polynomial()
    dh = Polynomial.zero(2)
    for i in range(2):
        dh = dh + h.partial(i + 1)
    for _ in range(200):
        x = [Fraction(int(v), int(d)) for v, d in zip(rng.integers(-20, 20, 2), rng.integers(1, 5, 2))]
        # D_e of the product is proportional to e_2 of the forms rescaled to 1 at e
        ell = [v / w for v, w in zip(F.values_at(x), F.values_at(F.base_point))]
        values = elem_sym_values(ell, 2)
        sign_member = values[1] >= 0 and values[2] >= 0
        assert membership(P, x).is_member == sign_member
        assert membership(P, x) is root_oracle_membership(dh, [1, 1], x)


def test_unscaled_forms_would_give_a_different_cone():
    # (5, -7/4): raw forms (5, -7/4, 13/4) have e_1, e_2 > 0, but the point is outside
    F = LinearFormsSystem(((1, 0), (0, 1), (1, 1)), (1, 1))
    x = [Fraction(5), Fraction(-7, 4)]
    raw = elem_sym_values(F.values_at(x), 2)
    assert raw[1] > 0 and raw[2] > 0
    h = F.product_polynomial()
    dh = h.partial(1) + h.partial(2)
    assert root_oracle_membership(dh, [1, 1], x) is Verdict.OUTSIDE
    assert membership(derivative_cone_pencil(F, 1), x) is Verdict.OUTSIDE


def test_derivative_cone_range_and_pd_at_base_point():
    F = LinearFormsSystem(((2, 1, 0), (0, 1, -3), (1, 1, 1), (-1, 0, 4)), (1, 2, 1))
    for kd in (1, 2, 3):
        P = derivative_cone_pencil(F, kd)
        assert all(B.is_integral() for B in P.matrices)
        assert membership(P, F.base_point) is Verdict.INTERIOR
    with pytest.raises(DegreeError):
        derivative_cone_pencil(F, 4)
    with pytest.raises(DegreeError):
        derivative_cone_pencil(F, 0)

import random
from fractions import Fraction

from hypothesis import given, settings
import hypothesis.strategies as st

from skewspec.charpoly import CharPolynomial, bareiss_determinant, char_poly, determinant
from skewspec.graph import RationalMatrix, block_diagonal

from oracles import leibniz_char_poly
from strategies import matrices, skew_matrices

M = RationalMatrix.from_rows
TRIANGLE = M([[0, 1, 1], [1, 0, 1], [1, 1, 0]])


def test_two_by_two():
    assert char_poly(M([[0, 2], [-3, 0]])).coeffs == (0, 6)


def test_identity():
    assert char_poly(RationalMatrix.identity(3)).coeffs == (-3, 3, -1)


def test_unit_triangle_against_leibniz():
    expected = leibniz_char_poly(TRIANGLE.rows())
    assert expected == [0, -3, -2]
    assert list(char_poly(TRIANGLE).coeffs) == expected


def test_determinant_examples():
    assert determinant(M([[0, 2], [3, 0]])) == -6
    assert determinant(RationalMatrix.identity(4)) == 1
    assert determinant(TRIANGLE) == 2
    assert bareiss_determinant(TRIANGLE) == 2


def test_empty_matrix():
    assert char_poly(RationalMatrix.zeros(0)) == CharPolynomial(0, ())
    assert determinant(RationalMatrix.zeros(0)) == 1


def test_rendering():
    assert str(CharPolynomial.from_coeffs([0, 8, 0])) == "x^3 + 8x"
    assert str(CharPolynomial.from_coeffs([Fraction(-1, 2), 0, -3])) == "x^3 - (1/2)x^2 - 3"
    assert CharPolynomial.from_coeffs([0, 6]).to_json() == {"degree": 2, "coeffs": ["0", "6"]}


@given(matrices(max_n=5))
def test_matches_leibniz(m):
    assert list(char_poly(m).coeffs) == leibniz_char_poly(m.rows())


@given(matrices(max_n=6))
def test_determinant_routes_agree(m):
    assert determinant(m) == bareiss_determinant(m)


@given(matrices(max_n=6), st.randoms(use_true_random=False))
def test_permutation_similarity(m, rnd):
    perm = list(range(m.n))
    rnd.shuffle(perm)
    assert char_poly(m.permuted(perm)) == char_poly(m)


@settings(max_examples=50)
@given(matrices(min_n=2, max_n=2), matrices(min_n=3, max_n=3))
def test_block_diagonal_multiplies(a, b):
    pa = [Fraction(1), *char_poly(a).coeffs]
    pb = [Fraction(1), *char_poly(b).coeffs]
    prod = [Fraction(0)] * 6
    for i, x in enumerate(pa):
        for j, y in enumerate(pb):
            prod[i + j] += x * y
    assert list(char_poly(block_diagonal(a, b)).coeffs) == prod[1:]


@given(skew_matrices(max_n=6))
def test_skew_symmetric_odd_coefficients_vanish(m):
    p = char_poly(m)
    assert all(p.coeff(k) == 0 for k in range(1, m.n + 1, 2))


def test_seeded_determinants():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 6)
        m = M([[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)])
        assert determinant(m) == bareiss_determinant(m)

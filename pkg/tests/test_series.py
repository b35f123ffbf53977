import math
import numpy as np
import pytest
from hardy_devkit import series, parallel
from hardy_devkit.generators import generate_polynomial
from hardy_devkit.series import DirichletPolynomial, HalfPlanePoint

ONE = DirichletPolynomial([1.0])
TWO_TERMS = DirichletPolynomial([1.0, 1.0])
ZETA_4 = DirichletPolynomial([1.0, 1.0, 1.0, 1.0])
SQUARE_2 = DirichletPolynomial.monomial(2)

RANDOM = DirichletPolynomial(
    [0.3 - 0.1j, -0.5 + 0.2j, 0.1j, 0.25, -0.7 - 0.7j, 0.0, 0.05 + 0.4j, -0.2])


def test_evaluate():
    assert series.evaluate(ONE, 0.5 + 3j) == 1
    assert series.evaluate(ONE, 0) == 1
    assert series.evaluate(SQUARE_2, 1) == pytest.approx(0.5, abs=1e-15)
    assert series.evaluate(ZETA_4, 2).real == pytest.approx(205 / 144, abs=1e-15)
    assert series.evaluate(ZETA_4, 2).imag == 0

    # halfplane points and complex numbers agree
    assert series.evaluate(RANDOM, HalfPlanePoint(0.3, -2.0)) == series.evaluate(RANDOM, 0.3 - 2j)

    with pytest.raises(ValueError):
        series.evaluate(ONE, complex(math.inf, 0))


def test_evaluate_naive_sum():
    s = 0.7 + 1.3j
    naive = sum(complex(RANDOM.coefficient(n)) * n ** (-s) for n in range(1, 9))
    assert abs(series.evaluate(RANDOM, s) - naive) < 1e-14


def test_eval_grid():
    t = np.linspace(-20, 20, 41)
    grid = series.eval_grid(RANDOM, 0.25, t)
    assert grid.shape == (41,)
    for (tk, v) in zip(t, grid):
        assert abs(v - series.evaluate(RANDOM, complex(0.25, tk))) < 1e-13

    assert np.all(series.eval_grid(DirichletPolynomial([0.0, 0.0]), 0.0, t) == 0)


def test_eval_grid_threads():
    t = np.linspace(-500, 500, 700001)
    one = series.eval_grid(RANDOM, 0.0, t)
    parallel.set_threads(4)
    try:
        four = series.eval_grid(RANDOM, 0.0, t)
    finally:
        parallel.set_threads(1)
    assert np.array_equal(one, four)


def test_translate_h():
    assert series.translate_h(RANDOM, 0) == RANDOM
    assert series.translate_h(SQUARE_2, 1).coefficient(2) == pytest.approx(0.5, abs=1e-16)
    assert series.translate_h(ONE, 7.0) == ONE

    s = 0.2 + 4j
    moved = series.translate_h(RANDOM, 0.6)
    assert abs(series.evaluate(moved, s) - series.evaluate(RANDOM, s + 0.6)) < 1e-14

    with pytest.raises(ValueError):
        series.translate_h(RANDOM, -0.1)


def test_translate_h_semigroup():
    g = np.random.default_rng(31)
    for sub in range(20):
        f = generate_polynomial({"tag": "random-gaussian", "n_max": 40, "decay": 0.6}, 13, sub)
        k1, k2 = (float(x) for x in g.uniform(0.0, 2.0, size=2))
        both = series.translate_h(series.translate_h(f, k1), k2)
        once = series.translate_h(f, k1 + k2)
        assert np.allclose(both.coeffs, once.coeffs, rtol=1e-13, atol=1e-16)


def test_evaluate_coefficient_bound():
    # |f(s)| <= sum |a_n| n^-sigma
    g = np.random.default_rng(37)
    for sub in range(20):
        f = generate_polynomial({"tag": "random-gaussian", "n_max": 60, "decay": 0.3}, 19, sub)
        s = complex(g.uniform(0.0, 2.0), g.uniform(-100.0, 100.0))
        assert abs(series.evaluate(f, s)) <= f.weighted_l1(s.real) * (1 + 1e-13)


def test_translate_v():
    assert series.translate_v(RANDOM, 0) == RANDOM
    flipped = series.translate_v(SQUARE_2, math.pi / math.log(2))
    assert abs(flipped.coefficient(2) - (-1)) < 1e-15

    moved = series.translate_v(RANDOM, 2.5)
    assert np.allclose(np.abs(moved.coeffs), np.abs(RANDOM.coeffs), rtol=0, atol=1e-15)
    s = 0.4 - 1j
    assert abs(series.evaluate(moved, s) - series.evaluate(RANDOM, s + 2.5j)) < 1e-14


def test_algebra():
    sq = TWO_TERMS * TWO_TERMS
    assert list(sq.coeffs) == [1, 2, 0, 1]
    assert sq == TWO_TERMS.power(2)
    assert TWO_TERMS.power(1) == TWO_TERMS

    s = 0.3 + 2j
    prod = RANDOM * ZETA_4
    assert abs(series.evaluate(prod, s) - series.evaluate(RANDOM, s) * series.evaluate(ZETA_4, s)) < 1e-13
    assert abs(series.evaluate(RANDOM + ZETA_4, s) - series.evaluate(RANDOM, s) - series.evaluate(ZETA_4, s)) < 1e-14
    assert (RANDOM - RANDOM).degree() == 1
    assert (2 * ONE).coefficient(1) == 2
    assert (-ONE).coefficient(1) == -1

    with pytest.raises(ValueError):
        TWO_TERMS.power(0)


def test_construction():
    f = DirichletPolynomial([1.0, 2.0], n_max=5)
    assert f.n_max == 5
    assert f.degree() == 2
    assert f.coefficient(9) == 0
    assert f.truncate(1) == ONE
    assert f.l2_squared(0) == 5
    assert f.weighted_l1(0) == 3
    assert f.weighted_l1(1) == pytest.approx(2.0, abs=1e-15)

    with pytest.raises(ValueError):
        DirichletPolynomial([1.0, 2.0, 3.0], n_max=2)

    with pytest.raises(ValueError, match='finite'):
        DirichletPolynomial([1.0, math.nan])

    with pytest.raises(ValueError):
        DirichletPolynomial([], n_max=0)

    with pytest.raises(ValueError):
        DirichletPolynomial([1.0], n_max=series.MAX_N + 1)

    # values are read only
    with pytest.raises(ValueError):
        f.coeffs[0] = 3


def test_half_plane_point():
    pt = HalfPlanePoint(0.5, 1.0)
    assert pt.s == 0.5 + 1j
    assert pt.in_half_plane(0.25)
    assert not pt.in_half_plane(0.5)
    assert HalfPlanePoint.of(2j).sigma == 0

    with pytest.raises(ValueError):
        HalfPlanePoint(-0.1, 0)

    with pytest.raises(ValueError):
        HalfPlanePoint(0.0, 3.0).require_interior()


def test_codec():
    raw = RANDOM.encode()
    assert DirichletPolynomial.decode(raw) == RANDOM
    assert DirichletPolynomial.decode({"n_max": 2, "coeffs": [[1.0, 0.0], [0.5, -0.5]]}).coefficient(2) == 0.5 - 0.5j
    assert series.log_table(3)[0] == 0

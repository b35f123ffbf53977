import math
import numpy as np
import pytest
from hardy_devkit import riesz
from hardy_devkit.generators import generate_polynomial
from hardy_devkit.riesz import RieszParams
from hardy_devkit.series import DirichletPolynomial, evaluate

ONE = DirichletPolynomial([1.0])
ZETA_4 = DirichletPolynomial([1.0, 1.0, 1.0, 1.0])
GAUSS = generate_polynomial({"tag": "random-gaussian", "n_max": 20, "decay": 0.6}, 5)
SMOOTH = generate_polynomial({"tag": "zeta-truncation", "n_max": 50, "decay": 5.0}, 0)


def test_riesz_weights():
    w = riesz.riesz_weights(4, 1.0, 5)
    assert list(w[[0, 1, 3, 4]]) == [1.0, 0.5, 0.0, 0.0]
    assert w[2] == pytest.approx(1 - math.log(3) / math.log(4), abs=1e-15)

    with pytest.raises(ValueError):
        riesz.riesz_weights(1, 1.0, 5)


def test_riesz_mean():
    value = riesz.riesz_mean(ZETA_4, RieszParams(4, 1.0), 0.0)
    expect = 1 + (1 - math.log(2) / math.log(4)) + (1 - math.log(3) / math.log(4))
    assert value.real == pytest.approx(expect, abs=1e-14)
    assert value.real == pytest.approx(1.70752, abs=1e-5)

    # against independent summation
    for k in (1.0, 2.5):
        params = RieszParams(12, k)
        s = 0.3 + 2j
        direct = sum(GAUSS.coefficient(n) * (1 - math.log(n) / math.log(12)) ** k * n ** (-s)
                     for n in range(1, 12))
        assert abs(riesz.riesz_mean(GAUSS, params, s) - direct) < 1e-13


def test_riesz_params():
    assert RieszParams(10, 2.0).contour_x == 2.0
    assert RieszParams(10, 2.0, contour_x=1.5).contour_x == 1.5
    assert RieszParams(100).log_N == pytest.approx(math.log(100))

    with pytest.raises(ValueError):
        RieszParams(1)

    with pytest.raises(ValueError):
        RieszParams(10, 0.0)

    with pytest.raises(ValueError):
        RieszParams(10, 2.0, y_cutoff=0)


def test_riesz_contour_constant():
    cv = riesz.riesz_contour(ONE, RieszParams(10, 2.0), 0.5)
    assert abs(cv.value - 1) <= cv.bound
    assert cv.bound < 1e-3
    assert cv.nodes >= 64


def test_riesz_contour():
    for (N, k, s) in ((10, 3.5, 1 + 2j), (100, 2.0, 0.3 - 4j), (10, 2.0, 0.8)):
        params = RieszParams(N, k)
        cv = riesz.riesz_contour(GAUSS, params, s)
        assert abs(cv.value - riesz.riesz_mean(GAUSS, params, s)) <= cv.bound


def test_riesz_contour_growth_tail():
    params = RieszParams(10, 3.5)
    plain = riesz.riesz_contour(GAUSS, params, 1.0)
    grown = riesz.riesz_contour(GAUSS, params, 1.0, growth_C=1e-3)
    assert grown.tail_bound <= plain.tail_bound
    assert grown.value == plain.value


def test_riesz_contour_errors():
    with pytest.raises(ValueError, match='k > 1'):
        riesz.riesz_contour(GAUSS, RieszParams(10, 1.0), 1.0)

    with pytest.raises(ValueError):
        riesz.riesz_contour(GAUSS, RieszParams(10, 2.0), 3j)


def test_hankel_check():
    assert riesz.hankel_check(1.0, 3.0, 3.0, 200.0) <= 1e-4
    for u in (-2.0, -1.0, -0.1, 0.0, 0.5, 2.0):
        assert riesz.hankel_check(u, 3.0, 3.0, 200.0) <= 1e-3

    with pytest.raises(ValueError):
        riesz.hankel_check(1.0, 3.0, 0.0)


def test_convergence_study():
    pts = riesz.convergence_study(SMOOTH, 3.0, 0.5, [10 ** 2, 10 ** 3, 10 ** 4, 10 ** 5])
    errors = [p.abs_error for p in pts]
    assert all(b < a for (a, b) in zip(errors, errors[1:]))
    assert errors[-1] <= 1e-2 * SMOOTH.weighted_l1(0)
    for p in pts:
        assert p.abs_error <= p.bound
        assert set(p.row()) == {"N", "k", "sigma", "t", "abs_error", "bound"}

    with pytest.raises(ValueError):
        riesz.convergence_study(SMOOTH, 3.0, 0.5, [1000, 100])

    with pytest.raises(ValueError):
        riesz.convergence_study(SMOOTH, 1.0, 0.5, [100])


def test_riesz_error_bound():
    params = RieszParams(30, 2.0)
    s = 0.4 + 1j
    err = abs(riesz.riesz_mean(GAUSS, params, s) - evaluate(GAUSS, s))
    assert err <= riesz.riesz_error_bound(GAUSS, params, s)
    assert riesz.riesz_polynomial(ONE, params) == ONE
    assert np.all(riesz.riesz_polynomial(GAUSS, RieszParams(5, 2.0)).coeffs[4:] == 0)


def test_riesz_mean_random_k1():
    g = np.random.default_rng(41)
    for sub in range(20):
        f = generate_polynomial({"tag": "random-gaussian", "n_max": 30, "decay": 0.5}, 6, sub)
        N = int(g.integers(2, 40))
        s = complex(g.uniform(0.0, 2.0), g.uniform(-20.0, 20.0))
        direct = sum(f.coefficient(n) * (1 - math.log(n) / math.log(N)) * n ** (-s) for n in range(1, min(N, 31)))
        assert abs(riesz.riesz_mean(f, RieszParams(N, 1.0), s) - direct) < 1e-12


def test_riesz_error_grows_with_k():
    # positive coefficients at real s: every weight shrinks as k grows
    for N in (10, 100, 1000):
        errors = [abs(riesz.riesz_mean(SMOOTH, RieszParams(N, k), 0.5) - evaluate(SMOOTH, 0.5))
                  for k in (1.0, 1.5, 2.0, 3.0, 5.0)]
        assert all(b > a for (a, b) in zip(errors, errors[1:]))

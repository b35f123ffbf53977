import math
import numpy as np
import pytest
from hardy_devkit import means, parallel
from hardy_devkit.characters import Character, sample_haar, vertical_limit
from hardy_devkit.errors import UnderResolvedGrid
from hardy_devkit.generators import generate_polynomial
from hardy_devkit.means import MeanEstimate
from hardy_devkit.report import PASS
from hardy_devkit.series import DirichletPolynomial

ONE = DirichletPolynomial([1.0])
TWO_TERMS = DirichletPolynomial([1.0, 1.0])
SQUARE_2 = DirichletPolynomial.monomial(2)
GAUSS = generate_polynomial({"tag": "random-gaussian", "n_max": 20, "decay": 0.6}, 11)
SIGMAS = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0]


def test_exact_mean_2():
    assert means.exact_mean_2(ONE, 0.3).value == 1
    assert means.exact_mean_2(TWO_TERMS, 0).value == 2
    assert means.exact_mean_2(TWO_TERMS, 0.5).value == pytest.approx(1.5, abs=1e-15)
    est = means.exact_mean_2(GAUSS, 0.0)
    assert est.method == 'exact2'
    assert est.horizon == math.inf

    with pytest.raises(ValueError):
        means.exact_mean_2(ONE, -1)


def test_exact_mean_even():
    assert means.exact_mean_even(TWO_TERMS, 0.0, 4).value == 6
    assert means.exact_mean_even(TWO_TERMS, 0.0, 2).value == 2
    # |1 + z|^6 over the circle: sum of binomial(3, k)^2
    assert means.exact_mean_even(TWO_TERMS, 0.0, 6).value == 20

    with pytest.raises(ValueError):
        means.exact_mean_even(TWO_TERMS, 0.0, 3)


def test_exact_finite_mean_2():
    assert means.exact_finite_mean_2(ONE, 0.0, 5.0) == pytest.approx(1.0, abs=1e-15)
    for T in (0.5, 3.0, 100.0):
        x = T * math.log(2)
        assert means.exact_finite_mean_2(TWO_TERMS, 0.0, T) == pytest.approx(2 + 2 * math.sin(x) / x, abs=1e-14)

    for T in (10.0, 1000.0):
        gap = abs(means.exact_finite_mean_2(GAUSS, 0.0, T) - means.exact_mean_2(GAUSS, 0.0).value)
        assert gap <= means.finite_mean_gap_bound(GAUSS, 0.0, T)

    with pytest.raises(ValueError):
        means.exact_finite_mean_2(ONE, 0.0, 0.0)


def test_pair_sums_large_support():
    f = generate_polynomial({"tag": "random-gaussian", "n_max": 5000, "decay": 0.6}, 2)
    assert np.count_nonzero(f.coeffs) == 5000
    T = 10.0
    gap = abs(means.exact_finite_mean_2(f, 0.0, T) - means.exact_mean_2(f, 0.0).value)
    assert gap <= means.finite_mean_gap_bound(f, 0.0, T)

    # support of 1 and 2^12: the cross terms are a cosine
    c = np.zeros(4096)
    c[[0, 4095]] = 1.0
    two = DirichletPolynomial(c)
    x = 3.0 * math.log(4096)
    assert means.exact_finite_mean_2(two, 0.0, 3.0) == pytest.approx(2 + 2 * math.sin(x) / x, abs=1e-14)


def test_time_mean_constant():
    c = DirichletPolynomial([2.0])
    assert means.time_mean(c, 0.0, 2, 3.0, 4).value == pytest.approx(4.0, abs=1e-14)
    assert means.time_mean(c, 0.0, 1, 3.0, 4).value == pytest.approx(2.0, abs=1e-14)
    assert means.time_mean(c, 0.0, 3.5, 3.0, 4).value == pytest.approx(2 ** 3.5, rel=1e-14)


def test_time_mean_quadrature_oracle():
    for (sigma, T) in ((0.0, 50.0), (0.3, 200.0), (1.0, 7.0)):
        steps = means.resolved_steps(GAUSS, sigma, T, 2, rel_tol=1e-9)
        est = means.time_mean(GAUSS, sigma, 2, T, steps)
        exact = means.exact_finite_mean_2(GAUSS, sigma, T)
        assert abs(est.value - exact) <= est.stderr
        assert abs(est.value - exact) <= 1e-8 * exact
        assert est.method == 'time-average'
        assert est.horizon == T


def test_time_mean_p4():
    T = 1e4
    est = means.time_mean(TWO_TERMS, 0.0, 4, T, means.resolved_steps(TWO_TERMS, 0.0, T, 4))
    assert abs(est.value - 6) <= 0.01


def test_time_mean_under_resolved():
    with pytest.raises(UnderResolvedGrid):
        means.time_mean(GAUSS, 0.0, 2, 100.0, 10)

    with pytest.raises(ValueError):
        means.time_mean(GAUSS, 0.0, 0.5, 100.0, 10 ** 5)

    assert means.min_steps(10.0, 1) == 2
    assert means.min_steps(10.0, 2) == math.ceil(200 * math.log(2) / math.pi)


def test_mc_torus_mean():
    est = means.mc_torus_mean(ONE, 2, 1000, 3)
    assert est.value == 1
    assert est.stderr == 0

    est = means.mc_torus_mean(GAUSS, 2, 20000, 5)
    assert abs(est.value - GAUSS.l2_squared(0)) <= 4 * est.stderr
    assert est.method == 'monte-carlo'
    assert est.horizon == 20000

    est = means.mc_torus_mean(TWO_TERMS, 1, 20000, 5)
    assert abs(est.value - 4 / math.pi) <= 4 * est.stderr

    with pytest.raises(ValueError):
        means.mc_torus_mean(GAUSS, 2, 99, 5)

    with pytest.raises(ValueError):
        means.mc_torus_mean(GAUSS, 2, 1000, 5, sigma=-0.1)


def test_mc_torus_mean_sigma():
    est = means.mc_torus_mean(TWO_TERMS, 2, 20000, 5, sigma=0.5)
    assert est.sigma == 0.5
    assert abs(est.value - 1.5) <= 4 * est.stderr

    # the Monte Carlo route of the p-mean dispatcher keeps sigma
    est = means._mean_at(TWO_TERMS, 0.5, 1, samples=1000, seed=3)
    assert est.method == 'monte-carlo'
    assert est.sigma == 0.5
    assert est.row()["sigma"] == 0.5


def test_mc_torus_mean_large_support():
    f = generate_polynomial({"tag": "random-gaussian", "n_max": 10 ** 5, "decay": 0.6}, 4)
    est = means.mc_torus_mean(f, 2, 200, 9)
    assert abs(est.value - f.l2_squared(0)) <= 5 * est.stderr


def test_mc_torus_mean_threads():
    one = means.mc_torus_mean(GAUSS, 1, 3 * means.MC_BLOCK + 17, 42)
    parallel.set_threads(3)
    try:
        three = means.mc_torus_mean(GAUSS, 1, 3 * means.MC_BLOCK + 17, 42)
    finally:
        parallel.set_threads(1)
    assert one == three


def test_mean_estimate():
    est = MeanEstimate(16.0, 4.0, 0.0, 'exact-even', math.inf)
    assert est.root().value == pytest.approx(2.0, abs=1e-15)
    assert not est.root().power
    assert est.log_mean()[0] == pytest.approx(math.log(2), abs=1e-15)
    est = MeanEstimate(4.0, 2.0, 0.0, 'monte-carlo', 100, stderr=0.4)
    assert est.root().stderr == pytest.approx(0.1, abs=1e-15)
    assert set(est.row()) == {"method", "p", "sigma", "T_or_samples", "value", "stderr"}

    with pytest.raises(ValueError):
        MeanEstimate(1.0, 2.0, 0.0, 'guess', 1)

    with pytest.raises(ValueError):
        MeanEstimate(-1.0, 2.0, 0.0, 'exact2', 1)


def test_estimate_Cf():
    chi = Character.trivial(1)
    cert = means.estimate_Cf(ONE, chi, 2, 10.0, 0.1)
    assert cert.C == pytest.approx(10 / 11, abs=1e-12)
    assert cert.argmax_T == pytest.approx(10.0, abs=1e-12)
    assert cert.bound(3.0, 1.0) == pytest.approx(4 * cert.C)
    assert cert.scaled(4.0).C == 4 * cert.C

    chi = sample_haar(8, 1)
    step = math.pi / (20 * math.log(20))
    cert = means.estimate_Cf(GAUSS, chi, 2, 50.0, step)
    assert cert.chi_ref["J"] == 8
    for T in (0.37, 5.5, 23.1, 49.9):
        up, down = means.exact_cumulative_2(GAUSS, chi, T)
        assert max(up, down) <= cert.bound(T, 1.1)

    with pytest.raises(UnderResolvedGrid):
        means.estimate_Cf(GAUSS, chi, 2, 50.0, 1.0)

    with pytest.raises(ValueError):
        means.estimate_Cf(GAUSS, chi, 2, 0.5, step)

    with pytest.raises(ValueError):
        means.estimate_Cf(DirichletPolynomial([0.0]), chi, 2, 5.0, 0.1)

    with pytest.raises(ValueError):
        cert.safe_C(0.5)


def test_exact_cumulative_2():
    up, down = means.exact_cumulative_2(ONE, Character.trivial(1), 7.5)
    assert up == pytest.approx(7.5, abs=1e-14)
    assert down == pytest.approx(7.5, abs=1e-14)

    # against a fine time average of the flow
    chi = sample_haar(8, 2)
    g = vertical_limit(GAUSS, chi)
    T = 20.0
    up, down = means.exact_cumulative_2(GAUSS, chi, T)
    both = means.exact_finite_mean_2(g, 0.0, T) * 2 * T
    assert up + down == pytest.approx(both, rel=1e-12)


def test_convexity_report():
    for p in (2, 4):
        rep = means.convexity_report(GAUSS, p, SIGMAS)
        assert rep.passed
        assert rep.method in ('exact2', 'exact-even')
        assert all(d <= 1e-10 for d in rep.first_diffs)
        assert len(rep.defects) == len(SIGMAS) - 2

    rep = means.convexity_report(GAUSS, 1, SIGMAS, samples=5000, seed=3)
    assert rep.method == 'monte-carlo'
    assert rep.passed

    with pytest.raises(ValueError):
        means.convexity_report(GAUSS, 2, [0.1, 0.2])

    with pytest.raises(ValueError):
        means.convexity_report(GAUSS, 2, [0.1, 0.3, 0.2])


def test_translate_defect():
    assert means.translate_defect(ONE, 2, 0.5) == 0
    assert means.translate_defect(SQUARE_2, 2, 1.0) == pytest.approx(0.5, abs=1e-15)

    values = [means.translate_defect(GAUSS, 2, 2.0 ** -k) for k in range(1, 9)]
    assert all(b < a for (a, b) in zip(values, values[1:]))
    bound = 2.0 ** -8 * math.fsum((np.abs(GAUSS.coeffs) * GAUSS.log_n).tolist())
    assert values[-1] <= bound

    with pytest.raises(ValueError):
        means.translate_defect(GAUSS, 2, 0.0)


def test_norm_estimate():
    ne = means.norm_estimate(GAUSS, 2, SIGMAS)
    assert ne.monotone
    assert ne.sigma == 0.1
    assert ne.value == pytest.approx(math.sqrt(GAUSS.l2_squared(0.1)), rel=1e-14)
    assert ne.value <= math.sqrt(GAUSS.l2_squared(0.0))


def test_supsup_and_averages():
    sup = means.supsup_constant(ONE, 2, [0.1, 0.5], [1.0, 10.0])
    assert sup.C_hat == pytest.approx(1.0, abs=1e-14)
    assert len(sup.table) == 4

    sup = means.supsup_constant(TWO_TERMS, 2, [0.1, 0.5], [1.0, 10.0])
    check = means.avg_estimate_check(TWO_TERMS, 2, 0.5, 0.1 + 0.2j, 10.0, sup.C_hat)
    assert check.status == PASS
    assert check.tolerance == pytest.approx(0.05 * check.bound)

    with pytest.raises(ValueError):
        means.avg_estimate_check(TWO_TERMS, 2, 0.5, 0.2j, 10.0, sup.C_hat)

    assert means.pest_bound(1.0, 1.0, 2) == 4.0
    assert abs(complex(1 + 2 ** -0.5)) ** 2 <= means.pest_bound(sup.C_hat, 0.5, 2)


def test_helson_lower_bound():
    assert means.helson_lower_bound(TWO_TERMS) == pytest.approx(math.sqrt(1.5), abs=1e-15)
    assert means.helson_lower_bound(TWO_TERMS) < 4 / math.pi
    assert means.helson_lower_bound(ONE) == 1

'''
Verification suites.

Each suite turns one family of statements about H^p spaces of Dirichlet
series into report rows:

    carlson   sigma -> M_p(sigma, f) decreasing and log-convex, translates, norm
    ergodic   time averages along the flow against torus means and closed forms
    growth    flow growth certificates C_f(chi) against exact cumulative integrals
    helson    sqrt(sum |a_n|^2 / d(n)) <= ||f||_1
    riesz     Riesz means, their contour form and Hankel's formula
    poisson   Poisson extension of boundary values and the growth bounds
    fatou     boundary limits sigma -> 0
    norms     ||f||_p from boundary values and from small sigma

Every row is a BoundCheck, so its status can be recomputed from the file.
'''
import logging
import math
import time
from typing import Callable, Dict, List
import numpy as np
from .arith import prime_count_needed_upto, divisor_count, helson_product_check
from .characters import Character, sample_haar, char_eval, kronecker_twist, vertical_limit, boundary_eval
from .config import ExperimentConfig, SUITES
from .digest import inputs_digest
from .errors import UnknownSuite
from .generators import generate_polynomial, polynomial_from_config
from .means import (EXACT_TOLERANCE, exact_mean_2, exact_mean_even, exact_finite_mean_2, finite_mean_gap_bound,
                    time_mean, resolved_steps, mc_torus_mean, estimate_Cf, exact_cumulative_2, convexity_report,
                    translate_defect, translate_defect_estimate, norm_estimate, supsup_constant, avg_estimate_check, pest_bound,
                    helson_lower_bound)
from .poisson import (poisson_extend, default_spec, kernel_mass_check, fatou_trace, fatou_gap_bound,
                      check_pointwise_bound, check_supsup_bound, poisson_of_monomial, partial_sum_diagnostic,
                      monomial_eval, character_point)
from .report import BoundCheck, VerificationReport
from .riesz import RieszParams, riesz_mean, riesz_contour, hankel_check, convergence_study
from .series import DirichletPolynomial, evaluate
from . import parallel, rng

logger = logging.getLogger(__name__)

HANKEL_U = (-2.0, -1.0, -0.1, 0.0, 0.5, 1.0, 2.0)
HANKEL_TOL = 1e-3
POISSON_POINTS = (complex(0.8, 0.3), complex(0.2, 0.0), complex(0.1, 5.0))
POISSON_ABS_TOL = 1e-3
MONOMIAL_POINTS = (complex(0.8, 0.3), complex(0.6, 0.0), complex(1.5, -7.0))
SUPSUP_SIGMAS = (0.05, 0.1, 0.2, 0.5, 1.0, 2.0)
FATOU_SIGMAS = (0.1, 0.01, 1e-3, 1e-4)
CONTOUR_INSTANCES = 20
POINTWISE_SAMPLES = 100
CERT_T_MAX = 1000.0
ORACLE_REL_TOL = 1e-8

# Public operations each suite calls, by module.
COVERAGE = {
    'carlson': (
        'means.convexity_report', 'means.translate_defect', 'means.norm_estimate', 'means.supsup_constant',
        'means.avg_estimate_check', 'means.pest_bound', 'means.exact_mean_even', 'means.mc_torus_mean',
        'series.translate_h', 'series.translate_v', 'series.evaluate',
    ),
    'ergodic': (
        'characters.sample_haar', 'characters.char_eval', 'characters.kronecker_twist',
        'characters.vertical_limit', 'characters.boundary_eval', 'means.time_mean',
        'means.exact_finite_mean_2', 'means.exact_mean_2', 'means.mc_torus_mean', 'means.finite_mean_gap_bound',
        'means.resolved_steps', 'series.evaluate', 'arith.bohr_lift', 'arith.sieve_primes',
    ),
    'growth': (
        'means.estimate_Cf', 'means.exact_cumulative_2', 'characters.sample_haar',
    ),
    'helson': (
        'arith.divisor_count', 'arith.helson_product_check', 'means.mc_torus_mean', 'means.helson_lower_bound',
    ),
    'riesz': (
        'riesz.riesz_mean', 'riesz.riesz_contour', 'riesz.hankel_check', 'riesz.convergence_study',
        'generators.generate_polynomial',
    ),
    'poisson': (
        'poisson.poisson_extend', 'poisson.check_pointwise_bound', 'poisson.check_supsup_bound',
        'poisson.poisson_of_monomial', 'poisson.partial_sum_diagnostic', 'means.estimate_Cf',
        'characters.kronecker_twist', 'poisson.monomial_eval', 'poisson.character_point',
    ),
    'fatou': (
        'poisson.fatou_trace', 'characters.boundary_eval', 'characters.kronecker_twist', 'series.evaluate',
    ),
    'norms': (
        'means.exact_finite_mean_2', 'means.exact_mean_2', 'means.norm_estimate', 'means.time_mean',
        'means.mc_torus_mean', 'means.exact_mean_even',
    ),
}


def _p(p: float) -> str:
    return '{:g}'.format(p)


def _poly_id(f: DirichletPolynomial) -> str:
    return inputs_digest(f.encode())


def _cx(s: complex) -> List[float]:
    return [complex(s).real, complex(s).imag]


def _instances(cfg: ExperimentConfig, count: int = None) -> List[DirichletPolynomial]:
    # a coeffs config is a single instance
    if 'coeffs' in cfg.polynomial:
        return [polynomial_from_config(cfg.polynomial, cfg.seed)]
    n = cfg.instances if count is None else count
    return [polynomial_from_config(cfg.polynomial, cfg.seed, k) for k in range(n)]


def _character(cfg: ExperimentConfig, f: DirichletPolynomial, k: int) -> Character:
    J = max(1, prime_count_needed_upto(f.degree()))
    return sample_haar(J, rng.derived_seed(cfg.seed, 'character', k))


def _cert_step(f: DirichletPolynomial) -> float:
    return math.pi / (20 * math.log(max(f.degree(), 2)))


def _cert_T(cfg: ExperimentConfig) -> float:
    return max(1.0, min(cfg.T, CERT_T_MAX))


def _band(*stderrs: float) -> float:
    return 4 * math.sqrt(sum(x * x for x in stderrs))


def suite_carlson(cfg: ExperimentConfig, report: VerificationReport):
    f = _instances(cfg)[0]
    fid = _poly_id(f)
    l1_log = math.fsum((np.abs(f.coeffs) * f.log_n).tolist())
    for p in cfg.p_values:
        base = {"f": fid, "p": p, "seed": cfg.seed, "samples": cfg.mc_samples}
        conv = convexity_report(f, p, cfg.sigma_grid, samples=cfg.mc_samples, seed=cfg.seed)
        for (i, (d, tol)) in enumerate(zip(conv.first_diffs, conv.diff_tolerances)):
            report.add('carlson', 'decreasing.p{}.{}'.format(_p(p), i),
                       dict(base, sigma=conv.sigmas[i:i + 2]), BoundCheck(d, tol, tol))
        for (i, (d, tol)) in enumerate(zip(conv.defects, conv.defect_tolerances)):
            report.add('carlson', 'convex.p{}.{}'.format(_p(p), i),
                       dict(base, sigma=conv.sigmas[i:i + 3]), BoundCheck(d, tol, tol))

        sigs = [2.0 ** -j for j in range(1, 7)]
        ds = [translate_defect_estimate(f, p, s, cfg.mc_samples, cfg.seed) for s in sigs]
        for j in range(len(ds) - 1):
            tol = max(_band(ds[j].stderr, ds[j + 1].stderr), EXACT_TOLERANCE)
            report.add('carlson', 'translate_defect.p{}.{}'.format(_p(p), j), dict(base, sigma=sigs[j:j + 2]),
                       BoundCheck(ds[j + 1].value - ds[j].value, tol, tol))
        report.add('carlson', 'translate_defect.p{}.limit'.format(_p(p)), dict(base, sigma=sigs[-1]),
                   BoundCheck(translate_defect(f, p, sigs[-1], cfg.mc_samples, cfg.seed), sigs[-1] * l1_log,
                              max(_band(ds[-1].stderr), EXACT_TOLERANCE)))

        ne = norm_estimate(f, p, cfg.sigma_grid, samples=cfg.mc_samples, seed=cfg.seed)
        rise = max(b - a for (a, b) in zip(ne.means, ne.means[1:]))
        tol = max(_band(ne.stderr, ne.stderr), EXACT_TOLERANCE)
        report.add('carlson', 'norm.p{}.monotone'.format(_p(p)), dict(base, sigma=cfg.sigma_grid),
                   BoundCheck(rise, tol, tol))

        sup = supsup_constant(f, p, cfg.sigma_grid, cfg.T_grid)
        sigma = cfg.sigma_grid[len(cfg.sigma_grid) // 2]
        T = cfg.T_grid[min(1, len(cfg.T_grid) - 1)]
        for z in (complex(0.1, 0.2), complex(0.5, -1.0)):
            report.add('carlson', 'avg_estimate.p{}.{}'.format(_p(p), _cx(z)),
                       dict(base, sigma=sigma, z=_cx(z), T=T, C=sup.C_hat),
                       avg_estimate_check(f, p, sigma, z, T, sup.C_hat))
        for s in (complex(cfg.sigma_grid[0], 0.0), complex(sigma, 5.0), complex(cfg.sigma_grid[-1], 50.0)):
            bound = pest_bound(sup.C_hat, s, p)
            report.add('carlson', 'pointwise.p{}.{}'.format(_p(p), _cx(s)), dict(base, s=_cx(s), C=sup.C_hat),
                       BoundCheck(abs(evaluate(f, s)) ** p, bound, 0.05 * bound))


def suite_ergodic(cfg: ExperimentConfig, report: VerificationReport):
    T = cfg.T
    for (k, f) in enumerate(_instances(cfg)):
        chi = _character(cfg, f, k)
        g = vertical_limit(f, chi)
        base = {"f": _poly_id(f), "chi": inputs_digest(chi.to_dict()), "T": T}
        l2 = exact_mean_2(f, 0.0).value

        tm = time_mean(g, 0.0, 2, T, resolved_steps(g, 0.0, T, 2))
        gap = finite_mean_gap_bound(f, 0.0, T)
        report.add('ergodic', 'norm_identity.p2.{}'.format(k), base,
                   BoundCheck(abs(tm.value - l2), gap + tm.stderr))
        report.add('ergodic', 'norm_identity.p2.relative.{}'.format(k), base,
                   BoundCheck(abs(tm.value - l2) / l2, 0.05))

        # chi(n) along the flow, n <= N
        taus = rng.stream(cfg.seed, 'points', k).uniform(-T, T, size=5)
        worst = 0.0
        for (i, tau) in enumerate(taus):
            tw = kronecker_twist(chi, float(tau))
            for n in range(1, f.degree() + 1):
                lhs = char_eval(tw, n)
                rhs = char_eval(chi, n) * complex(math.cos(tau * math.log(n)), -math.sin(tau * math.log(n)))
                worst = max(worst, abs(lhs - rhs))
            wl = abs(boundary_eval(f, tw) - evaluate(g, complex(0.0, float(tau))))
            report.add('ergodic', 'boundary_identity.{}.{}'.format(k, i), dict(base, tau=float(tau)),
                       BoundCheck(wl, 1e-10 * max(1.0, f.weighted_l1(0.0))))
        report.add('ergodic', 'flow_identity.{}'.format(k), base, BoundCheck(worst, 1e-10))

    # Simpson against the closed-form finite mean at random (f, chi, sigma, T)
    fs = _instances(cfg, cfg.oracle_instances)
    pg = rng.stream(cfg.seed, 'points', 5000)
    T_top = min(cfg.T, cfg.oracle_T_max)
    for k in range(cfg.oracle_instances):
        f = fs[k % len(fs)]
        chi = _character(cfg, f, k)
        g = vertical_limit(f, chi)
        sigma = float(pg.random())
        Tk = T_top * (1.0 - float(pg.random()))
        tm = time_mean(g, sigma, 2, Tk, resolved_steps(g, sigma, Tk, 2, rel_tol=ORACLE_REL_TOL / 10))
        ex = exact_finite_mean_2(g, sigma, Tk)
        base = {"f": _poly_id(f), "chi": inputs_digest(chi.to_dict()), "sigma": sigma, "T": Tk}
        report.add('ergodic', 'quadrature.p2.{}'.format(k), base, BoundCheck(abs(tm.value - ex), tm.stderr))
        report.add('ergodic', 'quadrature.p2.relative.{}'.format(k), base,
                   BoundCheck(abs(tm.value - ex) / ex, ORACLE_REL_TOL))

    for (k, f) in enumerate(_instances(cfg, cfg.mc_instances)):
        l2 = exact_mean_2(f, 0.0).value
        mc_seed = rng.derived_seed(cfg.seed, 'monte-carlo', k)
        mc = mc_torus_mean(f, 2, cfg.mc_samples, mc_seed)
        report.add('ergodic', 'monte_carlo.p2.{}'.format(k),
                   {"f": _poly_id(f), "samples": cfg.mc_samples, "seed": mc_seed},
                   BoundCheck(abs(mc.value - l2), 4 * mc.stderr, 2 * mc.stderr))

    two = DirichletPolynomial([1.0, 1.0])
    tm4 = time_mean(two, 0.0, 4, 1e4, resolved_steps(two, 0.0, 1e4, 4))
    report.add('ergodic', 'norm_identity.p4.closed_form', {"f": _poly_id(two), "T": 1e4},
               BoundCheck(abs(tm4.value - 6.0), 0.01))


def suite_growth(cfg: ExperimentConfig, report: VerificationReport):
    for (k, f) in enumerate(_instances(cfg)):
        chi = _character(cfg, f, k)
        cert = estimate_Cf(f, chi, 2, _cert_T(cfg), _cert_step(f))
        base = {"f": _poly_id(f), "chi": inputs_digest(chi.to_dict())}
        offgrid = rng.stream(cfg.seed, 'points', 1000 + k).uniform(0, cert.T_max, size=20)
        for (i, Tk) in enumerate(offgrid):
            up, down = exact_cumulative_2(f, chi, float(Tk))
            b = cert.C * (1 + Tk)
            report.add('growth', 'certificate.{}.{}'.format(k, i), dict(base, T=float(Tk), C=cert.C),
                       BoundCheck(max(up, down), b, b * (cfg.safety - 1)))


def suite_helson(cfg: ExperimentConfig, report: VerificationReport):
    two = DirichletPolynomial([1.0, 1.0])
    report.add('helson', 'closed_form', {"f": _poly_id(two)},
               BoundCheck(helson_lower_bound(two), 4 / math.pi))
    by_hand = math.sqrt(math.fsum(abs(two.coefficient(n)) ** 2 / divisor_count(n) for n in (1, 2)))
    report.add('helson', 'closed_form.divisors', {"f": _poly_id(two)},
               BoundCheck.equality(helson_lower_bound(two), by_hand, 1e-15))
    mc = mc_torus_mean(two, 1, cfg.mc_samples, cfg.seed)
    report.add('helson', 'mc_closed_form', {"f": _poly_id(two), "seed": cfg.seed, "samples": cfg.mc_samples},
               BoundCheck(abs(mc.value - 4 / math.pi), 4 * mc.stderr, 2 * mc.stderr))

    for (k, f) in enumerate(_instances(cfg, cfg.mc_instances)):
        seed = rng.derived_seed(cfg.seed, 'monte-carlo', k)
        mc = mc_torus_mean(f, 1, cfg.mc_samples, seed)
        report.add('helson', 'inequality.{}'.format(k), {"f": _poly_id(f), "seed": seed, "samples": cfg.mc_samples},
                   BoundCheck(helson_lower_bound(f), mc.value + 4 * mc.stderr, 2 * mc.stderr))

    n_max = 10 ** 5
    for sigma in (0.75, 1.0):
        hp = helson_product_check(sigma, n_max)
        drop = max([a - b for (a, b) in zip(hp.partial_sums, hp.partial_sums[1:])] + [0.0])
        report.add('helson', 'product.monotone.{}'.format(sigma), {"sigma": sigma, "n_max": n_max},
                   BoundCheck(drop, 0.0))
        report.add('helson', 'product.bounded.{}'.format(sigma), {"sigma": sigma, "n_max": n_max},
                   BoundCheck(max(hp.partial_sums), hp.product, 1e-12 * hp.product))


def suite_riesz(cfg: ExperimentConfig, report: VerificationReport):
    rz = cfg.riesz
    fz = generate_polynomial({"tag": "zeta-truncation", "n_max": 50, "decay": 5.0}, cfg.seed)
    pts = convergence_study(fz, rz['k'], 0.5, rz['N_list'])
    base = {"f": _poly_id(fz), "k": rz['k'], "s": 0.5}
    for (a, b) in zip(pts, pts[1:]):
        report.add('riesz', 'convergence.decrease.{}'.format(b.N), dict(base, N=[a.N, b.N]),
                   BoundCheck(b.abs_error - a.abs_error, 0.0))
    for pt in pts:
        report.add('riesz', 'convergence.bound.{}'.format(pt.N), dict(base, N=pt.N),
                   BoundCheck(pt.abs_error, pt.bound, 1e-12 * pt.bound))
    report.add('riesz', 'convergence.final', dict(base, N=pts[-1].N),
               BoundCheck(pts[-1].abs_error, 1e-2 * fz.weighted_l1(0.0)))

    fs = _instances(cfg)
    g = rng.stream(cfg.seed, 'points', 2000)
    for j in range(CONTOUR_INSTANCES):
        f = fs[j % len(fs)].truncate(50)
        N = rz['contour_N'][j % len(rz['contour_N'])]
        k = rz['contour_k'][(j // len(rz['contour_N'])) % len(rz['contour_k'])]
        s = complex(g.uniform(0.1, 2.0), g.uniform(-10.0, 10.0))
        params = RieszParams(N, k, y_cutoff=rz['cutoff'])
        cv = riesz_contour(f, params, s)
        rm = riesz_mean(f, params, s)
        report.add('riesz', 'contour.{}'.format(j), {"f": _poly_id(f), "N": N, "k": k, "s": _cx(s)},
                   BoundCheck(abs(cv.value - rm), cv.bound))

    for u in HANKEL_U:
        r = hankel_check(u, 3.0, 3.0, rz['cutoff'])
        report.add('riesz', 'hankel.{}'.format(u), {"u": u, "k": 3.0, "x": 3.0, "cutoff": rz['cutoff']},
                   BoundCheck(r, HANKEL_TOL))


def suite_poisson(cfg: ExperimentConfig, report: VerificationReport):
    for (k, f) in enumerate(_instances(cfg)):
        chi = _character(cfg, f, k)
        g = vertical_limit(f, chi)
        cert = estimate_Cf(f, chi, 2, _cert_T(cfg), _cert_step(f))
        base = {"f": _poly_id(f), "chi": inputs_digest(chi.to_dict()), "C": cert.C, "safety": cfg.safety}

        values = {}
        for s in POISSON_POINTS:
            pv = poisson_extend(f, chi, s, cert, safety=cfg.safety)
            values[s] = pv
            d = abs(pv.value - evaluate(g, s))
            report.add('poisson', 'extend.{}.{}'.format(_cx(s), k), dict(base, s=_cx(s)), BoundCheck(d, pv.bound))
            report.add('poisson', 'extend_abs.{}.{}'.format(_cx(s), k), dict(base, s=_cx(s)),
                       BoundCheck(d, POISSON_ABS_TOL))
            spec = default_spec(f, s, cert.safe_C(cfg.safety), cert.p)
            report.add('poisson', 'kernel_mass.{}.{}'.format(_cx(s), k), dict(base, s=_cx(s), W=spec.trunc_T),
                       BoundCheck(kernel_mass_check(s.real, s.imag, spec), 1e-10))

        s = POISSON_POINTS[-1]
        tw = kronecker_twist(chi, s.imag)
        cert_tw = estimate_Cf(f, tw, 2, _cert_T(cfg), _cert_step(f))
        pv_tw = poisson_extend(f, tw, complex(s.real, 0.0), cert_tw, safety=cfg.safety)
        report.add('poisson', 'equivariance.{}'.format(k), dict(base, s=_cx(s)),
                   BoundCheck(abs(pv_tw.value - values[s].value), pv_tw.bound + values[s].bound))

        pg = rng.stream(cfg.seed, 'points', 3000 + k)
        points = [complex(2.0 * (1.0 - pg.random()), pg.uniform(-50.0, 50.0)) for _ in range(POINTWISE_SAMPLES)]
        checks = check_pointwise_bound(f, chi, 2, cert, points, cfg.safety)
        worst = max(c.measured / c.bound for (_, c) in checks)
        report.add('poisson', 'pointwise.{}'.format(k), dict(base, points=POINTWISE_SAMPLES),
                   BoundCheck(worst, 1.0, cfg.safety - 1))

        sc = check_supsup_bound(f, chi, 2, cert, SUPSUP_SIGMAS, cfg.T_grid, cfg.safety)
        report.add('poisson', 'supsup.{}'.format(k), dict(base, T=cfg.T_grid), sc.check)
        report.add('poisson', 'supsup.sharp.{}'.format(k), dict(base, T=cfg.T_grid), sc.sharp)

        N = f.degree()
        M0s = sorted(set([1, max(1, N // 8), max(1, N // 4), max(1, N // 2)]))
        ps = partial_sum_diagnostic(f, chi, complex(0.5, 1.0), M0s)
        logger.info('partial sums %d: %s', k, ', '.join('{:.3g}'.format(x) for x in ps.oscillations))
        rnd = 1e-13 * max(1.0, f.weighted_l1(0.0))
        for (M0, osc, tail) in zip(ps.M0s, ps.oscillations, ps.tails):
            report.add('poisson', 'partial_sums.{}.{}'.format(k, M0), dict(base, M0=M0),
                       BoundCheck(osc, tail, rnd))
        # a trend only: a rise reports inconclusive, never fail
        report.add('poisson', 'partial_sums.decreasing.{}'.format(k), dict(base, M0=M0s),
                   BoundCheck(0.0 if ps.decreasing else 1.0, 0.0, 1.0))

        for s in MONOMIAL_POINTS:
            mono = monomial_eval(f, character_point(chi, s))
            report.add('poisson', 'monomial_series.{}.{}'.format(_cx(s), k), dict(base, s=_cx(s)),
                       BoundCheck(abs(mono - evaluate(g, s)), rnd))
            if s in values:
                pv = values[s]
                report.add('poisson', 'monomial_series.extend.{}.{}'.format(_cx(s), k), dict(base, s=_cx(s)),
                           BoundCheck(abs(mono - pv.value), pv.bound + rnd))

    two = DirichletPolynomial([1.0, 1.0])
    chi = sample_haar(1, rng.derived_seed(cfg.seed, 'character', 10 ** 6))
    cert1 = estimate_Cf(two, chi, 1, _cert_T(cfg), _cert_step(two))
    sc = check_supsup_bound(two, chi, 1, cert1, SUPSUP_SIGMAS, cfg.T_grid, cfg.safety)
    report.add('poisson', 'supsup.p1.closed_form', {"f": _poly_id(two), "C": cert1.C}, sc.check)

    for n in (2, 3, 5):
        s = complex(0.5, 1.0)
        pm = poisson_of_monomial(n, s)
        report.add('poisson', 'monomial.{}'.format(n), {"n": n, "s": _cx(s)},
                   BoundCheck(abs(pm.value - n ** (-s)), pm.bound))


def suite_fatou(cfg: ExperimentConfig, report: VerificationReport):
    for (k, f) in enumerate(_instances(cfg)):
        chi = _character(cfg, f, k)
        t = float(rng.stream(cfg.seed, 'points', 4000 + k).uniform(-50.0, 50.0))
        tr = fatou_trace(f, chi, t, FATOU_SIGMAS)
        B = f.weighted_l1(0.0)
        base = {"f": _poly_id(f), "chi": inputs_digest(chi.to_dict()), "t": t}
        rnd = 1e-13 * max(B, 1.0)
        report.add('fatou', 'final_gap.{}'.format(k), base,
                   BoundCheck(tr.gaps[-1], fatou_gap_bound(f, FATOU_SIGMAS[-1]), rnd))
        rise = max(b - a for (a, b) in zip(tr.gaps, tr.gaps[1:]))
        report.add('fatou', 'monotone.{}'.format(k), base, BoundCheck(rise, 0.0, rnd))
        tw = fatou_trace(f, kronecker_twist(chi, t), 0.0, FATOU_SIGMAS)
        drift = max(abs(a - b) for (a, b) in zip(tr.values, tw.values))
        report.add('fatou', 'twisted.{}'.format(k), base, BoundCheck(drift, 1e-10 * max(B, 1.0)))


def suite_norms(cfg: ExperimentConfig, report: VerificationReport):
    T = cfg.T
    s0 = cfg.sigma_grid[0]
    fs = _instances(cfg)
    for (k, f) in enumerate(fs):
        chi = _character(cfg, f, k)
        g = vertical_limit(f, chi)
        base = {"f": _poly_id(f), "chi": inputs_digest(chi.to_dict()), "T": T}
        l2 = exact_mean_2(f, 0.0).value
        report.add('norms', 'boundary.p2.{}'.format(k), base,
                   BoundCheck(abs(exact_finite_mean_2(g, 0.0, T) - l2), finite_mean_gap_bound(f, 0.0, T)))
        report.add('norms', 'small_sigma.p2.{}'.format(k), dict(base, sigma=s0),
                   BoundCheck(abs(exact_finite_mean_2(g, s0, T) - exact_mean_2(f, s0).value),
                              finite_mean_gap_bound(f, s0, T)))
        ne = norm_estimate(f, 2, cfg.sigma_grid)
        report.add('norms', 'norm.p2.{}'.format(k), dict(base, sigma=cfg.sigma_grid),
                   BoundCheck(ne.value, math.sqrt(l2), EXACT_TOLERANCE))

    f = fs[0]
    chi = _character(cfg, f, 0)
    g = vertical_limit(f, chi)
    for p in cfg.p_values:
        if p == 2:
            continue
        base = {"f": _poly_id(f), "chi": inputs_digest(chi.to_dict()), "T": T, "p": p}
        for sigma in (0.0, s0):
            tm = time_mean(g, sigma, p, T, resolved_steps(g, sigma, T, p, factor=2))
            if float(p).is_integer() and int(p) % 2 == 0:
                ref = exact_mean_even(f, sigma, p)
            else:
                ref = mc_torus_mean(f, p, cfg.mc_samples, cfg.seed, sigma=sigma)
            band = _band(tm.stderr, ref.stderr) + 0.05 * ref.value
            report.add('norms', 'torus.p{}.{}'.format(_p(p), sigma), dict(base, sigma=sigma),
                       BoundCheck(abs(tm.value - ref.value), band, 0.05 * ref.value))


SUITE_FUNCTIONS: Dict[str, Callable[[ExperimentConfig, VerificationReport], None]] = {
    'carlson': suite_carlson,
    'ergodic': suite_ergodic,
    'growth': suite_growth,
    'helson': suite_helson,
    'riesz': suite_riesz,
    'poisson': suite_poisson,
    'fatou': suite_fatou,
    'norms': suite_norms,
}


def run_suite(cfg: ExperimentConfig, suite_name: str) -> VerificationReport:
    '''
    Run one suite ("all" runs every suite in a fixed order).

    Raises
    ------
    UnknownSuite
        If suite_name is not one of SUITES.
    '''
    if suite_name not in SUITES:
        raise UnknownSuite('unknown suite {}, expected one of {}'.format(suite_name, ', '.join(SUITES)))
    parallel.set_threads(cfg.threads)
    names = [s for s in SUITES if s != 'all'] if suite_name == 'all' else [suite_name]
    report = VerificationReport(config=cfg.echo())
    for name in names:
        start = time.perf_counter()
        part = VerificationReport()
        SUITE_FUNCTIONS[name](cfg, part)
        part.wall_time = time.perf_counter() - start
        counts = part.summary().get(name, {})
        logger.info('suite %s: %d rows %s in %.2fs', name, len(part.rows), counts, part.wall_time)
        report.extend(part)
    return report


def run_suites(cfg: ExperimentConfig) -> VerificationReport:
    ''' Every suite the config lists, in the config's order. '''
    report = VerificationReport(config=cfg.echo())
    for name in cfg.suite_list():
        report.extend(run_suite(cfg, name))
    return report

'''
Command line entry point.

    hardy-devkit [--config PATH] [--seed N] [--out PATH] [--threads N] [-v] COMMAND

    eval      f(s) for the configured polynomial
    means     M_p^p(sigma, f) by one of the estimators
    riesz     convergence of Riesz means as CSV
    poisson   f_chi(s) from boundary values, with its error bound
    verify    run a suite and write <out>.csv / <out>.json
    report    re-summarise an emitted CSV and re-audit its statuses

Exit status: 0 on success, 1 when a report has a failing row, 2 on bad input.
'''
import argparse
import csv
import json
import logging
import math
import sys
from typing import List, Optional
from .characters import sample_haar
from .arith import prime_count_needed_upto
from .config import ExperimentConfig, SUITES, default_config
from .generators import polynomial_from_config
from .means import exact_mean_2, exact_mean_even, time_mean, resolved_steps, mc_torus_mean, estimate_Cf
from .poisson import poisson_extend
from .report import emit_report, read_report, audit, report_summary_json
from .riesz import convergence_study
from .series import evaluate
from .suites import run_suite
from . import parallel, rng

logger = logging.getLogger(__name__)


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog='hardy-devkit', description='Numerical lab for H^p spaces of Dirichlet series.')
    ap.add_argument('--config', help='Experiment config (JSON). Defaults to a random-gaussian polynomial.')
    ap.add_argument('--seed', type=int, help='Override the config seed.')
    ap.add_argument('--out', help='Override the config output path.')
    ap.add_argument('--threads', type=int, help='Worker threads; changes speed only.')
    ap.add_argument('-v', '--verbose', action='store_true', help='Debug logging.')
    sub = ap.add_subparsers(dest='command', required=True)

    p = sub.add_parser('eval', help='Evaluate f at s.')
    p.add_argument('s', type=complex, help='Point, e.g. 0.5+2j.')

    p = sub.add_parser('means', help='p-th power mean at sigma.')
    p.add_argument('--p', type=float, default=2.0)
    p.add_argument('--sigma', type=float, default=0.0)
    p.add_argument('--method', choices=('exact', 'time', 'monte-carlo'), default='exact')

    p = sub.add_parser('riesz', help='Riesz mean convergence study (CSV on stdout).')
    p.add_argument('s', type=complex)
    p.add_argument('--k', type=float)

    p = sub.add_parser('poisson', help='Poisson extension at s for a Haar character.')
    p.add_argument('s', type=complex)

    p = sub.add_parser('verify', help='Run a verification suite.')
    p.add_argument('suite', choices=SUITES)

    p = sub.add_parser('report', help='Summarise and audit an emitted report.')
    p.add_argument('path')
    return ap


def _config(args) -> ExperimentConfig:
    cfg = ExperimentConfig.load(args.config) if args.config else default_config()
    return cfg.override(seed=args.seed, output_path=args.out, threads=args.threads)


def _cmd_eval(cfg: ExperimentConfig, args) -> int:
    f = polynomial_from_config(cfg.polynomial, cfg.seed)
    v = evaluate(f, args.s)
    print(json.dumps({"s": [args.s.real, args.s.imag], "value": [v.real, v.imag]}))
    return 0


def _cmd_means(cfg: ExperimentConfig, args) -> int:
    f = polynomial_from_config(cfg.polynomial, cfg.seed)
    if args.method == 'exact':
        if args.p == 2:
            est = exact_mean_2(f, args.sigma)
        else:
            est = exact_mean_even(f, args.sigma, args.p)
    elif args.method == 'time':
        est = time_mean(f, args.sigma, args.p, cfg.T, resolved_steps(f, args.sigma, cfg.T, args.p, factor=2))
    else:
        est = mc_torus_mean(f, args.p, cfg.mc_samples, cfg.seed, sigma=args.sigma)
    print(json.dumps(est.row(), sort_keys=True))
    return 0


def _cmd_riesz(cfg: ExperimentConfig, args) -> int:
    f = polynomial_from_config(cfg.polynomial, cfg.seed)
    k = args.k if args.k is not None else cfg.riesz['k']
    w = csv.writer(sys.stdout, lineterminator='\n')
    w.writerow(('N', 'k', 'sigma', 't', 'abs_error', 'bound'))
    for pt in convergence_study(f, k, args.s, cfg.riesz['N_list']):
        w.writerow([pt.N, repr(pt.k), repr(pt.sigma), repr(pt.t), repr(pt.abs_error), repr(pt.bound)])
    return 0


def _cmd_poisson(cfg: ExperimentConfig, args) -> int:
    f = polynomial_from_config(cfg.polynomial, cfg.seed)
    chi = sample_haar(max(1, prime_count_needed_upto(f.degree())), rng.derived_seed(cfg.seed, 'character', 0))
    step = math.pi / (20 * math.log(max(f.degree(), 2)))
    cert = estimate_Cf(f, chi, 2, max(1.0, min(cfg.T, 1000.0)), step)
    pv = poisson_extend(f, chi, args.s, cert, safety=cfg.safety)
    print(json.dumps({"s": [args.s.real, args.s.imag], "value": [pv.value.real, pv.value.imag],
                      "tail_bound": pv.tail_bound, "quad_error": pv.quad_error, "C": cert.C}))
    return 0


def _cmd_verify(cfg: ExperimentConfig, args) -> int:
    report = run_suite(cfg, args.suite)
    emit_report(report, cfg.output_path)
    sys.stdout.write(report_summary_json(report))
    return 1 if report.has_failures else 0


def _cmd_report(args) -> int:
    report = read_report(args.path)
    bad = audit(report)
    for r in bad:
        logger.error('%s/%s: stored status %s disagrees with its numbers', r.suite, r.check, r.status)
    sys.stdout.write(report_summary_json(report))
    return 1 if bad or report.has_failures else 0


COMMANDS = {
    'eval': _cmd_eval,
    'means': _cmd_means,
    'riesz': _cmd_riesz,
    'poisson': _cmd_poisson,
    'verify': _cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s', stream=sys.stderr)
    try:
        if args.command == 'report':
            return _cmd_report(args)
        cfg = _config(args)
        parallel.set_threads(cfg.threads)
        return COMMANDS[args.command](cfg, args)
    except (ValueError, OSError) as e:
        logger.error('%s', e)
        return 2


if __name__ == '__main__':
    sys.exit(main())

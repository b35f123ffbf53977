'''
p-means of Dirichlet polynomials.

    M_p^p(sigma, f) = lim_{T -> oo} 1/2T int_{-T}^{T} |f(sigma + i t)|^p dt
                    = int over the torus of |f_sigma*(chi)|^p dm(chi)

Three routes are offered:

    exact2 / exact-even   closed forms (p = 2, and p = 2m via f^m)
    time-average          composite Simpson on [-T, T]
    monte-carlo           Haar samples of the torus

Every route returns a MeanEstimate. Time averages carry a deterministic
quadrature error bound (or a Richardson estimate for non-even p);
Monte Carlo carries the sample standard error.
'''
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple
import numpy as np
from .arith import divisor_table, lift_dot, lift_lengths
from .characters import Character, haar_phase_block, flow_values, vertical_limit
from .digest import inputs_digest
from .errors import UnderResolvedGrid
from .quadrature import simpson, simpson_ratio_error, power_abs, cumulative_trapezoid
from .report import BoundCheck
from .series import MAX_N, DirichletPolynomial, HalfPlanePoint, eval_grid, translate_h, translate_v
from . import parallel

logger = logging.getLogger(__name__)

METHODS = ('exact2', 'exact-even', 'time-average', 'monte-carlo')

DEFAULT_SAFETY = 1.1
MC_BLOCK = 4096
# cells of one (support chunk x samples) phase array
_LIFT_CELLS = 1 << 22
EXACT_TOLERANCE = 1e-10
# pairs held in memory at once by the O(K^2) sums
_PAIR_CELLS = 1 << 20
# above this support the Simpson error falls back to the Richardson estimate
MAX_BOUND_SUPPORT = 4000

_EPS = float(np.finfo(np.float64).eps)


@dataclass(frozen=True)
class MeanEstimate:
    '''
    An estimate of M_p^p(sigma, f) (power=True) or of M_p (power=False).

    horizon is T for time averages, the sample count for Monte Carlo and
    inf for closed forms.
    '''
    value: float
    p: float
    sigma: float
    method: str
    horizon: float
    stderr: float = 0.0
    power: bool = True

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError('unknown method {}'.format(self.method))
        if not self.value >= 0:
            raise ValueError('value should be >= 0.')
        if not self.stderr >= 0:
            raise ValueError('stderr should be >= 0.')
        if self.p < 1:
            raise ValueError('p should be >= 1.')

    def root(self) -> 'MeanEstimate':
        ''' The p-th root, with the error propagated to first order. '''
        if not self.power:
            return self
        v = self.value ** (1 / self.p)
        if self.value > 0:
            se = self.stderr / (self.p * self.value ** (1 - 1 / self.p))
        else:
            se = self.stderr ** (1 / self.p)
        return MeanEstimate(v, self.p, self.sigma, self.method, self.horizon, se, power=False)

    def log_mean(self) -> Tuple[float, float]:
        ''' (ln M_p, its standard error). '''
        if self.value <= 0:
            raise ValueError('log of a zero mean.')
        if self.power:
            return math.log(self.value) / self.p, self.stderr / (self.p * self.value)
        return math.log(self.value), self.stderr / self.value

    def row(self) -> dict:
        return {
            "method": self.method,
            "p": self.p,
            "sigma": self.sigma,
            "T_or_samples": self.horizon,
            "value": self.value,
            "stderr": self.stderr
        }


@dataclass(frozen=True)
class FlowGrowthCertificate:
    '''
    Grid estimate of C_f(chi): the cumulative flow integrals of |f*|^p
    stay below C (1 + T) at every grid point T <= T_max.

    The grid sup is a lower estimate of the true constant; consumers
    multiply by a safety factor.
    '''
    C: float
    p: float
    T_max: float
    grid_step: float
    chi_ref: Dict = field(default_factory=dict)
    argmax_T: float = 0.0

    def safe_C(self, safety: float = DEFAULT_SAFETY) -> float:
        if safety < 1:
            raise ValueError('safety should be >= 1.')
        return self.C * safety

    def bound(self, T: float, safety: float = DEFAULT_SAFETY) -> float:
        ''' Certified bound on either cumulative integral up to T. '''
        return self.safe_C(safety) * (1 + abs(T))

    def scaled(self, factor: float) -> 'FlowGrowthCertificate':
        ''' The certificate of c f when factor = |c|^p. '''
        return FlowGrowthCertificate(self.C * factor, self.p, self.T_max,
                                     self.grid_step, dict(self.chi_ref), self.argmax_T)


def _check_sigma(sigma: float):
    if not (math.isfinite(sigma) and sigma >= 0):
        raise ValueError('sigma should be >= 0, got {}.'.format(sigma))


def _check_p(p: float):
    if not (math.isfinite(p) and p >= 1):
        raise ValueError('p should be >= 1, got {}.'.format(p))


def _is_even(p: float) -> bool:
    return float(p).is_integer() and int(p) % 2 == 0


def _support(f: DirichletPolynomial) -> Tuple[np.ndarray, np.ndarray]:
    ns = np.flatnonzero(f.coeffs)
    return f.coeffs[ns], f.log_n[ns]


def _pair_sum(b: np.ndarray, ln: np.ndarray, kernel) -> complex:
    '''
    sum over m, n of b_m conj(b_n) kernel(ln m - ln n), by row blocks of at
    most _PAIR_CELLS pairs each.
    '''
    K = b.shape[0]
    if K == 0:
        return 0j
    bc = np.conj(b)

    def block(start: int, stop: int) -> complex:
        om = ln[start:stop, None] - ln[None, :]
        return complex(np.sum(b[start:stop, None] * bc[None, :] * kernel(om)))

    rows = max(1, _PAIR_CELLS // K)
    return parallel.tree_sum(parallel.map_chunks(block, K, rows))


def exact_mean_2(f: DirichletPolynomial, sigma: float) -> MeanEstimate:
    '''
    M_2^2(sigma, f) = sum |a_n|^2 n^-2sigma.
    '''
    _check_sigma(sigma)
    return MeanEstimate(f.l2_squared(sigma), 2.0, sigma, 'exact2', math.inf)


def exact_mean_even(f: DirichletPolynomial, sigma: float, p: float) -> MeanEstimate:
    '''
    M_p^p(sigma, f) for p = 2m, as the 2-mean of f^m.

    Raises
    ------
    ValueError
        If p is not an even integer, or deg(f)^m exceeds the polynomial
        size limit.
    '''
    _check_sigma(sigma)
    if not _is_even(p) or p < 2:
        raise ValueError('p should be an even integer, got {}.'.format(p))
    m = int(p) // 2
    if m == 1:
        return exact_mean_2(f, sigma)
    g = translate_h(f.truncate(f.degree()), sigma).power(m)
    return MeanEstimate(g.l2_squared(0.0), float(p), sigma, 'exact-even', math.inf)


def exact_finite_mean_2(f: DirichletPolynomial, sigma: float, T: float) -> float:
    '''
    (1/2T) int_{-T}^{T} |f(sigma + i t)|^2 dt in closed form:

        sum_{m,n} a_m conj(a_n) (mn)^-sigma sinc(T ln(m/n)),  sinc(0) = 1.
    '''
    _check_sigma(sigma)
    if not T > 0:
        raise ValueError('T should be > 0.')
    b, ln = _support(translate_h(f, sigma))
    return _pair_sum(b, ln, lambda om: np.sinc(T * om / math.pi)).real


def finite_mean_gap_bound(f: DirichletPolynomial, sigma: float, T: float) -> float:
    '''
    sum_{m != n} |a_m a_n| (mn)^-sigma / (T |ln(m/n)|), which bounds
    |exact_finite_mean_2 - exact_mean_2|.

    The bound holds unchanged for every vertical limit f_chi.
    '''
    _check_sigma(sigma)
    if not T > 0:
        raise ValueError('T should be > 0.')
    b, ln = _support(translate_h(f, sigma))
    b = np.abs(b).astype(np.complex128)

    def kernel(om):
        a = np.abs(om)
        return np.divide(1.0, T * a, out=np.zeros_like(a), where=a > 0)

    return _pair_sum(b, ln, kernel).real


def min_steps(T: float, n: int) -> int:
    '''
    Fewest Simpson intervals on [-T, T] that resolve frequency ln n:
    20 T ln(n) / pi, and at least 2.
    '''
    if n <= 1:
        return 2
    return max(2, math.ceil(20 * T * math.log(n) / math.pi))


def _round_steps(steps: int) -> int:
    # the half grid must be a Simpson grid too
    return steps + (-steps) % 4


def simpson_error_bound(g: DirichletPolynomial, sigma: float, T: float, h: float) -> Optional[float]:
    '''
    Bound on |Simpson mean - exact mean| for |g(sigma + i t)|^2 on [-T, T]
    with step h.

    Each frequency omega of |g|^2 is integrated with the factor r(h omega),
    so the error is at most sum_{m != n} |b_m b_n| |r(h omega) - 1| |sinc(T omega)|
    plus an evaluation rounding allowance. None if h omega reaches pi.
    '''
    b, ln = _support(translate_h(g, sigma))
    if b.shape[0] == 0:
        return 0.0
    if b.shape[0] > MAX_BOUND_SUPPORT:
        return None
    if h * (ln[-1] - ln[0]) >= math.pi:
        return None
    ab = np.abs(b).astype(np.complex128)

    def kernel(om):
        return simpson_ratio_error(h * om) * np.abs(np.sinc(T * om / math.pi))

    l1 = math.fsum(np.abs(b).tolist())
    rounding = 8 * _EPS * l1 * l1 * (b.shape[0] + T * float(ln[-1]) + 1)
    return _pair_sum(ab, ln, kernel).real + rounding


def _even_error_bound(g: DirichletPolynomial, sigma: float, p: float, T: float, h: float) -> Optional[float]:
    m = int(p) // 2
    deg = g.degree()
    if deg ** m > MAX_N:
        return None
    gm = translate_h(g.truncate(deg), sigma).power(m)
    return simpson_error_bound(gm, 0.0, T, h)


def time_mean(g: DirichletPolynomial, sigma: float, p: float, T: float, steps: int) -> MeanEstimate:
    '''
    (1/2T) int_{-T}^{T} |g(sigma + i t)|^p dt by composite Simpson.

    Parameters
    ----------
    g : DirichletPolynomial
        The integrand polynomial.
    sigma : float
        Real part, >= 0.
    p : float
        Exponent, >= 1.
    T : float
        Half-width of the window, > 0.
    steps : int
        Simpson intervals; raised to a multiple of 4.

    Returns
    -------
    MeanEstimate
        method 'time-average'; stderr holds the quadrature error bound
        (even p) or the Richardson estimate |S_h - S_2h| / 15 (other p).

    Raises
    ------
    UnderResolvedGrid
        If steps < 20 T ln(N) / pi, N the degree of g.
    ValueError
        If p < 1, T <= 0 or sigma < 0.
    '''
    _check_p(p)
    _check_sigma(sigma)
    if not (math.isfinite(T) and T > 0):
        raise ValueError('T should be > 0.')
    need = min_steps(T, g.degree())
    if steps < need:
        raise UnderResolvedGrid('{} steps on [-{}, {}] do not resolve ln {}; need >= {}.'.format(
            steps, T, T, g.degree(), need))
    steps = _round_steps(int(steps))
    h = 2 * T / steps
    t = np.linspace(-T, T, steps + 1)
    vals = power_abs(eval_grid(g, sigma, t), p)
    integral = float(simpson(vals, h))
    value = max(integral / (2 * T), 0.0)

    err = _even_error_bound(g, sigma, p, T, h) if _is_even(p) else None
    if err is None:
        coarse = float(simpson(vals[::2], 2 * h))
        err = abs(integral - coarse) / 15 / (2 * T)
    logger.debug('time_mean p=%s sigma=%s T=%s steps=%d: %.12g +- %.3g', p, sigma, T, steps, value, err)
    return MeanEstimate(value, float(p), sigma, 'time-average', T, err)


def resolved_steps(g: DirichletPolynomial, sigma: float, T: float, p: float = 2,
                   factor: int = 1, rel_tol: float = None, max_steps: int = 1 << 23) -> int:
    '''
    A step count for time_mean: factor times the minimum, doubled until
    the even-p error bound drops below rel_tol times the exact mean.
    '''
    steps = _round_steps(factor * min_steps(T, g.degree()))
    if rel_tol is None or not _is_even(p):
        return steps
    if p == 2:
        scale = exact_finite_mean_2(g, sigma, T)
    else:
        scale = exact_mean_even(g, sigma, p).value
    while steps < max_steps:
        err = _even_error_bound(g, sigma, p, T, 2 * T / steps)
        if err is not None and err <= rel_tol * scale:
            break
        steps *= 2
    return steps


def _chan(a: Tuple[int, float, float], b: Tuple[int, float, float]) -> Tuple[int, float, float]:
    # merge (count, mean, sum of squared deviations) of two blocks
    na, ma, qa = a
    nb, mb, qb = b
    n = na + nb
    d = mb - ma
    return n, ma + d * nb / n, qa + qb + d * d * na * nb / n


def mc_torus_mean(f: DirichletPolynomial, p: float, samples: int, seed: int,
                  sigma: float = 0.0) -> MeanEstimate:
    '''
    Monte Carlo mean of |(H_sigma f)*(chi)|^p over Haar-random characters chi.

    Samples are drawn in blocks of MC_BLOCK from per-block streams and the
    block statistics are merged by a fixed tree, so the estimate does not
    depend on the thread count. Phases of chi(n) are accumulated prime by
    prime over chunks of the support; no exponent matrix is formed.

    Raises
    ------
    ValueError
        If p < 1, sigma < 0 or samples < 100.
    '''
    _check_p(p)
    _check_sigma(sigma)
    if samples < 100:
        raise ValueError('samples should be >= 100.')
    g = translate_h(f, sigma) if sigma else f
    ns = np.flatnonzero(g.coeffs) + 1
    a = g.coeffs[ns - 1]
    J = max(1, int(lift_lengths(ns).max())) if ns.size else 1

    def block(start: int, stop: int) -> Tuple[int, float, float]:
        th = haar_phase_block(seed, J, start // MC_BLOCK, stop - start)
        w = th.T
        vals = np.zeros(stop - start, dtype=np.complex128)
        rows = max(1, _LIFT_CELLS // (stop - start))
        for lo in range(0, ns.shape[0], rows):
            ph = lift_dot(ns[lo:lo + rows], w)
            vals += a[lo:lo + rows] @ np.exp(1j * ph)
        v = power_abs(vals, p)
        mean = float(np.mean(v))
        return (stop - start, mean, float(np.sum((v - mean) ** 2)))

    n, mean, q = parallel.tree_reduce(parallel.map_chunks(block, samples, MC_BLOCK), _chan)
    stderr = math.sqrt(q / (n - 1)) / math.sqrt(n)
    logger.debug('mc_torus_mean p=%s sigma=%s samples=%d: %.8g +- %.3g', p, sigma, samples, mean, stderr)
    return MeanEstimate(max(mean, 0.0), float(p), float(sigma), 'monte-carlo', float(samples), stderr)


def estimate_Cf(f: DirichletPolynomial, chi: Character, p: float, T_max: float,
                grid_step: float) -> FlowGrowthCertificate:
    '''
    Grid estimate of the flow growth constant

        C = max_T max(int_0^T, int_{-T}^0 |f*(chi p^-i tau)|^p d tau) / (1 + T)

    with cumulative trapezoid integrals on a tau-grid of step <= grid_step
    that lands on T_max.

    Raises
    ------
    UnderResolvedGrid
        If grid_step > pi / (10 ln N).
    ValueError
        If T_max < 1, p < 1 or f is zero.
    '''
    _check_p(p)
    if T_max < 1:
        raise ValueError('T_max should be >= 1.')
    if not grid_step > 0:
        raise ValueError('grid_step should be > 0.')
    N = f.degree()
    if N > 1 and grid_step > math.pi / (10 * math.log(N)):
        raise UnderResolvedGrid('grid_step {} exceeds pi/(10 ln {}).'.format(grid_step, N))
    if not np.any(f.coeffs):
        raise ValueError('f should be nonzero.')

    K = math.ceil(T_max / grid_step)
    h = T_max / K
    taus = h * np.arange(K + 1)
    up = cumulative_trapezoid(power_abs(flow_values(f, chi, taus), p), h)
    down = cumulative_trapezoid(power_abs(flow_values(f, chi, -taus), p), h)
    ratio = np.maximum(up, down)[1:] / (1 + taus[1:])
    k = int(np.argmax(ratio))
    ref = {"J": chi.J, "seed": chi.seed, "digest": inputs_digest(chi.to_dict())}
    cert = FlowGrowthCertificate(float(ratio[k]), float(p), float(T_max), h, ref, float(taus[k + 1]))
    logger.info('C_f(chi) ~ %.6g at T = %.4g (p=%s, %d nodes)', cert.C, cert.argmax_T, p, K + 1)
    return cert


def exact_cumulative_2(f: DirichletPolynomial, chi: Character, T: float) -> Tuple[float, float]:
    '''
    int_0^T and int_{-T}^0 of |f*(chi p^-i tau)|^2 d tau in closed form.
    '''
    if not T >= 0:
        raise ValueError('T should be >= 0.')
    b, ln = _support(vertical_limit(f, chi))

    def kernel(om):
        # int_0^T e^(-i tau om) d tau
        x = T * om
        return T * np.sinc(x / math.pi) - 1j * np.sin(x / 2) * T * np.sinc(x / (2 * math.pi))

    up = _pair_sum(b, ln, kernel).real
    down = _pair_sum(b, ln, lambda om: np.conj(kernel(om))).real
    return up, down


def _mean_at(f: DirichletPolynomial, sigma: float, p: float, T: float = None, steps: int = None,
             samples: int = None, seed: int = 0) -> MeanEstimate:
    if _is_even(p):
        return exact_mean_even(f, sigma, p)
    if T is not None:
        if steps is None:
            steps = resolved_steps(f, sigma, T, p, factor=2)
        return time_mean(f, sigma, p, T, steps)
    return mc_torus_mean(f, p, samples or 10 ** 5, seed, sigma=sigma)


@dataclass(frozen=True)
class ConvexityReport:
    sigmas: Tuple[float, ...]
    log_means: Tuple[float, ...]
    log_stderr: Tuple[float, ...]
    first_diffs: Tuple[float, ...]
    diff_tolerances: Tuple[float, ...]
    defects: Tuple[float, ...]
    defect_tolerances: Tuple[float, ...]
    method: str

    @property
    def passed(self) -> bool:
        return all(d <= tol for (d, tol) in zip(self.first_diffs, self.diff_tolerances)) and \
            all(d <= tol for (d, tol) in zip(self.defects, self.defect_tolerances))


def convexity_report(f: DirichletPolynomial, p: float, sigma_grid: Sequence[float], T: float = None,
                     steps: int = None, samples: int = None, seed: int = 0) -> ConvexityReport:
    '''
    First differences and convexity defects of sigma -> log M_p(sigma, f).

    Even p is exact (tolerance 1e-10); otherwise time averages when T is
    given, Monte Carlo with common random numbers across sigma if not.
    Tolerances are 4 propagated standard errors. On a non-uniform grid
    the defect compares against linear interpolation between neighbours.

    Raises
    ------
    ValueError
        If the grid has fewer than 3 points, is not increasing and positive,
        or f is zero.
    '''
    _check_p(p)
    sig = [float(x) for x in sigma_grid]
    if len(sig) < 3:
        raise ValueError('sigma_grid needs at least 3 points.')
    if sig[0] <= 0 or any(b <= a for (a, b) in zip(sig, sig[1:])):
        raise ValueError('sigma_grid should be positive and increasing.')
    if not np.any(f.coeffs):
        raise ValueError('f should be nonzero.')

    ests = [_mean_at(f, s, p, T, steps, samples, seed) for s in sig]
    logs = [e.log_mean() for e in ests]
    lm = [x[0] for x in logs]
    se = [x[1] for x in logs]
    exact = ests[0].method in ('exact2', 'exact-even')

    def tol(*terms):
        return EXACT_TOLERANCE if exact else 4 * math.sqrt(sum(x * x for x in terms))

    diffs, dtol = [], []
    for i in range(len(sig) - 1):
        diffs.append(lm[i + 1] - lm[i])
        dtol.append(tol(se[i], se[i + 1]))

    defects, ctol = [], []
    for i in range(1, len(sig) - 1):
        lam = (sig[i + 1] - sig[i]) / (sig[i + 1] - sig[i - 1])
        defects.append(lm[i] - (lam * lm[i - 1] + (1 - lam) * lm[i + 1]))
        ctol.append(tol(se[i], lam * se[i - 1], (1 - lam) * se[i + 1]))

    rep = ConvexityReport(tuple(sig), tuple(lm), tuple(se), tuple(diffs), tuple(dtol),
                          tuple(defects), tuple(ctol), ests[0].method)
    logger.info('convexity p=%s over %d sigmas (%s): passed=%s', p, len(sig), rep.method, rep.passed)
    return rep


def translate_defect_estimate(f: DirichletPolynomial, p: float, sigma: float,
                              samples: int = 10 ** 5, seed: int = 0) -> MeanEstimate:
    '''
    ||f - H_sigma f||_p as a root-mode MeanEstimate.
    '''
    _check_p(p)
    if not sigma > 0:
        raise ValueError('sigma should be > 0.')
    g = f - translate_h(f, sigma)
    if _is_even(p):
        return exact_mean_even(g, 0.0, p).root()
    return mc_torus_mean(g, p, samples, seed).root()


def translate_defect(f: DirichletPolynomial, p: float, sigma: float,
                     samples: int = 10 ** 5, seed: int = 0) -> float:
    '''
    ||f - H_sigma f||_p; exact for even p, Monte Carlo otherwise.
    '''
    return translate_defect_estimate(f, p, sigma, samples, seed).value


@dataclass(frozen=True)
class NormEstimate:
    value: float
    stderr: float
    sigma: float
    method: str
    means: Tuple[float, ...]
    monotone: bool


def norm_estimate(f: DirichletPolynomial, p: float, sigma_grid: Sequence[float], T: float = None,
                  steps: int = None, samples: int = None, seed: int = 0) -> NormEstimate:
    '''
    ||f||_p reported as M_p at the smallest grid sigma, with a flag telling
    whether M_p grows as sigma decreases along the grid (within 4 stderr).
    '''
    _check_p(p)
    sig = sorted(float(x) for x in sigma_grid)
    if not sig or sig[0] < 0:
        raise ValueError('sigma_grid should be non-empty and >= 0.')
    roots = [_mean_at(f, s, p, T, steps, samples, seed).root() for s in sig]
    monotone = all(b.value <= a.value + 4 * math.hypot(a.stderr, b.stderr) + EXACT_TOLERANCE
                   for (a, b) in zip(roots, roots[1:]))
    first = roots[0]
    return NormEstimate(first.value, first.stderr, sig[0], first.method,
                        tuple(r.value for r in roots), monotone)


@dataclass(frozen=True)
class SupSupMeasurement:
    C_hat: float
    argmax: Tuple[float, float]
    table: Tuple[Tuple[float, float, float], ...]


def supsup_constant(f: DirichletPolynomial, p: float, sigma_grid: Sequence[float],
                    T_grid: Sequence[float], steps_factor: int = 2) -> SupSupMeasurement:
    '''
    Grid sup over (sigma, T) of (1/2T) int_{-T}^{T} |f(sigma + i t)|^p dt.

    p = 2 uses the closed form; other p use time averages.
    '''
    _check_p(p)
    table = []
    for s in sigma_grid:
        for T in T_grid:
            if p == 2:
                v = exact_finite_mean_2(f, s, T)
            else:
                v = time_mean(f, s, p, T, resolved_steps(f, s, T, p, steps_factor)).value
            table.append((float(s), float(T), float(v)))
    if not table:
        raise ValueError('empty grid.')
    best = max(table, key=lambda r: r[2])
    return SupSupMeasurement(best[2], (best[0], best[1]), tuple(table))


def avg_estimate_check(f: DirichletPolynomial, p: float, sigma: float, z: complex, T: float,
                       C_hat: float, steps: int = None) -> BoundCheck:
    '''
    Translate-average estimate: the measured

        (1/2T int_{-T}^{T} |f(sigma + i t + z) - f(sigma + i t)|^p dt)^(1/p)

    against 3 C^(1/p) |z| / sigma^2 (1 + sigma + |z|)^(1/p + 1). The
    tolerance is 5% of the bound since C_hat is only a grid estimate.
    '''
    _check_p(p)
    z = complex(z)
    if not sigma > 0:
        raise ValueError('sigma should be > 0.')
    if not z.real > 0:
        raise ValueError('Re z should be > 0.')
    if T < 1:
        raise ValueError('T should be >= 1.')
    d = translate_v(translate_h(f, z.real), z.imag) - f
    if steps is None:
        steps = resolved_steps(d, sigma, T, p, factor=2)
    lhs = time_mean(d, sigma, p, T, steps).root().value
    az = abs(z)
    bound = 3 * C_hat ** (1 / p) * az / sigma ** 2 * (1 + sigma + az) ** (1 / p + 1)
    return BoundCheck(lhs, bound, 0.05 * bound)


def pest_bound(C: float, s, p: float) -> float:
    '''
    Pointwise bound |f(s)|^p <= 2 C (1 + |s|) / sigma for f with sup-sup
    constant C.
    '''
    _check_p(p)
    pt = HalfPlanePoint.of(s).require_interior()
    return 2 * C * (1 + abs(pt.s)) / pt.sigma


def helson_lower_bound(f: DirichletPolynomial) -> float:
    ''' sqrt(sum |a_n|^2 / d(n)), which never exceeds ||f||_1. '''
    w = (f.coeffs.real ** 2 + f.coeffs.imag ** 2) / divisor_table(f.n_max)
    return math.sqrt(math.fsum(w.tolist()))

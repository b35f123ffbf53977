'''
Half-plane Poisson extension of boundary functions along the Kronecker flow.

For s = sigma + i t with sigma > 0,

    f_chi(s) = int f*(chi p^-i tau) P_sigma(t - tau) d tau,
    P_sigma(u) = sigma / (pi (sigma^2 + u^2)).

The integral is cut to the window |tau - t| <= W and summed by the
trapezoid rule:

          window                       tails
    |<------- 2W ------->|      bounded through the flow certificate
    t-W        t       t+W     (or by sup |f*| times the kernel mass)

The same values come from the power series side of the Bohr lift,
F(z) = sum a_n z^alpha(n) at z_j = chi(p_j) p_j^-s (monomial_eval).
'''
import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple
import numpy as np
from .arith import lift_prod, nth_primes
from .characters import Character, boundary_eval, flow_values, kronecker_twist, vertical_limit
from .means import DEFAULT_SAFETY, FlowGrowthCertificate, exact_finite_mean_2, time_mean, resolved_steps
from .quadrature import trapezoid
from .report import BoundCheck
from .series import DirichletPolynomial, HalfPlanePoint, evaluate

logger = logging.getLogger(__name__)

TAIL_MODES = ('from-certificate',)
DEFAULT_TAIL_TARGET = 2e-4
MAX_WINDOW = 1e6
SUPSUP_FACTOR = 6.0

_EPS = float(np.finfo(np.float64).eps)


@dataclass(frozen=True)
class PoissonQuadratureSpec:
    '''
    Window half-width trunc_T and the largest trapezoid step.
    '''
    trunc_T: float
    step: float
    tail_bound_mode: str = 'from-certificate'

    def __post_init__(self):
        if not (self.trunc_T > 0 and self.step > 0):
            raise ValueError('trunc_T and step should be > 0.')
        if self.tail_bound_mode not in TAIL_MODES:
            raise ValueError('unknown tail_bound_mode {}'.format(self.tail_bound_mode))

    def validate(self, sigma: float):
        ''' The window must hold the kernel: step <= sigma/10, trunc_T >= 10 sigma. '''
        if self.step > sigma / 10:
            raise ValueError('step {} exceeds sigma/10 = {}.'.format(self.step, sigma / 10))
        if self.trunc_T < 10 * sigma:
            raise ValueError('trunc_T {} is below 10 sigma = {}.'.format(self.trunc_T, 10 * sigma))
        return self


def poisson_kernel(sigma: float, u: np.ndarray) -> np.ndarray:
    return sigma / (math.pi * (sigma * sigma + u * u))


def kernel_tail_mass(sigma: float, W: float) -> float:
    ''' Kernel mass outside |u| <= W: (2/pi) arctan(sigma / W). '''
    if not (sigma > 0 and W > 0):
        raise ValueError('sigma and W should be > 0.')
    return 2 / math.pi * math.atan(sigma / W)


def poisson_tail_bound(C: float, p: float, s, W: float) -> float:
    '''
    Bound on the part of the Poisson integral outside |tau - t| <= W when
    the cumulative flow integrals of |f*|^p are <= C (1 + |T|).

    Hoelder against the kernel gives m^(1-1/p) (int_out |f*|^p P)^(1/p),
    and integration by parts bounds the last integral by

        4C [(1+|t|) P(W) + W P(W) + arctan(sigma/W)/pi].
    '''
    pt = HalfPlanePoint.of(s).require_interior()
    if p < 1:
        raise ValueError('p should be >= 1.')
    sg, t = pt.sigma, pt.t
    m = kernel_tail_mass(sg, W)
    kw = sg / (math.pi * (sg * sg + W * W))
    tp = 4 * C * ((1 + abs(t)) * kw + W * kw + math.atan(sg / W) / math.pi)
    return m ** (1 - 1 / p) * tp ** (1 / p)


def default_spec(f: DirichletPolynomial, s, C: float = None, p: float = 2.0,
                 target: float = DEFAULT_TAIL_TARGET) -> PoissonQuadratureSpec:
    '''
    step = min(sigma/10, pi/(20 ln N)); W doubled from max(10 sigma, 10(1+|t|))
    until the tail bound is below target.
    '''
    pt = HalfPlanePoint.of(s).require_interior()
    N = f.degree()
    step = pt.sigma / 10
    if N > 1:
        step = min(step, math.pi / (20 * math.log(N)))
    W = max(10 * pt.sigma, 10 * (1 + abs(pt.t)))
    B = f.weighted_l1(0.0)
    while W < MAX_WINDOW:
        tail = B * kernel_tail_mass(pt.sigma, W)
        if C is not None:
            tail = min(tail, poisson_tail_bound(C, p, pt, W))
        if tail <= target:
            break
        W *= 2
    return PoissonQuadratureSpec(W, step)


@dataclass(frozen=True)
class PoissonValue:
    value: complex
    tail_bound: float
    quad_error: float
    nodes: int

    @property
    def bound(self) -> float:
        return self.tail_bound + self.quad_error


def _window(sigma: float, t: float, spec: PoissonQuadratureSpec) -> Tuple[np.ndarray, float]:
    M = math.ceil(2 * spec.trunc_T / spec.step)
    h = 2 * spec.trunc_T / M
    return t - spec.trunc_T + h * np.arange(M + 1), h


def poisson_extend(f: DirichletPolynomial, chi: Character, s, cert: FlowGrowthCertificate,
                   spec: PoissonQuadratureSpec = None, safety: float = DEFAULT_SAFETY) -> PoissonValue:
    '''
    f_chi(s) from the boundary values f*(chi p^-i tau) alone.

    Parameters
    ----------
    f : DirichletPolynomial
        The polynomial whose vertical limit is extended.
    chi : Character
        The base point of the flow.
    s : complex or HalfPlanePoint
        Point with sigma > 0.
    cert : FlowGrowthCertificate
        C_f(chi) for the same f, chi and p.
    spec : PoissonQuadratureSpec, optional
        Window and step, by default default_spec(f, s, ...).
    safety : float, optional
        Factor applied to cert.C, by default 1.1.

    Returns
    -------
    PoissonValue
        value, tail bound outside the window, and the quadrature error
        (aliasing estimate plus the endpoint term).

    Raises
    ------
    ValueError
        If sigma <= 0 or the quadrature spec does not hold the kernel.
    '''
    pt = HalfPlanePoint.of(s)
    if pt.sigma <= 0:
        raise ValueError('poisson_extend needs sigma > 0; use boundary values at sigma = 0.')
    C = cert.safe_C(safety)
    if spec is None:
        spec = default_spec(f, pt, C, cert.p)
    spec.validate(pt.sigma)
    sg, t, W = pt.sigma, pt.t, spec.trunc_T

    taus, h = _window(sg, t, spec)
    vals = flow_values(f, chi, taus) * poisson_kernel(sg, taus - t)
    value = complex(trapezoid(vals, h))

    B = f.weighted_l1(0.0)
    tail = min(B * kernel_tail_mass(sg, W), poisson_tail_bound(C, cert.p, pt, W))

    ln = f.log_n
    live = np.abs(f.coeffs) > 0
    alias = math.fsum((np.abs(f.coeffs[live]) * 2 * np.exp(-sg * (2 * math.pi / h - ln[live]))).tolist())
    lnN = float(ln[live][-1]) if np.any(live) else 0.0
    kw = sg / (math.pi * (sg * sg + W * W))
    dkw = 2 * sg * W / (math.pi * (sg * sg + W * W) ** 2)
    endpoint = h * h / 6 * B * (lnN * kw + dkw)
    rounding = 16 * _EPS * B * (1 + (abs(t) + W) * lnN)
    logger.debug('poisson_extend s=%s: %d nodes, W=%.4g, h=%.3g, tail %.2e', pt.s, taus.shape[0], W, h, tail)
    return PoissonValue(value, float(tail), float(alias + endpoint + rounding), int(taus.shape[0]))


def kernel_mass_check(sigma: float, t: float, spec: PoissonQuadratureSpec) -> float:
    '''
    |trapezoid of the bare kernel over the window + analytic tail - 1|.
    '''
    spec.validate(sigma)
    taus, h = _window(sigma, t, spec)
    inside = float(trapezoid(poisson_kernel(sigma, taus - t), h))
    return abs(inside + kernel_tail_mass(sigma, spec.trunc_T) - 1)


def poisson_of_monomial(n: int, s, spec: PoissonQuadratureSpec = None) -> PoissonValue:
    '''
    Poisson integral of tau -> n^(-i tau) at s; equals n^(-s).
    '''
    f = DirichletPolynomial.monomial(n)
    pt = HalfPlanePoint.of(s).require_interior()
    if spec is None:
        spec = default_spec(f, pt)
    spec.validate(pt.sigma)
    taus, h = _window(pt.sigma, pt.t, spec)
    lnn = math.log(n)
    vals = np.exp(-1j * lnn * taus) * poisson_kernel(pt.sigma, taus - pt.t)
    alias = 2 * math.exp(-pt.sigma * (2 * math.pi / h - lnn))
    return PoissonValue(complex(trapezoid(vals, h)), kernel_tail_mass(pt.sigma, spec.trunc_T),
                        alias, int(taus.shape[0]))


def character_point(chi: Character, s) -> np.ndarray:
    '''
    z_j = chi(p_j) p_j^-s, the point of the closed polydisc over s
    (|z_j| = p_j^-sigma).
    '''
    pt = HalfPlanePoint.of(s)
    ln_p = np.log(np.array(nth_primes(chi.J), dtype=np.float64))
    return np.exp(1j * chi.phases - pt.s * ln_p)


def monomial_eval(f: DirichletPolynomial, z: Sequence[complex]) -> complex:
    '''
    The power series side of the Bohr lift,

        F(z) = sum a_n z_1^a_1 ... z_J^a_J,   n = p_1^a_1 ... p_J^a_J,

    at a point of the closed polydisc. At z = character_point(chi, s) it
    equals f_chi(s), and on the torus it is the boundary value f*(z).

    Raises
    ------
    InsufficientCharacterLength
        If z has fewer coordinates than the primes of f's support.
    ValueError
        If some |z_j| > 1.
    '''
    z = np.asarray(z, dtype=np.complex128).ravel()
    if z.size == 0:
        raise ValueError('z needs at least one coordinate.')
    if np.any(np.abs(z) > 1 + 4 * _EPS):
        raise ValueError('z should lie in the closed polydisc.')
    ns = np.flatnonzero(f.coeffs) + 1
    terms = f.coeffs[ns - 1] * lift_prod(ns, z)
    return complex(math.fsum(terms.real.tolist()), math.fsum(terms.imag.tolist()))


@dataclass(frozen=True)
class FatouTrace:
    sigmas: Tuple[float, ...]
    values: Tuple[complex, ...]
    target: complex
    gaps: Tuple[float, ...]

    @property
    def monotone(self) -> bool:
        return all(b <= a for (a, b) in zip(self.gaps, self.gaps[1:]))


def fatou_gap_bound(f: DirichletPolynomial, sigma: float) -> float:
    ''' sigma sum |a_n| ln n, which bounds |f_chi(sigma + it) - f_chi(it)|. '''
    return sigma * math.fsum((np.abs(f.coeffs) * f.log_n).tolist())


def fatou_trace(f: DirichletPolynomial, chi: Character, t: float, sigma_list: Sequence[float],
                cert: FlowGrowthCertificate = None) -> FatouTrace:
    '''
    f_chi(sigma + i t) along sigma -> 0 against the boundary value
    f*(chi p^-i t).

    Values come from direct evaluation, or from poisson_extend when a
    certificate is given.
    '''
    sig = [float(x) for x in sigma_list]
    if any(x <= 0 for x in sig) or any(b >= a for (a, b) in zip(sig, sig[1:])):
        raise ValueError('sigma_list should be positive and decreasing.')
    target = boundary_eval(f, kronecker_twist(chi, t))
    if cert is None:
        g = vertical_limit(f, chi)
        values = [evaluate(g, complex(x, t)) for x in sig]
    else:
        values = [poisson_extend(f, chi, complex(x, t), cert).value for x in sig]
    gaps = [abs(v - target) for v in values]
    return FatouTrace(tuple(sig), tuple(values), target, tuple(gaps))


def pointwise_bound(C: float, s) -> float:
    ''' sqrt(2) C (1 + |s|) / sigma. '''
    pt = HalfPlanePoint.of(s).require_interior()
    return math.sqrt(2) * C * (1 + abs(pt.s)) / pt.sigma


def check_pointwise_bound(f: DirichletPolynomial, chi: Character, p: float, cert: FlowGrowthCertificate,
                          sample_points: Sequence[complex],
                          safety: float = DEFAULT_SAFETY) -> List[Tuple[complex, BoundCheck]]:
    '''
    |f_chi(s)|^p against sqrt(2) C (1 + |s|) / sigma at every sample point.

    Values between the bound with cert.C and the bound with the safety
    factor applied are inconclusive.
    '''
    g = vertical_limit(f, chi)
    out = []
    for s in sample_points:
        pt = HalfPlanePoint.of(s).require_interior()
        measured = abs(evaluate(g, pt)) ** p
        bound = pointwise_bound(cert.C, pt)
        out.append((pt.s, BoundCheck(measured, bound, bound * (safety - 1))))
    return out


def supsup_analytic_bound(C: float, T: float, sigma: float) -> float:
    '''
    C (2/(T + sigma) + pi): bound on (1/2T) int_{-T}^{T} |f_chi(sigma + it)|^p dt,
    at most 6C once T >= 1.
    '''
    if not (T > 0 and sigma >= 0):
        raise ValueError('need T > 0 and sigma >= 0.')
    return C * (2 / (T + sigma) + math.pi)


@dataclass(frozen=True)
class SupSupCheck:
    table: Tuple[Tuple[float, float, float], ...]
    sup: float
    ratio: float
    check: BoundCheck
    sharp: BoundCheck


def check_supsup_bound(f: DirichletPolynomial, chi: Character, p: float, cert: FlowGrowthCertificate,
                       sigma_grid: Sequence[float], T_grid: Sequence[float],
                       safety: float = DEFAULT_SAFETY, steps_factor: int = 2) -> SupSupCheck:
    '''
    Grid sup of the time means of |f_chi|^p against 6 C.

    ratio is sup / C. sharp compares every grid mean with
    supsup_analytic_bound (measured is the largest mean / bound ratio).
    '''
    if any(T < 1 for T in T_grid):
        raise ValueError('T_grid should lie in [1, oo).')
    g = vertical_limit(f, chi)
    table = []
    for sg in sigma_grid:
        for T in T_grid:
            if p == 2:
                v = exact_finite_mean_2(g, sg, T)
            else:
                v = time_mean(g, sg, p, T, resolved_steps(g, sg, T, p, steps_factor)).value
            table.append((float(sg), float(T), float(v)))
    sup = max(r[2] for r in table)
    bound = SUPSUP_FACTOR * cert.C
    worst = max(r[2] / supsup_analytic_bound(cert.C, r[1], r[0]) for r in table)
    logger.info('supsup: sup %.6g, C %.6g, ratio %.4g', sup, cert.C, sup / cert.C)
    return SupSupCheck(tuple(table), sup, sup / cert.C,
                       BoundCheck(sup, bound, bound * (safety - 1)),
                       BoundCheck(worst, 1.0, safety - 1))


@dataclass(frozen=True)
class PartialSumDiagnostic:
    M0s: Tuple[int, ...]
    oscillations: Tuple[float, ...]
    tails: Tuple[float, ...]

    @property
    def decreasing(self) -> bool:
        return all(b <= a for (a, b) in zip(self.oscillations, self.oscillations[1:]))


def partial_sum_diagnostic(f: DirichletPolynomial, chi: Character, s, M0_list: Sequence[int]) -> PartialSumDiagnostic:
    '''
    For each M0, max over M0 <= M <= N of |S_M - S_M0|, where S_M is the
    partial sum of f_chi(s) over n <= M, next to its coefficient bound
    sum_{n > M0} |a_n| n^-sigma.

    The oscillations shrinking with M0 is a trend, not a guarantee.
    '''
    pt = HalfPlanePoint.of(s).require_interior()
    g = vertical_limit(f, chi)
    terms = g.coeffs * np.exp(-pt.s * g.log_n)
    S = np.cumsum(terms)
    mags = np.abs(terms)
    osc, tails = [], []
    M0s = [int(m) for m in M0_list]
    for m in M0s:
        if not 1 <= m <= f.n_max:
            raise ValueError('M0 = {} outside [1, {}].'.format(m, f.n_max))
        osc.append(float(np.max(np.abs(S[m - 1:] - S[m - 1]))))
        tails.append(math.fsum(mags[m:].tolist()))
    return PartialSumDiagnostic(tuple(M0s), tuple(osc), tuple(tails))

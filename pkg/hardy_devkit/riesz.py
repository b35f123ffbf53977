'''
Riesz means of the first kind.

    R_N^k f(s) = sum_{n < N} a_n (1 - ln n / ln N)^k n^-s

and their contour form, with z = x + i y on a vertical line x > 0:

    R_N^k f(s) = Gamma(k+1) int f(s + z / ln N) e^z / z^(k+1) dy / 2pi

The contour form rests on Hankel's formula

    Gamma(k+1) int e^(u z) / z^(k+1) dy / 2pi = u^k (u >= 0), 0 (u < 0).
'''
import logging
import math
from dataclasses import dataclass
from typing import List, Sequence
import numpy as np
from scipy.special import gamma
from .quadrature import adaptive_simpson
from .series import DirichletPolynomial, HalfPlanePoint, evaluate, eval_grid

logger = logging.getLogger(__name__)

DEFAULT_K = 3.5
DEFAULT_CUTOFF = 200.0

_EPS = float(np.finfo(np.float64).eps)


@dataclass(frozen=True)
class RieszParams:
    '''
    Order k, length N and the contour line x (default x = k) cut at
    |y| <= y_cutoff.
    '''
    N: int
    k: float = DEFAULT_K
    contour_x: float = None
    y_cutoff: float = DEFAULT_CUTOFF

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 2:
            raise ValueError('N should be an integer >= 2, got {}.'.format(self.N))
        if not self.k > 0:
            raise ValueError('k should be > 0.')
        if self.contour_x is None:
            object.__setattr__(self, 'contour_x', float(self.k))
        if not self.contour_x > 0:
            raise ValueError('contour_x should be > 0.')
        if not self.y_cutoff > 0:
            raise ValueError('y_cutoff should be > 0.')

    @property
    def log_N(self) -> float:
        return math.log(self.N)


def riesz_weights(N: int, k: float, n_max: int) -> np.ndarray:
    '''
    (1 - ln n / ln N)^k for n = 1..n_max; zero from n = N on.
    '''
    if N < 2:
        raise ValueError('N should be >= 2.')
    if not k > 0:
        raise ValueError('k should be > 0.')
    n = np.arange(1, n_max + 1, dtype=np.float64)
    base = 1 - np.log(n) / math.log(N)
    w = np.zeros(n_max)
    live = np.arange(1, n_max + 1) < N
    w[live] = base[live] ** k
    return w


def riesz_polynomial(f: DirichletPolynomial, params: RieszParams) -> DirichletPolynomial:
    ''' The weighted polynomial R_N^k f. '''
    return DirichletPolynomial(f.coeffs * riesz_weights(params.N, params.k, f.n_max))


def riesz_mean(f: DirichletPolynomial, params: RieszParams, s) -> complex:
    ''' R_N^k f(s) by direct summation. '''
    return evaluate(riesz_polynomial(f, params), s)


def riesz_error_bound(f: DirichletPolynomial, params: RieszParams, s) -> float:
    '''
    sum |a_n| (1 - w_n) n^-sigma, a bound on |R_N^k f(s) - f(s)|, plus a
    rounding allowance for the two computed sums.

    The bound is attained for nonnegative coefficients at real s.
    '''
    sigma = complex(s.s if isinstance(s, HalfPlanePoint) else s).real
    w = riesz_weights(params.N, params.k, f.n_max)
    mags = np.abs(f.coeffs) * np.exp(-sigma * f.log_n)
    rounding = 16 * _EPS * math.fsum(mags.tolist())
    return math.fsum((mags * (1 - w)).tolist()) + rounding


@dataclass(frozen=True)
class ContourValue:
    value: complex
    tail_bound: float
    quad_error: float
    nodes: int

    @property
    def bound(self) -> float:
        return self.tail_bound + self.quad_error


def _nodes(Y: float, freq: float) -> int:
    # about 8 nodes per period of the fastest oscillation
    return max(64, int(math.ceil(8 * Y * freq / (2 * math.pi))) * 2)


def riesz_contour(f: DirichletPolynomial, params: RieszParams, s, tol: float = 1e-10,
                  growth_C: float = None) -> ContourValue:
    '''
    R_N^k f(s) through the contour integral on Re z = x, |Im z| <= y_cutoff.

    The nodes +y and -y are integrated as one pair over [0, y_cutoff].

    Parameters
    ----------
    f : DirichletPolynomial
        The polynomial.
    params : RieszParams
        N, k > 1, x and the cutoff.
    s : complex or HalfPlanePoint
        Point with sigma > 0.
    tol : float, optional
        Target quadrature error, by default 1e-10.
    growth_C : float, optional
        A constant with |f(w)| <= C (1 + |w|) / Re w; when given the tail
        bound is the smaller of the two available bounds.

    Returns
    -------
    ContourValue
        value, tail bound for |y| > y_cutoff and the quadrature estimate.

    Raises
    ------
    ValueError
        If k <= 1 or sigma <= 0.
    '''
    if params.k <= 1:
        raise ValueError('riesz_contour needs k > 1, got {}.'.format(params.k))
    pt = HalfPlanePoint.of(s)
    if pt.sigma <= 0:
        raise ValueError('sigma should be > 0.')
    k, x, Y, L = params.k, params.contour_x, params.y_cutoff, params.log_N
    sw = pt.sigma + x / L
    scale = gamma(k + 1) / (2 * math.pi)

    def paired(y: np.ndarray) -> np.ndarray:
        z_up = x + 1j * y
        z_dn = x - 1j * y
        f_up = eval_grid(f, sw, pt.t + y / L)
        f_dn = eval_grid(f, sw, pt.t - y / L)
        return f_up * np.exp(z_up) / z_up ** (k + 1) + f_dn * np.exp(z_dn) / z_dn ** (k + 1)

    freq = 1 + math.log(max(f.degree(), 2)) / L
    B = f.weighted_l1(sw)
    val, err, n = adaptive_simpson(paired, 0.0, Y, tol / max(scale, _EPS), n0=_nodes(Y, freq), max_levels=10)

    tail = gamma(k + 1) * B * math.exp(x) * Y ** (-k) / (math.pi * k)
    if growth_C is not None:
        grow = gamma(k + 1) * math.exp(x) * growth_C / (math.pi * sw) * (
            (1 + abs(pt.s) + x / L) * Y ** (-k) / k + Y ** (1 - k) / ((k - 1) * L))
        tail = min(tail, grow)
    rounding = 1e3 * _EPS * gamma(k + 1) * B * math.exp(x) / x ** k
    logger.debug('riesz_contour N=%d k=%s: %d intervals, quad %.2e, tail %.2e', params.N, k, n, err, tail)
    return ContourValue(complex(scale * val), float(tail), float(scale * err + rounding), n)


def hankel_check(u: float, k: float, x: float, y_cutoff: float = DEFAULT_CUTOFF, tol: float = 1e-10) -> float:
    '''
    |Gamma(k+1) int_{|y| <= cutoff} e^(u z) / z^(k+1) dy / 2pi - target|
    with target u^k for u >= 0 and 0 for u < 0.

    Raises
    ------
    ValueError
        If x <= 0 or k <= 0.
    '''
    if not x > 0:
        raise ValueError('x should be > 0.')
    if not k > 0:
        raise ValueError('k should be > 0.')
    if not y_cutoff > 0:
        raise ValueError('y_cutoff should be > 0.')
    scale = gamma(k + 1) / (2 * math.pi)

    def paired(y: np.ndarray) -> np.ndarray:
        # conjugate pair of nodes
        z = x + 1j * y
        return 2 * (np.exp(u * z) / z ** (k + 1)).real

    n0 = _nodes(y_cutoff, max(1.0, abs(u)))
    val, _, _ = adaptive_simpson(paired, 0.0, y_cutoff, tol / scale, n0=n0, max_levels=10)
    target = u ** k if u > 0 else 0.0
    return abs(scale * val.real - target)


@dataclass(frozen=True)
class ConvergencePoint:
    N: int
    k: float
    sigma: float
    t: float
    abs_error: float
    bound: float

    def row(self) -> dict:
        return {"N": self.N, "k": self.k, "sigma": self.sigma, "t": self.t,
                "abs_error": self.abs_error, "bound": self.bound}


def convergence_study(f: DirichletPolynomial, k: float, s, N_list: Sequence[int]) -> List[ConvergencePoint]:
    '''
    |R_N^k f(s) - f(s)| along increasing N, each with its coefficient bound.
    '''
    if k <= 1:
        raise ValueError('k should be > 1.')
    pt = HalfPlanePoint.of(s).require_interior()
    Ns = [int(N) for N in N_list]
    if any(b <= a for (a, b) in zip(Ns, Ns[1:])):
        raise ValueError('N_list should be increasing.')
    target = evaluate(f, pt)
    out = []
    for N in Ns:
        params = RieszParams(N, k)
        err = abs(riesz_mean(f, params, pt) - target)
        out.append(ConvergencePoint(N, k, pt.sigma, pt.t, err, riesz_error_bound(f, params, pt)))
        logger.debug('riesz N=%d k=%s: error %.3e', N, k, err)
    return out

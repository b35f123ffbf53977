'''
Quadrature rules on uniform grids.

All rules take samples on a uniform grid of step h; the grid is
never rebuilt here, so callers control where the integrand is evaluated.
The rules themselves are scipy.integrate's; this module adds the
Simpson error ratio the deterministic bounds need and a node-reusing
step halving.
'''
import logging
import math
from typing import Callable, Tuple
import numpy as np
from scipy import integrate

logger = logging.getLogger(__name__)


def _check_simpson(values: np.ndarray):
    n = values.shape[0] - 1
    if n < 2 or n % 2:
        raise ValueError('Simpson needs an even number of intervals >= 2.')


def simpson(values: np.ndarray, h: float) -> complex:
    ''' Composite Simpson sum of uniformly spaced samples, even interval count. '''
    values = np.asarray(values)
    _check_simpson(values)
    return integrate.simpson(values, dx=h)


def trapezoid(values: np.ndarray, h: float) -> complex:
    values = np.asarray(values)
    if values.shape[0] < 2:
        raise ValueError('trapezoid needs at least 2 samples.')
    return integrate.trapezoid(values, dx=h)


def cumulative_trapezoid(values: np.ndarray, h: float) -> np.ndarray:
    '''
    Running trapezoid integrals I_0 = 0, I_1, ..., I_n.
    '''
    values = np.asarray(values, dtype=np.float64)
    if values.shape[0] < 2:
        raise ValueError('trapezoid needs at least 2 samples.')
    return integrate.cumulative_trapezoid(values, dx=h, initial=0)


def simpson_ratio_error(theta: np.ndarray) -> np.ndarray:
    '''
    |r(theta) - 1| where r(theta) = theta (2 + cos theta) / (3 sin theta) is
    the ratio of composite Simpson to the exact integral of e^(i omega t)
    per panel, theta = h omega.

    Valid for 0 <= theta < pi.
    '''
    theta = np.abs(np.asarray(theta, dtype=np.float64))
    if np.any(theta >= math.pi):
        raise ValueError('theta should be < pi.')
    out = np.empty_like(theta)
    small = theta < 1e-2
    t = theta[small]
    # r - 1 = theta^4/180 + theta^6/1512 + ...
    out[small] = t ** 4 / 180 + t ** 6 / 1512
    t = theta[~small]
    out[~small] = np.abs(t * (2 + np.cos(t)) / (3 * np.sin(t)) - 1)
    return out


def power_abs(values: np.ndarray, p: float) -> np.ndarray:
    '''
    |v|^p. Even integer p uses exact integer powers of |v|^2; otherwise
    exp((p/2) ln |v|^2), with |v| = 0 flushed to 0.
    '''
    sq = values.real ** 2 + values.imag ** 2
    if float(p).is_integer() and int(p) % 2 == 0:
        return sq ** (int(p) // 2)
    out = np.zeros_like(sq)
    pos = sq > 0
    out[pos] = np.exp(0.5 * p * np.log(sq[pos]))
    return out


def adaptive_simpson(func: Callable[[np.ndarray], np.ndarray], a: float, b: float,
                     tol: float, n0: int = 64, max_levels: int = 14) -> Tuple[complex, float, int]:
    '''
    Simpson on [a, b] with global halving of the step until two successive
    sums agree to tol.

    func maps an array of nodes to an array of values. Previously computed
    nodes are reused at every level.

    Returns
    -------
    Tuple[complex, float, int]
        (integral, Richardson error estimate |S_h - S_2h| / 15, intervals used)
    '''
    if b <= a:
        raise ValueError('need a < b.')
    n = n0 + (n0 % 2)
    x = np.linspace(a, b, n + 1)
    y = func(x)
    prev = complex(simpson(y, (b - a) / n))
    err = math.inf
    for level in range(max_levels):
        mid = x[:-1] + 0.5 * (b - a) / n
        ym = func(mid)
        merged = np.empty(2 * n + 1, dtype=np.result_type(y, ym))
        merged[0::2] = y
        merged[1::2] = ym
        x = np.linspace(a, b, 2 * n + 1)
        y = merged
        n *= 2
        cur = complex(simpson(y, (b - a) / n))
        err = abs(cur - prev) / 15
        prev = cur
        logger.debug('adaptive_simpson level %d: n=%d err=%.3e', level, n, err)
        if err <= tol:
            break
    return prev, err, n


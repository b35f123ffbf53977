'''
Dirichlet polynomials.

A Dirichlet polynomial of length N is

    f(s) = a_1 1^-s + a_2 2^-s + ... + a_N N^-s,    s = sigma + i t.

Coefficients are stored densely, index n-1 holds a_n.

      translate_h(f, k)          translate_v(f, tau)
 f(s) +--------------> f(s + k)  +----------------> f(s + i tau)
      a_n -> a_n n^-k            a_n -> a_n n^-(i tau)

JSON shape: { "n_max": N, "coeffs": [[re, im], ...] }
'''
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union
import numpy as np
from .codec import DictWrapper, HomoListWrapper, PositiveIntKind, ComplexKind, JsonCodec
from . import parallel

logger = logging.getLogger(__name__)

PolynomialWrapper = DictWrapper([
    ("n_max", PositiveIntKind()),
    ("coeffs", HomoListWrapper(codec=ComplexKind()))
])

MAX_N = 10 ** 6


@lru_cache(maxsize=32)
def log_table(n_max: int) -> np.ndarray:
    '''
    ln 1, ln 2, ..., ln n_max as a read-only array (shared, cached).
    '''
    if n_max < 1:
        raise ValueError('n_max should be >= 1.')
    t = np.log(np.arange(1, n_max + 1, dtype=np.float64))
    t.setflags(write=False)
    return t


@dataclass(frozen=True)
class HalfPlanePoint:
    '''
    A point s = sigma + i t of the closed right half-plane.
    '''
    sigma: float
    t: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.sigma) and math.isfinite(self.t)):
            raise ValueError('sigma and t should be finite.')
        if self.sigma < 0:
            raise ValueError('sigma should be >= 0, got {}.'.format(self.sigma))

    @property
    def s(self) -> complex:
        return complex(self.sigma, self.t)

    def in_half_plane(self, kappa: float) -> bool:
        ''' Membership in C_kappa = { sigma > kappa }. '''
        return self.sigma > kappa

    def require_interior(self):
        if self.sigma <= 0:
            raise ValueError('point should lie in the open half-plane (sigma > 0).')
        return self

    @staticmethod
    def of(s: Union['HalfPlanePoint', complex, float]) -> 'HalfPlanePoint':
        if isinstance(s, HalfPlanePoint):
            return s
        z = complex(s)
        return HalfPlanePoint(z.real, z.imag)


def _as_complex(s) -> complex:
    if isinstance(s, HalfPlanePoint):
        return s.s
    return complex(s)


class DirichletPolynomial():
    '''
    Immutable dense Dirichlet polynomial.

    Please treat instances as values; every operation returns a new one.
    '''

    def __init__(self, coeffs: Sequence[complex], n_max: int = None):
        '''
        Create a polynomial.

        Parameters
        ----------
        coeffs : Sequence[complex]
            a_1, a_2, ... in order of n.
        n_max : int, optional
            Declared length N. Shorter coeffs are padded with zeros,
            by default len(coeffs).

        Raises
        ------
        ValueError
            If N < 1, N > MAX_N, coeffs is longer than N or holds NaN/Inf.
        '''
        arr = np.array(coeffs, dtype=np.complex128).ravel()
        if n_max is None:
            n_max = arr.shape[0]
        n_max = int(n_max)
        if n_max < 1:
            raise ValueError('n_max should be >= 1.')
        if n_max > MAX_N:
            raise ValueError('n_max should be <= {}.'.format(MAX_N))
        if arr.shape[0] > n_max:
            raise ValueError('{} coefficients given for n_max = {}.'.format(arr.shape[0], n_max))
        if not np.all(np.isfinite(arr)):
            raise ValueError('coefficients should be finite.')
        if arr.shape[0] < n_max:
            arr = np.concatenate([arr, np.zeros(n_max - arr.shape[0], dtype=np.complex128)])
        arr.setflags(write=False)
        self._coeffs = arr

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def n_max(self) -> int:
        return self._coeffs.shape[0]

    @property
    def log_n(self) -> np.ndarray:
        return log_table(self.n_max)

    @staticmethod
    def monomial(n: int, c: complex = 1.0) -> 'DirichletPolynomial':
        ''' c n^-s '''
        if n < 1:
            raise ValueError('n should be >= 1.')
        a = np.zeros(n, dtype=np.complex128)
        a[n - 1] = c
        return DirichletPolynomial(a)

    @staticmethod
    def constant(c: complex = 1.0) -> 'DirichletPolynomial':
        return DirichletPolynomial([c])

    def coefficient(self, n: int) -> complex:
        if n < 1:
            raise ValueError('n should be >= 1.')
        if n > self.n_max:
            return 0j
        return complex(self._coeffs[n - 1])

    def degree(self) -> int:
        ''' Largest n with a_n != 0 (1 for the zero polynomial). '''
        nz = np.flatnonzero(self._coeffs)
        return int(nz[-1]) + 1 if nz.size else 1

    def weighted_l1(self, sigma: float = 0.0) -> float:
        ''' sum |a_n| n^-sigma, the trivial bound for |f| on Re s >= sigma. '''
        w = np.abs(self._coeffs) * np.exp(-sigma * self.log_n)
        return math.fsum(w.tolist())

    def l2_squared(self, sigma: float = 0.0) -> float:
        ''' sum |a_n|^2 n^-2sigma '''
        w = (self._coeffs.real ** 2 + self._coeffs.imag ** 2) * np.exp(-2 * sigma * self.log_n)
        return math.fsum(w.tolist())

    def truncate(self, m: int) -> 'DirichletPolynomial':
        ''' Partial sum over n <= m. '''
        m = max(1, min(int(m), self.n_max))
        return DirichletPolynomial(self._coeffs[:m])

    def _binary(self, other, op) -> 'DirichletPolynomial':
        n = max(self.n_max, other.n_max)
        a = np.zeros(n, dtype=np.complex128)
        b = np.zeros(n, dtype=np.complex128)
        a[:self.n_max] = self._coeffs
        b[:other.n_max] = other.coeffs
        return DirichletPolynomial(op(a, b))

    def __add__(self, other: 'DirichletPolynomial') -> 'DirichletPolynomial':
        return self._binary(other, np.add)

    def __sub__(self, other: 'DirichletPolynomial') -> 'DirichletPolynomial':
        return self._binary(other, np.subtract)

    def __neg__(self) -> 'DirichletPolynomial':
        return DirichletPolynomial(-self._coeffs)

    def __mul__(self, other) -> 'DirichletPolynomial':
        '''
        Scalar multiple, or the Dirichlet product with another polynomial:
        (f g)(s) = f(s) g(s), c_k = sum over m n = k of a_m b_n.
        '''
        if not isinstance(other, DirichletPolynomial):
            return DirichletPolynomial(self._coeffs * complex(other))

        nc = self.n_max * other.n_max
        if nc > MAX_N:
            raise ValueError('product length {} exceeds {}.'.format(nc, MAX_N))
        c = np.zeros(nc, dtype=np.complex128)
        b = other.coeffs
        nb = other.n_max
        for m in np.flatnonzero(self._coeffs) + 1:
            # c[m n - 1] += a_m b_n for n = 1..nb
            c[m - 1:m * nb:m] += self._coeffs[m - 1] * b
        return DirichletPolynomial(c)

    def __rmul__(self, other) -> 'DirichletPolynomial':
        return self.__mul__(other)

    def power(self, m: int) -> 'DirichletPolynomial':
        ''' f^m by repeated Dirichlet products. '''
        if m < 1:
            raise ValueError('power should be >= 1.')
        r = self
        for _ in range(m - 1):
            r = r * self
        return r

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirichletPolynomial):
            return NotImplemented
        return self.n_max == other.n_max and bool(np.array_equal(self._coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.n_max, self._coeffs.tobytes()))

    def __repr__(self):
        return 'DirichletPolynomial(n_max={})'.format(self.n_max)

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "coeffs": [complex(z) for z in self._coeffs]
        }

    @staticmethod
    def from_dict(d: dict) -> 'DirichletPolynomial':
        return DirichletPolynomial(d['coeffs'], n_max=d['n_max'])

    def encode(self) -> str:
        ''' Encode into the JSON shape. '''
        return JsonCodec(PolynomialWrapper).encode(self.to_dict())

    @staticmethod
    def decode(raw: Union[str, dict]) -> 'DirichletPolynomial':
        ''' Return a DirichletPolynomial from JSON text or a parsed object. '''
        return DirichletPolynomial.from_dict(JsonCodec(PolynomialWrapper).decode(raw))


def evaluate(f: DirichletPolynomial, s: Union[HalfPlanePoint, complex, float]) -> complex:
    '''
    f(s) by direct summation in ascending n.

    Real and imaginary parts are summed with math.fsum (exactly rounded),
    so the result does not depend on summation order or thread count.

    Parameters
    ----------
    f : DirichletPolynomial
        The polynomial.
    s : Union[HalfPlanePoint, complex, float]
        Evaluation point; any finite complex number is accepted.

    Returns
    -------
    complex
        f(s).
    '''
    z = _as_complex(s)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError('s should be finite.')
    ln = f.log_n
    mod = np.exp(-z.real * ln)
    ph = z.imag * ln
    a = f.coeffs
    # a_n n^-sigma (cos(t ln n) - i sin(t ln n))
    c, sn = np.cos(ph), np.sin(ph)
    re = mod * (a.real * c + a.imag * sn)
    im = mod * (a.imag * c - a.real * sn)
    return complex(math.fsum(re.tolist()), math.fsum(im.tolist()))


def _grid_rows(n_max: int) -> int:
    # keep one block near 2^21 complex entries
    return max(1, (1 << 21) // n_max)


def eval_grid(f: DirichletPolynomial, sigma: float, t: np.ndarray) -> np.ndarray:
    '''
    f(sigma + i t_j) for every t_j of an array.

    Blocks of the t-grid are evaluated in parallel; each value is a
    row sum over n, independent of the blocking.
    '''
    t = np.asarray(t, dtype=np.float64)
    flat = t.ravel()
    b = f.coeffs * np.exp(-sigma * f.log_n)
    nz = np.flatnonzero(b)
    if nz.size == 0:
        return np.zeros(t.shape, dtype=np.complex128)
    b = b[nz]
    ln = f.log_n[nz]

    def block(start: int, stop: int) -> np.ndarray:
        ph = np.outer(flat[start:stop], ln)
        return (np.exp(-1j * ph) * b).sum(axis=1)

    parts = parallel.map_chunks(block, flat.shape[0], _grid_rows(nz.size))
    if not parts:
        return np.zeros(t.shape, dtype=np.complex128)
    return np.concatenate(parts).reshape(t.shape)


def translate_h(f: DirichletPolynomial, kappa: float) -> DirichletPolynomial:
    '''
    Horizontal translation H_kappa f(s) = f(s + kappa).

    Raises
    ------
    ValueError
        If kappa < 0.
    '''
    if not math.isfinite(kappa) or kappa < 0:
        raise ValueError('kappa should be >= 0, got {}.'.format(kappa))
    if kappa == 0:
        return f
    return DirichletPolynomial(f.coeffs * np.exp(-kappa * f.log_n))


def translate_v(f: DirichletPolynomial, tau: float) -> DirichletPolynomial:
    '''
    Vertical translation V_tau f(s) = f(s + i tau); |a_n| is unchanged.
    '''
    if not math.isfinite(tau):
        raise ValueError('tau should be finite.')
    if tau == 0:
        return f
    return DirichletPolynomial(f.coeffs * np.exp(-1j * tau * f.log_n))

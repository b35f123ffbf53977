'''
Multiplicative arithmetic.

The Bohr lift sends n = p_1^a_1 p_2^a_2 ... p_J^a_J to its exponent
vector (a_1, ..., a_J) over the first J primes:

    12 = 2^2 3^1  -->  (2, 1)
     1            -->  ()

Factorization uses a smallest-prime-factor table, built once per size
and read-only afterwards, so every lift costs O(log n).
'''
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Tuple
import numpy as np
from .errors import InsufficientCharacterLength

logger = logging.getLogger(__name__)

MAX_N = 10 ** 6
_MIN_TABLE = 1 << 10


def sieve_primes(limit: int) -> Tuple[int, ...]:
    '''
    All primes <= limit, in increasing order.

    Parameters
    ----------
    limit : int
        Upper bound, >= 2.

    Returns
    -------
    Tuple[int, ...]
        The primes.

    Raises
    ------
    ValueError
        If limit < 2.
    '''
    if limit < 2:
        raise ValueError('limit should be >= 2.')
    limit = int(limit)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p::p] = False
    return tuple(int(x) for x in np.flatnonzero(sieve))


class FactorTable():
    '''
    Smallest prime factor of every n <= size, plus prime indices.
    '''

    def __init__(self, size: int):
        if size < 2:
            raise ValueError('size should be >= 2.')
        if size > MAX_N:
            raise ValueError('size should be <= {}.'.format(MAX_N))
        spf = np.zeros(size + 1, dtype=np.int64)
        for p in range(2, size + 1):
            if spf[p] == 0:
                block = spf[p::p]
                block[block == 0] = p
        spf.setflags(write=False)
        self.size = size
        self.spf = spf
        self.primes = tuple(int(p) for p in np.flatnonzero(spf[2:] == np.arange(2, size + 1)) + 2)
        # index j (0-based) of each prime p_j
        self.prime_index = {p: j for (j, p) in enumerate(self.primes)}
        # n = spf(n) * parent[n], spf(n) = p_{spf_index[n]}; -1 marks n < 2
        index = np.full(size + 1, -1, dtype=np.int64)
        index[list(self.primes)] = np.arange(len(self.primes))
        self.spf_index = index[spf]
        self.spf_index.setflags(write=False)
        parent = np.ones(size + 1, dtype=np.int64)
        parent[2:] = np.arange(2, size + 1) // spf[2:]
        parent.setflags(write=False)
        self.parent = parent
        logger.debug('factor table up to %d: %d primes', size, len(self.primes))

    def factorize(self, n: int) -> Tuple[Tuple[int, int], ...]:
        ''' ((p, a), ...) in increasing p. '''
        if n < 1:
            raise ValueError('n should be >= 1.')
        if n > self.size:
            raise ValueError('n = {} exceeds the table size {}.'.format(n, self.size))
        out = []
        while n > 1:
            p = int(self.spf[n])
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            out.append((p, a))
        return tuple(out)


@lru_cache(maxsize=8)
def _table_of_size(size: int) -> FactorTable:
    return FactorTable(size)


def factor_table(n: int) -> FactorTable:
    '''
    A shared table covering n; sizes are rounded up to powers of two.
    '''
    if n > MAX_N:
        raise ValueError('n = {} exceeds {}.'.format(n, MAX_N))
    size = _MIN_TABLE
    while size < n:
        size *= 2
    return _table_of_size(min(size, MAX_N))


def nth_primes(count: int) -> Tuple[int, ...]:
    ''' The first count primes. '''
    if count < 1:
        raise ValueError('count should be >= 1.')
    # p_k < k (ln k + ln ln k) for k >= 6
    bound = 15 if count < 6 else int(count * (math.log(count) + math.log(math.log(count)))) + 1
    return sieve_primes(bound)[:count]


def prime_count_needed(n: int) -> int:
    '''
    J such that every prime factor of n is among p_1..p_J (0 for n = 1).
    '''
    if n < 1:
        raise ValueError('n should be >= 1.')
    if n == 1:
        return 0
    table = factor_table(n)
    largest = table.factorize(n)[-1][0]
    return table.prime_index[largest] + 1


@dataclass(frozen=True)
class BohrIndex:
    '''
    Exponents (a_1, ..., a_J) over the first J primes.
    '''
    exponents: Tuple[int, ...]

    def __post_init__(self):
        if any(a < 0 for a in self.exponents):
            raise ValueError('exponents should be >= 0.')

    @property
    def length(self) -> int:
        return len(self.exponents)

    def value(self) -> int:
        ''' Reconstruct n = prod p_j^a_j. '''
        if not self.exponents:
            return 1
        r = 1
        for p, a in zip(nth_primes(len(self.exponents)), self.exponents):
            r *= p ** a
        return r

    def __add__(self, other: 'BohrIndex') -> 'BohrIndex':
        n = max(self.length, other.length)
        a = list(self.exponents) + [0] * (n - self.length)
        b = list(other.exponents) + [0] * (n - other.length)
        return BohrIndex(tuple(x + y for (x, y) in zip(a, b)))

    def padded(self, J: int) -> Tuple[int, ...]:
        if J < self.length:
            raise ValueError('J = {} is shorter than the index.'.format(J))
        return self.exponents + (0,) * (J - self.length)


def bohr_lift(n: int) -> BohrIndex:
    '''
    The exponent vector of the prime factorization of n.

    Raises
    ------
    ValueError
        If n < 1 or n > MAX_N.
    '''
    if n < 1:
        raise ValueError('n should be >= 1.')
    if n == 1:
        return BohrIndex(())
    table = factor_table(n)
    fac = table.factorize(n)
    J = table.prime_index[fac[-1][0]] + 1
    exps = [0] * J
    for (p, a) in fac:
        exps[table.prime_index[p]] = a
    return BohrIndex(tuple(exps))


def divisor_count(n: int) -> int:
    '''
    d(n), the number of divisors of n.
    '''
    if n < 1:
        raise ValueError('n should be >= 1.')
    r = 1
    for a in bohr_lift(n).exponents:
        r *= a + 1
    return r


@lru_cache(maxsize=8)
def divisor_table(n_max: int) -> np.ndarray:
    '''
    d(1), ..., d(n_max) as a read-only int array.
    '''
    if n_max < 1:
        raise ValueError('n_max should be >= 1.')
    d = np.zeros(n_max + 1, dtype=np.int64)
    for i in range(1, n_max + 1):
        d[i::i] += 1
    d = d[1:]
    d.setflags(write=False)
    return d


def prime_count_needed_upto(n_max: int) -> int:
    ''' pi(n_max): primes needed to evaluate characters at every n <= n_max. '''
    if n_max < 2:
        return 0
    return len(sieve_primes(n_max))


@dataclass(frozen=True)
class HelsonProductCheck:
    checkpoints: Tuple[int, ...]
    partial_sums: Tuple[float, ...]
    product: float
    monotone: bool
    bounded: bool


def helson_product_check(sigma: float, n_max: int, checkpoints: Sequence[int] = None) -> HelsonProductCheck:
    '''
    Partial sums of sum d(n) |z(n)|^2 for z = (2^-s, 3^-s, ...) against
    prod_j (1 - |z_j|^2)^-2 over the primes <= n_max.

    |z(n)| = n^-sigma. Every n <= n_max is n_max-smooth, so the partial sums
    never exceed the finite product, and the product converges as the
    prime bound grows when sigma > 1/2.

    Parameters
    ----------
    sigma : float
        Real part, > 1/2.
    n_max : int
        Last n summed.
    checkpoints : Sequence[int], optional
        Where partial sums are recorded, by default powers of 10 and n_max.
    '''
    if sigma <= 0.5:
        raise ValueError('sigma should be > 1/2.')
    if n_max < 2:
        raise ValueError('n_max should be >= 2.')
    if checkpoints is None:
        checkpoints = [10 ** k for k in range(1, 7) if 10 ** k < n_max] + [n_max]
    checkpoints = tuple(sorted(set(int(c) for c in checkpoints if 1 <= c <= n_max)))

    n = np.arange(1, n_max + 1, dtype=np.float64)
    terms = divisor_table(n_max) * np.exp(-2 * sigma * np.log(n))
    cums = np.cumsum(terms)
    partial = tuple(float(cums[c - 1]) for c in checkpoints)

    log_prod = 0.0
    for p in sieve_primes(n_max):
        log_prod -= 2 * math.log1p(-p ** (-2 * sigma))
    product = math.exp(log_prod)

    monotone = all(b >= a for (a, b) in zip(partial, partial[1:]))
    bounded = all(x <= product * (1 + 1e-12) for x in partial)
    return HelsonProductCheck(checkpoints, partial, product, monotone, bounded)


def _peel(ns: np.ndarray, J: int = None) -> Iterator[Tuple[np.ndarray, np.ndarray]]:
    '''
    Strip the smallest prime factor off every n of ns until 1 remains,
    yielding (positions still > 1, 0-based index of the prime stripped).

    Raises
    ------
    InsufficientCharacterLength
        If J is given and some n has a prime factor beyond p_J.
    '''
    if ns.size == 0:
        return
    if ns.min() < 1:
        raise ValueError('n should be >= 1.')
    table = factor_table(int(ns.max()))
    m = ns.copy()
    live = np.flatnonzero(m > 1)
    while live.size:
        j = table.spf_index[m[live]]
        if J is not None:
            over = np.flatnonzero(j >= J)
            if over.size:
                raise InsufficientCharacterLength(
                    'n = {} needs more than the {} primes given.'.format(int(ns[live[over[0]]]), J))
        yield live, j
        m[live] = table.parent[m[live]]
        live = live[m[live] > 1]


def lift_dot(ns: Sequence[int], weights: np.ndarray) -> np.ndarray:
    '''
    sum_j a_j weights[j] for every n = prod p_j^a_j of ns.

    The smallest prime factor is peeled off each n until 1 remains, so the
    cost is O(len(ns) log max(ns)) and no exponent matrix is formed.

    Parameters
    ----------
    ns : Sequence[int]
        Integers >= 1.
    weights : np.ndarray
        One row per prime p_1, p_2, ...; shape (J,) or (J, S).

    Returns
    -------
    np.ndarray
        Shape (len(ns),) or (len(ns), S).

    Raises
    ------
    InsufficientCharacterLength
        If some n has a prime factor beyond p_J.
    '''
    ns = np.asarray(ns, dtype=np.int64).ravel()
    w = np.asarray(weights)
    out = np.zeros((ns.shape[0],) + w.shape[1:], dtype=np.result_type(w.dtype, np.float64))
    for (live, j) in _peel(ns, w.shape[0]):
        out[live] += w[j]
    return out


def lift_prod(ns: Sequence[int], z: np.ndarray) -> np.ndarray:
    '''
    The monomials prod_j z_j^a_j for every n = prod p_j^a_j of ns.
    '''
    ns = np.asarray(ns, dtype=np.int64).ravel()
    z = np.asarray(z, dtype=np.complex128).ravel()
    out = np.ones(ns.shape[0], dtype=np.complex128)
    for (live, j) in _peel(ns, z.shape[0]):
        out[live] *= z[j]
    return out


def lift_lengths(ns: Sequence[int]) -> np.ndarray:
    ''' prime_count_needed(n) for every n of ns. '''
    ns = np.asarray(ns, dtype=np.int64).ravel()
    out = np.zeros(ns.shape[0], dtype=np.int64)
    # peeled primes only grow
    for (live, j) in _peel(ns):
        out[live] = j + 1
    return out

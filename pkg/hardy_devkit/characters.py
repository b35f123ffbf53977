'''
Characters of the infinite torus, restricted to the first J primes.

A character chi is fixed by its values at the primes, chi(p_j) = e^(i theta_j),
and acts completely multiplicatively:

    n = 2^a_1 3^a_2 ... p_J^a_J   -->   chi(n) = e^(i (a_1 theta_1 + ... + a_J theta_J))

Only the angles theta_j are stored, so twisting a character many times
cannot push |chi(n)| away from 1.

JSON shape: { "J": J, "phases": [theta_1, ...], "seed": s or null }
'''
import logging
import math
from typing import Sequence, Union
import numpy as np
from .arith import nth_primes, bohr_lift, lift_dot
from .codec import DictWrapper, HomoListWrapper, PositiveIntKind, AngleKind, NoneableIntKind, JsonCodec
from .errors import InsufficientCharacterLength
from .series import DirichletPolynomial, eval_grid
from . import rng

logger = logging.getLogger(__name__)

CharacterWrapper = DictWrapper([
    ("J", PositiveIntKind()),
    ("phases", HomoListWrapper(codec=AngleKind())),
    ("seed", NoneableIntKind())
])

TWO_PI = 2 * math.pi


def _wrap(theta: np.ndarray) -> np.ndarray:
    r = np.mod(theta, TWO_PI)
    return np.where(r >= TWO_PI, 0.0, r)


class Character():
    '''
    A point of the torus given by phases at p_1, ..., p_J.
    '''

    def __init__(self, phases: Sequence[float], seed: int = None):
        '''
        Parameters
        ----------
        phases : Sequence[float]
            theta_1, ..., theta_J. Any finite reals; stored mod 2pi.
        seed : int, optional
            Seed the phases were drawn from, by default None.

        Raises
        ------
        ValueError
            If no phase is given or a phase is not finite.
        '''
        arr = np.array(phases, dtype=np.float64).ravel()
        if arr.shape[0] < 1:
            raise ValueError('a character needs J >= 1 phases.')
        if not np.all(np.isfinite(arr)):
            raise ValueError('phases should be finite.')
        arr = _wrap(arr)
        arr.setflags(write=False)
        self._phases = arr
        self.seed = seed

    @property
    def phases(self) -> np.ndarray:
        return self._phases

    @property
    def J(self) -> int:
        return self._phases.shape[0]

    @staticmethod
    def trivial(J: int) -> 'Character':
        ''' chi = 1 at every prime. '''
        return Character(np.zeros(J))

    def values_at_primes(self) -> np.ndarray:
        ''' chi_j = e^(i theta_j) '''
        return np.exp(1j * self._phases)

    def covers(self, n: int) -> bool:
        ''' Whether every prime factor of n is among p_1..p_J. '''
        return bohr_lift(n).length <= self.J

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return bool(np.array_equal(self._phases, other.phases)) and self.seed == other.seed

    def __hash__(self):
        return hash((self._phases.tobytes(), self.seed))

    def __repr__(self):
        return 'Character(J={}, seed={})'.format(self.J, self.seed)

    def to_dict(self) -> dict:
        return {
            "J": self.J,
            "phases": [float(x) for x in self._phases],
            "seed": self.seed
        }

    @staticmethod
    def from_dict(d: dict) -> 'Character':
        if len(d['phases']) != d['J']:
            raise ValueError('J = {} but {} phases given.'.format(d['J'], len(d['phases'])))
        return Character(d['phases'], seed=d['seed'])

    def encode(self) -> str:
        return JsonCodec(CharacterWrapper).encode(self.to_dict())

    @staticmethod
    def decode(raw: Union[str, dict]) -> 'Character':
        return Character.from_dict(JsonCodec(CharacterWrapper).decode(raw))


def sample_haar(J: int, seed: int) -> Character:
    '''
    A Haar-random character: J independent uniform phases.

    Phase j is draw j of the "haar" stream keyed by seed, so it depends
    on (seed, j) only.
    '''
    if J < 1:
        raise ValueError('J should be >= 1.')
    return Character(rng.uniform_angles(seed, 'haar', J), seed=seed)


def haar_phase_block(seed: int, J: int, block: int, size: int) -> np.ndarray:
    '''
    Rows of Haar phases for Monte Carlo block number `block`.

    Block b is drawn from its own sub-stream, so sample k of an experiment
    is a function of (seed, k) for a fixed block size.
    '''
    if J < 1:
        raise ValueError('J should be >= 1.')
    return rng.uniform_angles(seed, 'monte-carlo', (size, J), sub=block)


def _phase_of(chi: Character, n: int) -> float:
    exps = bohr_lift(n).exponents
    if len(exps) > chi.J:
        raise InsufficientCharacterLength(
            'n = {} needs {} primes, the character has {}.'.format(n, len(exps), chi.J))
    return math.fsum(a * th for (a, th) in zip(exps, chi.phases.tolist()))


def char_eval(chi: Character, n: int) -> complex:
    '''
    chi(n), of modulus 1.

    Raises
    ------
    InsufficientCharacterLength
        If a prime factor of n is beyond p_J.
    '''
    ph = math.fmod(_phase_of(chi, n), TWO_PI)
    return complex(math.cos(ph), math.sin(ph))


def char_values(chi: Character, ns: Sequence[int]) -> np.ndarray:
    '''
    chi(n) for every n of ns, as one complex array.

    Phases come from the smallest-prime-factor recurrence
    phase(n) = phase(n / p) + theta_p, so n up to 10^6 needs O(n) memory.

    Raises
    ------
    InsufficientCharacterLength
        If a prime factor of some n is beyond p_J.
    '''
    ns = np.asarray(ns, dtype=np.int64).ravel()
    if ns.size == 0:
        return np.zeros(0, dtype=np.complex128)
    ph = _wrap(lift_dot(ns, chi.phases))
    return np.exp(1j * ph)


def kronecker_twist(chi: Character, tau: float) -> Character:
    '''
    Move chi along the Kronecker flow: theta_j -> theta_j - tau ln p_j (mod 2pi).

    Then chi'(n) = chi(n) n^(-i tau) for every n chi covers.
    '''
    if not math.isfinite(tau):
        raise ValueError('tau should be finite.')
    if tau == 0:
        return chi
    ln_p = np.log(np.array(nth_primes(chi.J), dtype=np.float64))
    return Character(_wrap(chi.phases - tau * ln_p), seed=chi.seed)


def _support(f: DirichletPolynomial) -> np.ndarray:
    return np.flatnonzero(f.coeffs) + 1


def vertical_limit(f: DirichletPolynomial, chi: Character) -> DirichletPolynomial:
    '''
    f_chi, with coefficients a_n chi(n).

    Raises
    ------
    InsufficientCharacterLength
        If chi does not cover some n with a_n != 0.
    '''
    ns = _support(f)
    a = np.zeros(f.n_max, dtype=np.complex128)
    a[ns - 1] = f.coeffs[ns - 1] * char_values(chi, ns)
    return DirichletPolynomial(a)


def boundary_eval(f: DirichletPolynomial, chi: Character) -> complex:
    '''
    The boundary function f*(chi) = sum a_n chi(n).
    '''
    b = vertical_limit(f, chi).coeffs
    return complex(math.fsum(b.real.tolist()), math.fsum(b.imag.tolist()))


def flow_values(f: DirichletPolynomial, chi: Character, taus: np.ndarray) -> np.ndarray:
    '''
    f*(chi p^(-i tau)) for every tau of an array.

    Equal to boundary_eval(f, kronecker_twist(chi, tau)) and to f_chi(i tau);
    computed as the latter on the whole grid at once.
    '''
    return eval_grid(vertical_limit(f, chi), 0.0, taus)

'''
Counter-based random streams.

Every random quantity in an experiment is drawn from a Philox stream keyed
by (seed, stream id). Philox is counter based, so the j-th draw of a stream
is a pure function of (seed, stream, j) and does not depend on how many
threads consumed the other streams.

Stream ids are fixed small integers, one per purpose, see STREAMS.
'''
import numpy as np
from .digest import blake2b_digest, canonical_json

# Stream ids. Never renumber: reports record seeds, not streams.
STREAMS = {
    'haar': 1,
    'monte-carlo': 2,
    'polynomial': 3,
    'points': 4,
}

SEED_MASK = (1 << 64) - 1


def _check_seed(seed: int) -> int:
    if type(seed) != int and not isinstance(seed, np.integer):
        raise ValueError('seed should be an integer.')
    return int(seed) & SEED_MASK


def stream(seed: int, name: str, sub: int = 0) -> np.random.Generator:
    '''
    Open a counter-based generator.

    Parameters
    ----------
    seed : int
        64-bit experiment seed (larger values are reduced mod 2^64).
    name : str
        One of STREAMS.
    sub : int, optional
        Sub-stream number, for experiments that need many
        independent streams of one kind, by default 0.

    Returns
    -------
    np.random.Generator
        A generator backed by Philox with key (seed, stream id, sub).
    '''
    if name not in STREAMS:
        raise ValueError('unknown stream {}'.format(name))
    if sub < 0 or sub >= (1 << 32):
        raise ValueError('sub stream should be in [0, 2^32).')
    key = _check_seed(seed) | ((STREAMS[name] | (int(sub) << 32)) << 64)
    return np.random.Generator(np.random.Philox(key=key))


def uniform_angles(seed: int, name: str, shape, sub: int = 0) -> np.ndarray:
    ''' Angles uniform on [0, 2pi), row-major draw order. '''
    g = stream(seed, name, sub)
    theta = g.random(shape) * (2 * np.pi)
    # random() < 1 but the product can round up to 2pi.
    return np.where(theta >= 2 * np.pi, 0.0, theta)


def derived_seed(seed: int, label: str, index: int = 0) -> int:
    '''
    A 64-bit seed for item `index` of a labelled family, e.g. the
    character of the k-th instance of a suite.
    '''
    h = blake2b_digest([canonical_json([_check_seed(seed), label, int(index)]).encode('utf-8')])
    return int.from_bytes(h[:8], 'big')

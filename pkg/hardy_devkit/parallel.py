'''
Deterministic parallel map and reduction.

Work is split into chunks whose boundaries depend only on the problem
size, never on the thread count. Chunk results are combined by a fixed
pairwise tree, so sums are bit-identical for any number of workers.
'''
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, Tuple, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar('T')

DEFAULT_CHUNK = 4096

_threads = 1


def set_threads(n: int):
    ''' Set the worker count. Affects speed only. '''
    global _threads
    if n < 1:
        raise ValueError('threads should be >= 1.')
    _threads = int(n)


def get_threads() -> int:
    return _threads


def chunk_bounds(n_items: int, chunk: int = DEFAULT_CHUNK) -> List[Tuple[int, int]]:
    '''
    Split range(n_items) into consecutive [start, stop) pieces.

    Parameters
    ----------
    n_items : int
        Total number of items.
    chunk : int, optional
        Items per piece, by default DEFAULT_CHUNK.

    Returns
    -------
    List[Tuple[int, int]]
        The pieces, in order.
    '''
    if chunk < 1:
        raise ValueError('chunk should be >= 1.')
    return [(a, min(a + chunk, n_items)) for a in range(0, n_items, chunk)]


def map_chunks(func: Callable[[int, int], T], n_items: int, chunk: int = DEFAULT_CHUNK) -> List[T]:
    '''
    Apply func(start, stop) to every chunk, results in chunk order.
    '''
    bounds = chunk_bounds(n_items, chunk)
    if _threads == 1 or len(bounds) == 1:
        return [func(a, b) for (a, b) in bounds]

    logger.debug('map_chunks: %d chunks on %d threads', len(bounds), _threads)
    with ThreadPoolExecutor(max_workers=_threads) as ex:
        futures = [ex.submit(func, a, b) for (a, b) in bounds]
        return [ft.result() for ft in futures]


def tree_reduce(values: Sequence[T], combine: Callable[[T, T], T]) -> T:
    '''
    Reduce by fixed pairing: ((v0 v1) (v2 v3)) ((v4 v5) ...).
    '''
    if len(values) == 0:
        raise ValueError('nothing to reduce.')
    level = list(values)
    while len(level) > 1:
        nxt = [combine(level[i], level[i + 1]) for i in range(0, len(level) - 1, 2)]
        if len(level) % 2 == 1:
            nxt.append(level[-1])
        level = nxt
    return level[0]


def tree_sum(values: Sequence[T]) -> T:
    return tree_reduce(values, lambda a, b: a + b)

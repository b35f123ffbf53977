import numpy as np
import pytest
from hardy_devkit import parallel


def test_chunk_bounds():
    assert parallel.chunk_bounds(10, 4) == [(0, 4), (4, 8), (8, 10)]
    assert parallel.chunk_bounds(0, 4) == []
    assert parallel.chunk_bounds(4, 4) == [(0, 4)]

    with pytest.raises(ValueError):
        parallel.chunk_bounds(10, 0)


def test_tree_reduce():
    assert parallel.tree_reduce([1, 2, 3, 4, 5], lambda a, b: a + b) == 15
    # fixed pairing: ((a b) (c d)) e
    assert parallel.tree_reduce(['a', 'b', 'c', 'd', 'e'], lambda x, y: '(' + x + y + ')') == '(((ab)(cd))e)'
    assert parallel.tree_sum([2.5]) == 2.5

    with pytest.raises(ValueError):
        parallel.tree_reduce([], lambda a, b: a)


def test_map_chunks_thread_invariant():
    x = np.random.default_rng(0).standard_normal(100003)

    def piece(a, b):
        return float(np.sum(x[a:b]))

    one = parallel.tree_sum(parallel.map_chunks(piece, x.shape[0], 1000))
    parallel.set_threads(4)
    try:
        assert parallel.get_threads() == 4
        four = parallel.tree_sum(parallel.map_chunks(piece, x.shape[0], 1000))
    finally:
        parallel.set_threads(1)
    assert one == four


def test_set_threads():
    with pytest.raises(ValueError):
        parallel.set_threads(0)
    assert parallel.get_threads() == 1

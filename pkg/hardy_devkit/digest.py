'''
Digests

Blake2b digests of experiment inputs, so every report row can be traced
back to the exact numbers that produced it.
'''
import hashlib
import json
from typing import Any, Iterable


def blake2b_digest(chunks: Iterable[bytes]) -> bytes:
    '''
    32-byte Blake2b digest of the concatenated chunks.

    Chunk boundaries never change the result: [b'ab', b'c'] and [b'abc']
    agree.
    '''
    m = hashlib.blake2b(digest_size=32)
    for chunk in chunks:
        m.update(chunk)
    return m.digest()


def canonical_json(obj: Any) -> str:
    '''
    Encode obj as compact, key-sorted JSON.

    Floats go through repr, so equal inputs give byte-identical text.
    '''
    # separators=(',', ':') -> no whitespace compact string
    # sort_keys -> dict key is ordered.
    return json.dumps(obj, separators=(',', ':'), sort_keys=True)


def inputs_digest(obj: Any, length: int = 16) -> str:
    '''
    Short hex digest of a JSON-able description of some inputs.

    Parameters
    ----------
    obj : Any
        dict/list/number structure describing the inputs.
    length : int, optional
        Number of hex characters kept, by default 16.

    Returns
    -------
    str
        Hex string.
    '''
    h = blake2b_digest([canonical_json(obj).encode('utf-8')])
    return h.hex()[:length]

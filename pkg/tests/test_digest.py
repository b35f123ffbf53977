from hardy_devkit import digest


def test_blake2b_digest():
    h = digest.blake2b_digest([b'hello world'])
    assert h.hex() == '256c83b297114d201b30179f3f0ef0cace9783622da5974326b436178aeef610'
    assert len(h) == 32

    # chunking never matters
    assert digest.blake2b_digest([b'hello', b' ', b'world']) == h
    assert digest.blake2b_digest(iter([b'hello world'])) == h
    assert digest.blake2b_digest([]) != h


def test_canonical_json():
    assert digest.canonical_json({"b": 1, "a": [0.1, 2]}) == '{"a":[0.1,2],"b":1}'


def test_inputs_digest():
    a = digest.inputs_digest({"sigma": 0.5, "p": 2})
    b = digest.inputs_digest({"p": 2, "sigma": 0.5})
    assert a == b
    assert len(a) == 16
    assert a != digest.inputs_digest({"p": 2, "sigma": 0.25})
    assert len(digest.inputs_digest([1, 2], length=8)) == 8
    int(a, 16)

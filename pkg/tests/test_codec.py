import math
import pytest
from hardy_devkit import codec
from hardy_devkit.errors import DeserializationError, SerializationError


def test_floatKind():
    kind = codec.FloatKind()
    assert kind.serialize(1) == 1.0
    assert kind.deserialize(0.25) == 0.25

    with pytest.raises(SerializationError):
        kind.serialize(math.nan)

    with pytest.raises(SerializationError):
        kind.serialize('1.0')

    with pytest.raises(DeserializationError):
        kind.deserialize('1.0')


def test_angleKind():
    kind = codec.AngleKind()
    assert kind.deserialize(0.0) == 0.0

    with pytest.raises(DeserializationError):
        kind.deserialize(2 * math.pi)

    with pytest.raises(DeserializationError):
        kind.deserialize(-0.1)


def test_complexKind():
    kind = codec.ComplexKind()
    assert kind.serialize(1 - 2j) == [1.0, -2.0]
    assert kind.serialize(3) == [3.0, 0.0]
    assert kind.deserialize([0.5, 1]) == 0.5 + 1j

    with pytest.raises(SerializationError):
        kind.serialize(complex(math.inf, 0))

    with pytest.raises(SerializationError):
        kind.serialize(None)

    with pytest.raises(DeserializationError):
        kind.deserialize([1.0])


def test_positiveIntKind():
    kind = codec.PositiveIntKind()
    assert kind.serialize(3) == 3
    assert kind.deserialize(1) == 1

    with pytest.raises(SerializationError):
        kind.serialize(0)

    with pytest.raises(SerializationError):
        kind.serialize(True)

    with pytest.raises(DeserializationError):
        kind.deserialize(2.0)


def test_noneableIntKind():
    kind = codec.NoneableIntKind()
    assert kind.serialize(None) is None
    assert kind.deserialize(None) is None
    assert kind.deserialize(5) == 5

    with pytest.raises(DeserializationError):
        kind.deserialize('5')


def test_dict_wrapper():
    wrapper = codec.DictWrapper([
        ("n", codec.PositiveIntKind()),
        ("zs", codec.HomoListWrapper(codec=codec.ComplexKind())),
    ])
    c = codec.JsonCodec(wrapper)
    text = c.encode({"n": 2, "zs": [1j, 2]})
    assert text == '{"n":2,"zs":[[0.0,1.0],[2.0,0.0]]}'
    assert c.decode(text) == {"n": 2, "zs": [1j, 2 + 0j]}

    with pytest.raises(SerializationError):
        c.encode({"n": 2})

    with pytest.raises(DeserializationError):
        c.decode('{"n": 2}')

    with pytest.raises(DeserializationError):
        c.decode('{"n": 2, "zs": {}}')

    with pytest.raises(DeserializationError):
        c.decode('not json')

'''
JSON Encoding/Decoding.

Polynomials and characters travel between runs as JSON objects,
e.g. { "n_max": 2, "coeffs": [[1.0, 0.0], [0.5, -0.5]] }.

JSON itself only knows "items":
1) numbers
2) lists
3) objects with string keys

But the real world objects are complex numbers, angles,
counts that must be positive, seeds that may be absent.

This module exists for some pre-defined
real world object => "item" conversion.

                         serialize
 "real world object" +--------------> item +-------> JSON text
                     <--------------+      <-------+
                        deserialize
'''
import math
import numbers
from typing import Any, List, Tuple, Union
import json
from .digest import canonical_json
from .errors import SerializationError, DeserializationError


def _is_pure_int(a) -> bool:
    return type(a) == int


def _is_real(a) -> bool:
    return type(a) in (int, float)


class ScalarKind():
    pass


class FloatKind(ScalarKind):
    '''
    A finite real number. NaN and Inf are rejected both ways.
    '''

    def serialize(self, obj: float) -> float:
        if not _is_real(obj) and not hasattr(obj, '__float__'):
            raise SerializationError('expect a real number', obj)
        v = float(obj)
        if not math.isfinite(v):
            raise SerializationError('expect a finite number', obj)
        return v

    def deserialize(self, serial) -> float:
        if not _is_real(serial):
            raise DeserializationError('expect a JSON number', serial)
        v = float(serial)
        if not math.isfinite(v):
            raise DeserializationError('expect a finite number', serial)
        return v


class AngleKind(FloatKind):
    '''
    An angle in [0, 2*pi).
    '''

    def deserialize(self, serial) -> float:
        v = super().deserialize(serial)
        if not (0.0 <= v < 2 * math.pi):
            raise DeserializationError('angle out of [0, 2pi)', serial)
        return v


class ComplexKind(ScalarKind):
    '''
    A complex number stored as the pair [re, im].
    '''

    def __init__(self):
        self._part = FloatKind()

    def serialize(self, obj: complex) -> List[float]:
        try:
            z = complex(obj)
        except TypeError:
            raise SerializationError('expect a complex number', obj)
        return [self._part.serialize(z.real), self._part.serialize(z.imag)]

    def deserialize(self, serial) -> complex:
        if not isinstance(serial, list) or len(serial) != 2:
            raise DeserializationError('expect [re, im] pair', serial)
        re, im = serial
        return complex(self._part.deserialize(re), self._part.deserialize(im))


class PositiveIntKind(ScalarKind):
    '''
    An integer >= 1, e.g. a degree or a prime count.
    '''

    def serialize(self, obj: int) -> int:
        if not isinstance(obj, numbers.Integral) or isinstance(obj, bool) or obj < 1:
            raise SerializationError('expect a positive integer', obj)
        return int(obj)

    def deserialize(self, serial) -> int:
        if not _is_pure_int(serial) or serial < 1:
            raise DeserializationError('expect a positive integer', serial)
        return serial


class NoneableIntKind(ScalarKind):
    '''
    An integer, or None (encoded as JSON null).
    '''

    def serialize(self, obj: Union[int, None]) -> Union[int, None]:
        if obj is None:
            return None
        if not _is_pure_int(obj):
            raise SerializationError('expect an integer or None', obj)
        return obj

    def deserialize(self, serial) -> Union[int, None]:
        if serial is None:
            return None
        if not _is_pure_int(serial):
            raise DeserializationError('expect an integer or null', serial)
        return serial


class BaseWrapper():
    ''' BaseWrapper is a container for complex types to be encode/decoded. '''
    pass


class DictWrapper(BaseWrapper):
    ''' DictWrapper is a container for parsing dict like objects. '''

    def __init__(self, list_of_tuples: List[Tuple[str, Union[BaseWrapper, ScalarKind]]]):
        '''Constructor

        Parameters
        ----------
        list_of_tuples : List[Tuple[str, Union[BaseWrapper, ScalarKind]]]
            A list of tuples.
            eg. [(key, codec), (key, codec) ... ])
            key is a string.
            codec is either a BaseWrapper, or a ScalarKind.
        '''
        self.keys = [x[0] for x in list_of_tuples]
        self.codecs = [x[1] for x in list_of_tuples]


class HomoListWrapper(BaseWrapper):
    '''
    HomoListWrapper is a container for parsing a list,
    the items in the list are of the same type.
    '''

    def __init__(self, codec: Union[BaseWrapper, ScalarKind]):
        self.codec = codec


def pack(obj, wrapper: Union[BaseWrapper, ScalarKind]) -> Any:
    '''Pack a Python object into a JSON item according to wrapper.

    Parameters
    ----------
    obj : Any
        A dict, a list, or a number/complex/any...
    wrapper : Union[BaseWrapper, ScalarKind]
        A Wrapper.

    Returns
    -------
    Any
        A JSON-able item.

    Raises
    ------
    SerializationError
        If a key is missing or the wrapper is unknown.
    '''
    if isinstance(wrapper, ScalarKind):
        return wrapper.serialize(obj)

    if isinstance(wrapper, DictWrapper):
        r = {}
        for (key, codec) in zip(wrapper.keys, wrapper.codecs):
            if key not in obj:
                raise SerializationError('missing key "{}"'.format(key), obj)
            r[key] = pack(obj[key], codec)
        return r

    if isinstance(wrapper, HomoListWrapper):
        return [pack(item, wrapper.codec) for item in obj]

    raise SerializationError('wrapper type is unknown. {}'.format(wrapper))


def unpack(packed: Any, wrapper: Union[BaseWrapper, ScalarKind]) -> Any:
    '''Unpack a JSON item back into a dict/list or a Python basic type.

    Raises
    ------
    DeserializationError
        If the item does not have the shape the wrapper describes.
    '''
    if isinstance(wrapper, ScalarKind):
        return wrapper.deserialize(packed)

    if isinstance(wrapper, DictWrapper):
        if not isinstance(packed, dict):
            raise DeserializationError('expect a JSON object', packed)
        r = {}
        for (key, codec) in zip(wrapper.keys, wrapper.codecs):
            if key not in packed:
                raise DeserializationError('missing key "{}"'.format(key), packed)
            r[key] = unpack(packed[key], codec)
        return r

    if isinstance(wrapper, HomoListWrapper):
        if not isinstance(packed, list):
            raise DeserializationError('expect a JSON array', packed)
        return [unpack(blob, wrapper.codec) for blob in packed]

    raise DeserializationError('wrapper type is unknown. {}'.format(wrapper))


class JsonCodec(object):
    def __init__(self, wrapper: BaseWrapper):
        self.wrapper = wrapper

    def encode(self, data: Any) -> str:
        return canonical_json(pack(data, self.wrapper))

    def decode(self, data: Union[str, dict]):
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except ValueError as e:
                raise DeserializationError('not valid JSON: {}'.format(e), data)
        return unpack(data, self.wrapper)

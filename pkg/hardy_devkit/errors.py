'''
Errors raised across the devkit.

Most precondition failures are plain ValueError subclasses so that callers
may catch either the named error or ValueError.
'''


class InsufficientCharacterLength(ValueError):
    ''' A prime factor of n lies beyond the primes a character covers. '''
    pass


class UnderResolvedGrid(ValueError):
    ''' A quadrature grid is too coarse for the fastest oscillation. '''
    pass


class UnknownSuite(ValueError):
    pass


class ConfigError(ValueError):
    ''' Invalid experiment config, with the dotted path of the bad field. '''

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__('{}: {}'.format(path, message))


class SerializationError(Exception):
    def __init__(self, message: str, obj=None):
        self.obj = obj
        super().__init__(message)


class DeserializationError(Exception):
    def __init__(self, message: str, serial=None):
        self.serial = serial
        super().__init__(message)

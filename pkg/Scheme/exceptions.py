class SchemeError(Exception):
    """Base class for scheme parameter and instance failures."""


class ParameterError(SchemeError):
    def __init__(self, q, m, reason):
        self.q = q
        self.m = m
        super().__init__(f'invalid parameters (q={q}, m={m}): {reason}')


class SchemeFormatError(SchemeError):
    pass


class SchemeSizeError(SchemeError):
    def __init__(self, expected, found):
        self.expected = expected
        self.found = found
        super().__init__(f'scheme has {found} points, expected {expected}')

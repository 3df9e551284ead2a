class AlgebraError(Exception):
    """Base class for exact-arithmetic failures."""


class MissingVariableError(AlgebraError):
    def __init__(self, name):
        self.name = name
        super().__init__(f'assignment does not cover variable {name!r}')


class ZeroPolynomialError(AlgebraError):
    pass


class PoleError(AlgebraError):
    """A rational function was evaluated where its denominator vanishes."""


class NotInvertibleError(AlgebraError):
    pass


class ModulusMismatchError(AlgebraError):
    def __init__(self, left, right):
        super().__init__(f'quadratic moduli differ: {left} vs {right}')


class DegenerateResultantError(AlgebraError):
    pass


class PrecisionError(AlgebraError):
    pass

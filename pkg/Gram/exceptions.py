class GramError(Exception):
    """Base class for Gram verification failures."""


class NotUnimodularError(GramError):
    def __init__(self, index, norm):
        self.index = index
        super().__init__(f'w_{index} has norm {norm}; conj(w) = 1/w needs norm 1')


class DimensionError(GramError):
    pass

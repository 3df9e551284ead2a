class FamilyError(Exception):
    """Base class for Hadamard family failures."""


class PreconditionError(FamilyError):
    pass


class UnsupportedModeError(FamilyError):
    pass


class InconsistentAVectorError(FamilyError):
    def __init__(self, i, j, expected, found):
        self.pair = (i, j)
        super().__init__(f'w_{i}/w_{j} + w_{j}/w_{i} = {found}, but a_{{{i},{j}}} = {expected}')

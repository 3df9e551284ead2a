class NomuraError(Exception):
    """Base class for Nomura-algebra check failures."""


class UnexpectedRankError(NomuraError):
    def __init__(self, rank, point):
        self.rank = rank
        super().__init__(f'c-system has rank {rank} at (q, m) = {point}, expected 7')

"""
Eigenmatrices and intersection numbers of the 4-class scheme.

Symbolic work treats r = q^(m-1) as an independent variable, so that
q*r = q^m and q^2*r^2 = q^(2m) = |X| + 1.  Every intersection number turns
out to be a polynomial in (q, r); entries are stored as MultiPoly when the
reduced denominator is constant and as RatFunc otherwise.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from Algebra.linalg import adjugate, bareiss_det, poly_det
from Algebra.polynomials import MultiPoly, RatFunc

from .exceptions import ParameterError, SchemeError

logger = logging.getLogger(__name__)

CLASSES = 5


def parameter_point(q, m):
    """Assignment {'q': q, 'r': q**(m-1)} for integers q >= 4 even, m >= 2."""
    for value in (q, m):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ParameterError(q, m, 'q and m must be integers')
    if q < 4:
        raise ParameterError(q, m, 'q must be at least 4')
    if q % 2:
        raise ParameterError(q, m, 'q must be even')
    if m < 2:
        raise ParameterError(q, m, 'm must be at least 2')
    return {'q': q, 'r': q ** (m - 1)}


def scheme_size(q, m):
    parameter_point(q, m)
    return q ** (2 * m) - 1


def eigenmatrix_rows():
    q, r = MultiPoly.variable('q'), MultiPoly.variable('r')
    half = Fraction(1, 2)
    one = MultiPoly.constant(1)
    return (
        (one, half * q * r ** 2 * (q - 2), half * q ** 2 * r ** 2, q * (r ** 2 - 1), q - 2),
        (one, half * r * (q - 2), half * q * r, -(r + 1) * (q - 1), q - 2),
        (one, -half * r * (q - 2), -half * q * r, (r - 1) * (q - 1), q - 2),
        (one, half * q * r, -half * q * r, MultiPoly.constant(0), MultiPoly.constant(-1)),
        (one, -half * q * r, half * q * r, MultiPoly.constant(0), MultiPoly.constant(-1)),
    )


@dataclass(frozen=True, eq=False)
class EigenData:
    P: tuple
    Q: tuple
    n: MultiPoly
    det: MultiPoly
    adjugate: tuple

    def valency(self, i):
        return self.P[0][i]

    def specialize(self, q, m):
        point = parameter_point(q, m)
        return tuple(tuple(entry.evaluate(point) for entry in row) for row in self.P)


@lru_cache(maxsize=None)
def build_eigen():
    """First eigenmatrix P, second eigenmatrix Q = n * P^-1 and n = q^2 r^2 - 1."""
    P = eigenmatrix_rows()
    q, r = MultiPoly.variable('q'), MultiPoly.variable('r')
    n = q ** 2 * r ** 2 - 1
    det = poly_det(P)
    if det.is_zero:
        raise SchemeError('eigenmatrix is singular')
    adj = tuple(tuple(row) for row in adjugate(P))
    Q = tuple(tuple(RatFunc(n * entry, det) for entry in row) for row in adj)
    logger.debug('det P = %s', det)
    return EigenData(P=P, Q=Q, n=n, det=det, adjugate=adj)


def _settle(value):
    if isinstance(value, RatFunc) and value.den.is_constant:
        return value.num / value.den.constant_value()
    return value


def _nested(values):
    return tuple(tuple(tuple(row) for row in block) for block in values)


@dataclass(frozen=True)
class IntersectionTensor:
    """The numbers p[i][j][k]; ``point`` is (q, m) once specialized."""

    entries: tuple
    point: tuple = None

    @property
    def symbolic(self):
        return self.point is None

    def p(self, i, j, k):
        return self.entries[i][j][k]

    def valencies(self):
        return tuple(self.entries[i][i][0] for i in range(CLASSES))

    def size(self):
        return sum(self.valencies())

    def matrix(self, i):
        """B_i with rows j and columns k."""
        return tuple(tuple(self.entries[i][j][k] for k in range(CLASSES)) for j in range(CLASSES))

    def specialize(self, q, m):
        if not self.symbolic:
            raise SchemeError(f'tensor is already specialized at {self.point}')
        point = parameter_point(q, m)
        values = [[[entry.evaluate(point) for entry in row] for row in block] for block in self.entries]
        return IntersectionTensor(_nested(values), (q, m))

    def replace(self, i, j, k, value):
        values = [[list(row) for row in block] for block in self.entries]
        values[i][j][k] = value
        return IntersectionTensor(_nested(values), self.point)


def _tensor_from(P, adj, det, settle=lambda value: value):
    # Q[0][l] = n * adj[0][l] / det, so the factor n cancels.
    values = [[[None] * CLASSES for _ in range(CLASSES)] for _ in range(CLASSES)]
    for k in range(CLASSES):
        if not P[0][k]:
            raise SchemeError(f'valency k_{k} vanishes')
        denominator = det * P[0][k]
        for i in range(CLASSES):
            for j in range(i, CLASSES):
                numerator = sum(
                    (adj[0][l] * P[l][i] * P[l][j] * P[l][k] for l in range(1, CLASSES)),
                    adj[0][0] * P[0][i] * P[0][j] * P[0][k],
                )
                value = settle(numerator / denominator)
                values[i][j][k] = values[j][i][k] = value
    return _nested(values)


@lru_cache(maxsize=None)
def intersection_tensor(E=None):
    """p[i][j][k] = 1/(n P[0][k]) * sum_l Q[0][l] P[l][i] P[l][j] P[l][k]."""
    E = E or build_eigen()
    logger.info('computing the symbolic intersection tensor')
    return IntersectionTensor(_tensor_from(E.P, E.adjugate, E.det, settle=_settle))


@lru_cache(maxsize=None)
def concrete_tensor(q, m):
    """The tensor at (q, m), computed directly in rational arithmetic."""
    P = build_eigen().specialize(q, m)
    det = bareiss_det(P)
    if det == 0:
        raise SchemeError(f'eigenmatrix is singular at q={q}, m={m}')
    adj = adjugate(P, det=bareiss_det)
    return IntersectionTensor(_tensor_from(P, adj, det), (q, m))

"""
The intersection matrices B_0..B_4 as published, with qm = q*r = q^m.

B_i[j][k] = p[i][j][k].  The bottom row of B_1 follows the machine-checked
form (0, q/2-2, q/2-1, 0, 0); p[1][4][2] = p[4][1][2] = q/2-1 fixes it.
"""
import logging
from fractions import Fraction
from functools import lru_cache

from Algebra.polynomials import MultiPoly, as_poly

from .eigen import CLASSES, parameter_point
from .identities import IdentityReport

logger = logging.getLogger(__name__)


def _matrix(rows):
    return tuple(tuple(as_poly(entry) for entry in row) for row in rows)


@lru_cache(maxsize=None)
def printed_matrices():
    q, r = MultiPoly.variable('q'), MultiPoly.variable('r')
    qm = q * r
    half, quarter = Fraction(1, 2), Fraction(1, 4)
    identity = [[int(j == k) for k in range(CLASSES)] for j in range(CLASSES)]
    b1 = [
        [0, 1, 0, 0, 0],
        [half * qm * r * (q - 2), quarter * r ** 2 * (q - 2) ** 2, quarter * r ** 2 * (q - 2) ** 2,
         quarter * r ** 2 * (q - 2) ** 2, quarter * (q - 4) * qm * r],
        [0, quarter * (q - 2) * qm * r, quarter * (q - 2) * qm * r, quarter * (q - 2) * qm * r,
         quarter * qm ** 2],
        [0, half * (q - 2) * (r ** 2 - 1), half * (q - 2) * (r ** 2 - 1), half * (q - 2) * r ** 2, 0],
        [0, half * q - 2, half * q - 1, 0, 0],
    ]
    b2 = [
        [0, 0, 1, 0, 0],
        [0, quarter * (q - 2) * qm * r, quarter * (q - 2) * qm * r, quarter * (q - 2) * qm * r,
         quarter * qm ** 2],
        [half * qm ** 2, quarter * qm ** 2, quarter * qm ** 2, quarter * qm ** 2, quarter * qm ** 2],
        [0, half * q * (r ** 2 - 1), half * q * (r ** 2 - 1), half * qm * r, 0],
        [0, half * q, half * q - 1, 0, 0],
    ]
    b3 = [
        [0, 0, 0, 1, 0],
        [0, half * (q - 2) * (r ** 2 - 1), half * (q - 2) * (r ** 2 - 1), half * (q - 2) * r ** 2, 0],
        [0, half * q * (r ** 2 - 1), half * q * (r ** 2 - 1), half * qm * r, 0],
        [q * (r ** 2 - 1), r ** 2 - 1, r ** 2 - 1, r ** 2 - 2 * q + 1, q * (r ** 2 - 1)],
        [0, 0, 0, q - 2, 0],
    ]
    b4 = [
        [0, 0, 0, 0, 1],
        [0, half * q - 2, half * q - 1, 0, 0],
        [0, half * q, half * q - 1, 0, 0],
        [0, 0, 0, q - 2, 0],
        [q - 2, 0, 0, 0, q - 3],
    ]
    return tuple(_matrix(b) for b in (identity, b1, b2, b3, b4))


def check_against_printed_B(T):
    """Compare all 125 entries of ``T`` with the published matrices.

    A specialized tensor is compared with the published entries evaluated
    at the same (q, m).
    """
    printed = printed_matrices()
    point = None if T.symbolic else parameter_point(*T.point)
    failures = []
    for i in range(CLASSES):
        for j in range(CLASSES):
            for k in range(CLASSES):
                expected = printed[i][j][k]
                if point is not None:
                    expected = expected.evaluate(point)
                computed = T.p(i, j, k)
                if computed != expected:
                    failures.append({
                        'index': [i, j, k], 'computed': str(computed), 'printed': str(expected),
                    })
    logger.info('printed B comparison: %d of 125 entries differ', len(failures))
    return IdentityReport('printed-B', CLASSES ** 3, tuple(failures))

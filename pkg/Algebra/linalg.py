"""
Fraction-free determinants and resultants over exact domains.

The routines are generic in the entry type: anything with ring operations,
truthiness for zero tests and an exact quotient works (Fraction, MultiPoly,
QuadExtElem).
"""
import logging
import operator

from .exceptions import DegenerateResultantError, ZeroPolynomialError
from .polynomials import MultiPoly

logger = logging.getLogger(__name__)


def _poly_exquo(a, b):
    return a.exquo(b)


def bareiss_det(rows, exquo=operator.truediv, one=1):
    """Determinant by Bareiss elimination with row pivoting.

    Every intermediate division is exact, so ``exquo`` may be an exact
    quotient in an integral domain.
    """
    matrix = [list(row) for row in rows]
    size = len(matrix)
    if size == 0:
        return one
    if any(len(row) != size for row in matrix):
        raise ValueError('determinant of a non-square matrix')
    sign = 1
    previous = one
    for k in range(size - 1):
        if not matrix[k][k]:
            pivot = next((i for i in range(k + 1, size) if matrix[i][k]), None)
            if pivot is None:
                return matrix[k][k] * 0
            matrix[k], matrix[pivot] = matrix[pivot], matrix[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                matrix[i][j] = exquo(matrix[i][j] * matrix[k][k] - matrix[i][k] * matrix[k][j], previous)
        previous = matrix[k][k]
    det = matrix[size - 1][size - 1]
    return det if sign > 0 else -det


def poly_det(rows):
    return bareiss_det(rows, exquo=_poly_exquo, one=MultiPoly.constant(1))


def minor(rows, row, column):
    return [
        [value for j, value in enumerate(line) if j != column]
        for i, line in enumerate(rows) if i != row
    ]


def adjugate(rows, det=poly_det):
    """Transpose of the cofactor matrix."""
    size = len(rows)
    return [
        [(-1) ** (i + j) * det(minor(rows, j, i)) for j in range(size)]
        for i in range(size)
    ]


def sylvester_matrix(f, g, zero=0):
    """Sylvester matrix of coefficient lists given from the leading term down."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for shift in range(n):
        rows.append([zero] * shift + list(f) + [zero] * (size - shift - m - 1))
    for shift in range(m):
        rows.append([zero] * shift + list(g) + [zero] * (size - shift - n - 1))
    return rows


def sylvester_resultant(f, g, exquo=operator.truediv, one=1, zero=0):
    return bareiss_det(sylvester_matrix(f, g, zero=zero), exquo=exquo, one=one)


def resultant(p, q, name):
    """Resultant in the variable ``name`` of two MultiPoly values.

    The coefficients may involve any other variables; the result is the
    Sylvester determinant as a polynomial in them.
    """
    if p.is_zero or q.is_zero:
        raise ZeroPolynomialError('resultant with the zero polynomial')
    f = p.coefficients_in(name)[::-1]
    g = q.coefficients_in(name)[::-1]
    if len(f) == 1 and len(g) == 1:
        raise DegenerateResultantError(f'both polynomials are constant in {name}')
    logger.debug('resultant in %s of degrees %d and %d', name, len(f) - 1, len(g) - 1)
    return sylvester_resultant(
        f, g, exquo=_poly_exquo, one=MultiPoly.constant(1), zero=MultiPoly.constant(0),
    )

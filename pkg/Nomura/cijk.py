"""
Triangle counts around an R_4-triangle.

For x, y, z pairwise in R_4, c(i, j, k) is the number of points u with
(x, u) in R_i, (y, u) in R_j and (z, u) in R_k.  Whenever an index lies
outside {1, 2} the count is fixed by the tensor; the eight remaining counts
satisfy the twelve line-sum equations

    c(1,j,k) + c(2,j,k) = c(j,1,k) + c(j,2,k) = c(j,k,1) + c(j,k,2) = p[j][k][4]

for j, k in {1, 2}, which have rank 7 and so leave one free parameter t.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from sympy import Matrix, Rational

from Algebra.polynomials import MultiPoly
from Scheme.eigen import CLASSES
from Scheme.identities import MAX_WITNESSES, IdentityReport

from .exceptions import NomuraError, UnexpectedRankError

logger = logging.getLogger(__name__)

UNKNOWNS = tuple((i, j, k) for i in (1, 2) for j in (1, 2) for k in (1, 2))
EQUATION_FAMILIES = ('x', 'y', 'z')
EXPECTED_RANK = 7


def fixed_value(T, i, j, k):
    """c(i, j, k) for a triple with an index outside {1, 2}."""
    triple = (i, j, k)
    if 0 in triple:
        return Fraction(1) if sorted(triple) == [0, 4, 4] else Fraction(0)
    if 3 in triple:
        return Fraction(T.p(3, 3, 4)) if triple == (3, 3, 3) else Fraction(0)
    if 4 in triple:
        return Fraction(T.p(4, 4, 4)) - 1 if triple == (4, 4, 4) else Fraction(0)
    raise NomuraError(f'c{triple} is an unknown, not a fixed value')


def _placed(family, i, j, k):
    if family == 'x':
        return (i, j, k)
    if family == 'y':
        return (j, i, k)
    return (j, k, i)


def coefficient_rows(T, families=EQUATION_FAMILIES):
    """Coefficient rows and right-hand sides of the line-sum equations."""
    if T.symbolic:
        raise NomuraError('the c-system needs a specialized tensor')
    for family in families:
        if family not in EQUATION_FAMILIES:
            raise NomuraError(f'unknown equation family {family!r}')
    rows, rhs = [], []
    for family in families:
        for j, k in product((1, 2), repeat=2):
            row = [0] * len(UNKNOWNS)
            for i in (1, 2):
                row[UNKNOWNS.index(_placed(family, i, j, k))] = 1
            rows.append(row)
            rhs.append(Fraction(T.p(j, k, 4)))
    return rows, rhs


def _to_sympy(value):
    value = Fraction(value)
    return Rational(value.numerator, value.denominator)


def _to_fraction(value):
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def cijk_rank(T, families=EQUATION_FAMILIES):
    rows, _ = coefficient_rows(T, families)
    return Matrix(rows).rank()


@dataclass(frozen=True, eq=False)
class CijkSystem:
    """c = base + t * direction on the unknowns, plus the fixed counts."""

    tensor: object
    rank: int
    base: tuple
    direction: tuple

    @property
    def point(self):
        return self.tensor.point

    def value(self, i, j, k, t=0):
        triple = (i, j, k)
        if triple in UNKNOWNS:
            index = UNKNOWNS.index(triple)
            return self.base[index] + t * self.direction[index]
        return fixed_value(self.tensor, i, j, k)

    def parts(self, i, j, k):
        """(constant, coefficient of t) of c(i, j, k)."""
        triple = (i, j, k)
        if triple in UNKNOWNS:
            index = UNKNOWNS.index(triple)
            return self.base[index], self.direction[index]
        return fixed_value(self.tensor, i, j, k), Fraction(0)


def solve_cijk(T):
    """Parametrize the solutions of the line-sum equations as base + t * direction."""
    rows, rhs = coefficient_rows(T)
    A = Matrix(rows)
    b = Matrix([_to_sympy(v) for v in rhs])
    rank = A.rank()
    if rank != EXPECTED_RANK:
        raise UnexpectedRankError(rank, T.point)
    try:
        solution, params = A.gauss_jordan_solve(b)
    except ValueError as exc:
        raise NomuraError(f'the c-system is inconsistent at {T.point}') from exc
    base = solution.subs({tau: 0 for tau in params})
    kernel = A.nullspace()
    if len(kernel) != 1:
        raise UnexpectedRankError(len(UNKNOWNS) - len(kernel), T.point)
    system = CijkSystem(
        tensor=T,
        rank=rank,
        base=tuple(_to_fraction(v) for v in base),
        direction=tuple(_to_fraction(v) for v in kernel[0]),
    )
    logger.debug('c-system at %s: base %s, direction %s', T.point,
                 [str(v) for v in system.base], [str(v) for v in system.direction])
    return system


def check_marginals(system):
    """Each one-index marginal of c equals p[j][k][4], identically in t.

    Covers the twelve line-sum equations and the vanishings the fixed values
    rely on, such as p[1][3][4] = p[2][3][4] = 0.
    """
    T = system.tensor
    t = MultiPoly.variable('t')
    failures, checked = [], 0
    for j, k in product(range(CLASSES), repeat=2):
        expected = Fraction(T.p(j, k, 4))
        for position in EQUATION_FAMILIES:
            total = sum((system.value(*_placed(position, i, j, k), t=t) for i in range(CLASSES)),
                        MultiPoly.constant(0))
            checked += 1
            if total != expected:
                failures.append({'marginal': position, 'j': j, 'k': k,
                                 'found': str(total), 'expected': str(expected)})
    report = IdentityReport('cijk-marginals', checked, tuple(failures[:MAX_WITNESSES]),
                            {'point': list(T.point)})
    logger.info('c-system marginals at %s: %s', T.point, 'pass' if report.passed else 'FAIL')
    return report


def needed_vanishings(T):
    """p[1][3][4] and p[2][3][4] vanish."""
    failures = [{'index': [j, 3, 4], 'value': str(T.p(j, 3, 4))}
                for j in (1, 2) if T.p(j, 3, 4) != 0]
    return IdentityReport('cijk-vanishing', 2, tuple(failures), {'point': list(T.point)})

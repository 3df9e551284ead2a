"""
Polynomials whose common zeros are the a-vectors of type-II matrices in the
Bose-Mesner algebra: g over 3-subsets, h over ordered 4-tuples and the
eigenvalue conditions e_1..e_4.
"""
import logging
from dataclasses import dataclass
from itertools import combinations, permutations

from Algebra.linalg import poly_det
from Algebra.polynomials import MultiPoly, x_name
from Scheme.eigen import CLASSES, build_eigen

from .exceptions import FamilyError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Generator:
    label: str
    poly: MultiPoly


def _x(i, j):
    return MultiPoly.variable(x_name(i, j))


def _distinct(*indices):
    if len(set(indices)) != len(indices):
        raise FamilyError(f'indices {indices} must be distinct')
    if any(not 0 <= i < CLASSES for i in indices):
        raise FamilyError(f'indices {indices} must lie in 0..{CLASSES - 1}')


def g_poly(i, j, k):
    """X_ij^2 + X_ik^2 + X_jk^2 - X_ij X_ik X_jk - 4."""
    _distinct(i, j, k)
    a, b, c = _x(i, j), _x(i, k), _x(j, k)
    return a ** 2 + b ** 2 + c ** 2 - a * b * c - 4


def h_poly(i, j, k, l):
    """det [[2, X_ij, X_ik], [X_ij, 2, X_jk], [X_il, X_jl, X_kl]]."""
    _distinct(i, j, k, l)
    two = MultiPoly.constant(2)
    return poly_det([
        [two, _x(i, j), _x(i, k)],
        [_x(i, j), two, _x(j, k)],
        [_x(i, l), _x(j, l), _x(k, l)],
    ])


def e_poly(k, E=None):
    """sum_{i<j} P[k][i] P[k][j] X_ij + sum_i P[k][i]^2 - n."""
    if not 1 <= k < CLASSES:
        raise FamilyError(f'e_{k} is defined for k in 1..{CLASSES - 1}')
    E = E or build_eigen()
    row = E.P[k]
    total = sum((row[i] ** 2 for i in range(CLASSES)), -E.n)
    for i, j in combinations(range(CLASSES), 2):
        total = total + row[i] * row[j] * _x(i, j)
    return total


def full_generator_set(E=None, redundant=False):
    """All g, h and e generators.

    h is invariant under i <-> j and under k <-> l, so the 120 ordered
    images collapse to 30; ``redundant`` keeps all 120.
    """
    generators = [Generator(f'g{i}{j}{k}', g_poly(i, j, k))
                  for i, j, k in combinations(range(CLASSES), 3)]
    seen = set()
    for perm in permutations(range(CLASSES)):
        i, j, k, l = perm[:4]
        key = (frozenset((i, j)), frozenset((k, l)))
        if not redundant:
            if key in seen:
                continue
            seen.add(key)
        generators.append(Generator(f'h{i}{j}{k}{l}', h_poly(i, j, k, l)))
    generators.extend(Generator(f'e{k}', e_poly(k, E)) for k in range(1, CLASSES))
    logger.debug('%d generators (redundant=%s)', len(generators), redundant)
    return generators

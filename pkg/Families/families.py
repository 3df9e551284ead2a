"""
The two Hadamard families and their a-vectors.

a_{i,j} = w_i/w_j + w_j/w_i.  With u = q^2 r^2 = q^(2m) (r = q^(m-1)):

family I   w = (1, 1, w_2, 1, 1), a_{0,2} = a_{1,2} = a_{2,3} = a_{2,4} = -2(u-2)/u
family II  a = (a01, a02, 2, 2, a12, a01, a01, a02, a02, 2)

The case-VI family at (q, m) = (4, 2) involves nested radicals and only has
a numeric form (see weights.numeric_w).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from Algebra.polynomials import PAIRS, MultiPoly, RatFunc, x_name
from Scheme.eigen import build_eigen, parameter_point
from Scheme.identities import MAX_WITNESSES, IdentityReport

from .exceptions import FamilyError, UnsupportedModeError
from .generators import full_generator_set

logger = logging.getLogger(__name__)

FAMILIES = ('I', 'II', 'VI')
SYMBOLIC_FAMILIES = ('I', 'II')


@dataclass(frozen=True)
class FamilySpec:
    """Family tag, optional concrete (q, m), root branch and (VI only) sign pairing."""

    family: str
    q: int = None
    m: int = None
    branch: int = 0
    sign: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise FamilyError(f'unknown family {self.family!r}; expected one of {FAMILIES}')
        if (self.q is None) != (self.m is None):
            raise FamilyError('q and m must be given together')
        if self.q is not None:
            parameter_point(self.q, self.m)
        if self.family == 'VI' and (self.q, self.m) != (4, 2):
            raise FamilyError('family VI exists only for (q, m) = (4, 2)')
        if self.branch not in (0, 1):
            raise FamilyError(f'branch must be 0 or 1, got {self.branch}')
        if self.sign not in (1, -1):
            raise FamilyError(f'sign must be +1 or -1, got {self.sign}')

    @property
    def symbolic(self):
        return self.q is None

    def point(self):
        return None if self.symbolic else (self.q, self.m)


@dataclass(frozen=True, eq=False)
class AVector:
    """a_{i,j} for i < j, stored in PAIRS order."""

    values: tuple
    family: str = None
    point: tuple = None

    @property
    def symbolic(self):
        return self.point is None

    def a(self, i, j):
        if i == j:
            return 2
        i, j = min(i, j), max(i, j)
        return self.values[PAIRS.index((i, j))]

    def assignment(self):
        return {x_name(i, j): value for (i, j), value in zip(PAIRS, self.values)}

    def specialize(self, q, m):
        point = parameter_point(q, m)
        values = tuple(v.evaluate(point) if isinstance(v, (MultiPoly, RatFunc)) else Fraction(v)
                       for v in self.values)
        return AVector(values, self.family, (q, m))

    def replace(self, i, j, value):
        values = list(self.values)
        values[PAIRS.index((min(i, j), max(i, j)))] = value
        return AVector(tuple(values), self.family, self.point)


def _closed_forms():
    q, r = MultiPoly.variable('q'), MultiPoly.variable('r')
    u = q ** 2 * r ** 2
    qr2 = q * r ** 2
    x = RatFunc(-2 * (u - 2), u)
    a01 = RatFunc(2 * (q ** 2 * r ** 4 - (q + 2) * qr2 + 2), (qr2 + q - 2) * qr2)
    a02 = RatFunc(-2 * (u - q ** 2 + 2 * q - 2), q * (qr2 + q - 2))
    return x, a01, a02


def family_avector(spec):
    """The a-vector of family I or II, symbolic or at the FamilySpec's (q, m)."""
    if spec.family not in SYMBOLIC_FAMILIES:
        raise UnsupportedModeError(
            f'family {spec.family} has no closed-form a-vector; use the numeric weights'
        )
    x, a01, a02 = _closed_forms()
    two = RatFunc(2)
    if spec.family == 'I':
        values = (two, x, two, two, x, two, two, x, x, two)
    else:
        values = (a01, a02, two, two, x, a01, a01, a02, a02, two)
    vector = AVector(values, spec.family)
    if not spec.symbolic:
        vector = vector.specialize(spec.q, spec.m)
    return vector


def verify_common_zero(a, E=None, redundant=False):
    """Evaluate every generator at ``a``; pass iff all residuals vanish.

    Symbolic residuals are rational functions in (q, r), tested on the
    numerator.
    """
    E = E or build_eigen()
    generators = full_generator_set(E, redundant=redundant)
    failures = []
    if a.symbolic:
        images = {name: RatFunc.coerce(value) for name, value in a.assignment().items()}
        for generator in generators:
            residual = generator.poly.substitute(images)
            if not residual.is_zero:
                failures.append({'generator': generator.label, 'residual': str(residual.num)})
    else:
        assignment = a.assignment()
        assignment.update(parameter_point(*a.point))
        for generator in generators:
            residual = generator.poly.evaluate(assignment)
            if residual != 0:
                failures.append({'generator': generator.label, 'residual': str(residual)})
    logger.info('common zero of %d generators (family %s, %s): %d nonzero',
                len(generators), a.family, 'symbolic' if a.symbolic else a.point, len(failures))
    return IdentityReport('common-zero', len(generators), tuple(failures[:MAX_WITNESSES]),
                          {'family': a.family, 'generators': len(generators)})


def check_interval_conditions(family, grid):
    """All a-entries in [-2, 2], one in (-2, 2), and 0 < a01 < 2 for family II."""
    failures = []
    for q, m in grid:
        a = family_avector(FamilySpec(family, q, m))
        outside = [(pair, v) for pair, v in zip(PAIRS, a.values) if not -2 <= v <= 2]
        for pair, value in outside:
            failures.append({'point': [q, m], 'pair': list(pair), 'value': str(value)})
        if not any(-2 < v < 2 for v in a.values):
            failures.append({'point': [q, m], 'message': 'no entry in (-2, 2)'})
        if family == 'II' and not 0 < a.a(0, 1) < 2:
            failures.append({'point': [q, m], 'pair': [0, 1], 'value': str(a.a(0, 1))})
    return IdentityReport('interval', len(grid), tuple(failures[:MAX_WITNESSES]), {'family': family})

"""
Recovering the weights w_0..w_4 of W = sum_j w_j A_j from an a-vector.

With w_{i0} = 1, w_{i1} is a root of x^2 - a_{i0,i1} x + 1 and every other
weight is

    w_i = (w_{i1}^2 - w_{i0}^2) / (a_{i1,i} w_{i1} - a_{i0,i} w_{i0}).

Exact weights live in Q[x]/(x^2 - a_{i0,i1} x + 1); numeric weights are
mpmath complex numbers on a fixed-precision context.
"""
import logging
from dataclasses import dataclass, replace
from fractions import Fraction

from django.conf import settings

from Algebra.numeric import (
    complex_roots_of_monic_quadratic, format_complex, make_context, modulus_deviation, to_mpf,
)
from Algebra.polynomials import PAIRS
from Algebra.quadratic import QuadExtElem
from Scheme.eigen import CLASSES
from Scheme.identities import IdentityReport

from .exceptions import InconsistentAVectorError, PreconditionError, UnsupportedModeError
from .families import family_avector

logger = logging.getLogger(__name__)

# (i0, i1) used when none is given.
DEFAULT_PAIRS = {'I': (0, 2), 'II': (0, 1)}


@dataclass(frozen=True, eq=False)
class WVector:
    values: tuple
    exact: bool
    family: str = None
    point: tuple = None
    branch: int = 0
    context: object = None

    def w(self, i):
        return self.values[i]

    def modulus(self):
        for value in self.values:
            if isinstance(value, QuadExtElem):
                return value.modulus
        return None

    def embed(self, ctx=None):
        """Numeric copy with x sent to root ``branch`` of the modulus."""
        if not self.exact:
            return self
        ctx = ctx or make_context()
        values = tuple(
            v.embed(ctx, self.branch) if isinstance(v, QuadExtElem) else ctx.mpc(to_mpf(ctx, v))
            for v in self.values
        )
        return replace(self, values=values, exact=False, context=ctx)

    def with_weight(self, i, value):
        values = list(self.values)
        values[i] = value
        return replace(self, values=tuple(values))


def _choose_pair(a, i0, i1):
    if i0 is not None and i1 is not None:
        return i0, i1
    if a.family in DEFAULT_PAIRS:
        return DEFAULT_PAIRS[a.family]
    for i, j in PAIRS:
        if a.a(i, j) not in (2, -2):
            return i, j
    raise PreconditionError('every a_{i,j} is +-2; no pair to start from')


def _recover(a, i0, i1, one, root, scalar):
    w = [None] * CLASSES
    w[i0], w[i1] = one, root
    for i in range(CLASSES):
        if i in (i0, i1):
            continue
        denominator = scalar(a.a(i1, i)) * w[i1] - scalar(a.a(i0, i)) * w[i0]
        if not denominator:
            raise PreconditionError(
                f'denominator of w_{i} vanishes for (i0, i1) = ({i0}, {i1})'
            )
        w[i] = (w[i1] * w[i1] - w[i0] * w[i0]) / denominator
    first = w[0]
    return tuple(v / first for v in w)


def recover_w(a, i0=None, i1=None, branch=0):
    """Exact weights from a concrete a-vector, normalized to w_0 = 1.

    Every pair is checked afterwards: w_i/w_j + w_j/w_i = a_{i,j}.
    """
    if a.symbolic:
        raise UnsupportedModeError('exact weights need a concrete a-vector')
    i0, i1 = _choose_pair(a, i0, i1)
    a0 = Fraction(a.a(i0, i1))
    if a0 in (2, -2):
        raise PreconditionError(f'a_{{{i0},{i1}}} = {a0} is +-2')
    modulus = QuadExtElem.unimodular_modulus(a0)
    values = _recover(a, i0, i1, QuadExtElem.rational(1, modulus),
                      QuadExtElem.generator(modulus), Fraction)
    for i, j in PAIRS:
        found = values[i] / values[j] + values[j] / values[i]
        if found != a.a(i, j):
            raise InconsistentAVectorError(i, j, a.a(i, j), found)
    logger.debug('recovered w over x^2 = %s*x - 1 from pair (%d, %d)', a0, i0, i1)
    return WVector(values, True, a.family, a.point, branch)


def exact_w(spec):
    if spec.family not in DEFAULT_PAIRS:
        raise UnsupportedModeError(
            f'family {spec.family} involves nested radicals; use numeric mode'
        )
    if spec.symbolic:
        raise UnsupportedModeError('exact weights need concrete (q, m)')
    return recover_w(family_avector(spec), branch=spec.branch)


def _family_six(ctx, sign, branch):
    s = ctx.sqrt(104899)
    t = ctx.sqrt((8 * s - 2591) / 3)
    a1 = (21 * s - 7140 + sign * 85 * t) / 176
    w1 = complex_roots_of_monic_quadratic(a1, 1, ctx)[branch]
    a02 = (43 * s - 14620 + sign * 85 * t) / 352
    a13 = (21 * s - 1848 - sign * (4 * s + 1253) * t) / 2640
    w2 = -64 * (w1 ** 2 - 1) / (127 * w1 + 64 * a02)
    w3 = 90 * (w1 ** 2 - 1) / (90 * a13 * w1 - 4 * s + 1117)
    one = ctx.mpc(1)
    return (one, w1, w2, w3, one)


def unimodularity(w, tolerance=None):
    ctx = w.context
    if tolerance is None:
        tolerance = getattr(settings, 'UNIMODULAR_TOLERANCE', '1e-20')
    bound = ctx.mpf(tolerance)
    deviations = [modulus_deviation(ctx, v) for v in w.values]
    failures = tuple(
        {'index': i, 'value': format_complex(ctx, w.values[i]), 'deviation': ctx.nstr(d, 5)}
        for i, d in enumerate(deviations) if d > bound
    )
    return IdentityReport('unimodular', CLASSES, failures,
                          {'max_deviation': ctx.nstr(max(deviations), 5), 'tolerance': str(tolerance)})


def numeric_w(spec, precision=None):
    """Numeric weights for families I, II and VI, with the unimodularity report."""
    ctx = make_context(precision)
    if spec.family == 'VI':
        values = _family_six(ctx, spec.sign, spec.branch)
        w = WVector(values, False, 'VI', (4, 2), spec.branch, ctx)
    else:
        if spec.symbolic:
            raise PreconditionError('numeric weights need concrete (q, m)')
        a = family_avector(spec)
        i0, i1 = DEFAULT_PAIRS[spec.family]
        root = complex_roots_of_monic_quadratic(-a.a(i0, i1), 1, ctx)[spec.branch]
        values = _recover(a, i0, i1, ctx.mpc(1), root, lambda v: to_mpf(ctx, v))
        w = WVector(values, False, spec.family, a.point, spec.branch, ctx)
    report = unimodularity(w)
    logger.info('numeric weights for family %s at %s (branch %d): %s', spec.family,
                w.point, spec.branch, 'unimodular' if report.passed else 'NOT unimodular')
    return w, report

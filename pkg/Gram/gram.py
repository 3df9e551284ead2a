"""
WW* = nI for W = sum_j w_j A_j.

In the Bose-Mesner basis WW* = sum_k S[k] A_k with
S[k] = sum_{i,j} w_i conj(w_j) p[i][j][k]; W is a Hadamard matrix iff
S = (n, 0, 0, 0, 0).  On a realized scheme the Gram entry of (x, y) only
depends on the joint relation histogram of rows x and y.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from django.conf import settings

from Algebra.numeric import to_mpf
from Algebra.quadratic import QuadExtElem
from Scheme.eigen import CLASSES
from Scheme.exceptions import SchemeError
from Scheme.identities import IdentityReport
from Scheme.instance import pair_histograms

from .exceptions import DimensionError, GramError, NotUnimodularError

logger = logging.getLogger(__name__)

KINDS = ('hermitian', 'type-ii')


@dataclass(frozen=True, eq=False)
class GramCoefficients:
    values: tuple
    n: int
    exact: bool
    kind: str
    passed: bool
    residual: object = None
    tolerance: object = None

    def formatted(self, ctx=None, digits=20):
        if self.exact:
            return [str(v) for v in self.values]
        return [ctx.nstr(v, digits) for v in self.values]


def numeric_tolerance(ctx, n, tol=None):
    """``tol`` if given, else 2^-NUMERIC_TOLERANCE_EXPONENT * n."""
    if tol is not None:
        return ctx.mpf(tol)
    exponent = getattr(settings, 'NUMERIC_TOLERANCE_EXPONENT', 80)
    return ctx.ldexp(ctx.mpf(n), -exponent)


def _exact_partner(index, value, kind):
    if isinstance(value, QuadExtElem):
        if kind == 'hermitian':
            norm = value.norm()
            if norm != 1:
                raise NotUnimodularError(index, norm)
        return value.inverse()
    value = Fraction(value)
    if kind == 'hermitian':
        return value
    return 1 / value


def gram_coefficients(w, T, kind='hermitian', tol=None):
    """The five coefficients S[k] of W W* (or W (W^(-))^T for ``type-ii``)."""
    if kind not in KINDS:
        raise GramError(f'unknown Gram kind {kind!r}; expected one of {KINDS}')
    if T.symbolic:
        raise SchemeError('Gram coefficients need a specialized tensor')
    if len(w.values) != CLASSES:
        raise DimensionError(f'expected {CLASSES} weights, got {len(w.values)}')
    n = int(T.size())
    if w.exact:
        partners = [_exact_partner(j, v, kind) for j, v in enumerate(w.values)]
        values = tuple(
            sum((w.values[i] * partners[j] * T.p(i, j, k)
                 for i in range(CLASSES) for j in range(CLASSES)), 0)
            for k in range(CLASSES)
        )
        wrong = [k for k, s in enumerate(values) if s != (n if k == 0 else 0)]
        result = GramCoefficients(values, n, True, kind, not wrong,
                                  residual=wrong[0] if wrong else None)
    else:
        ctx = w.context
        if kind == 'hermitian':
            partners = [ctx.conj(v) for v in w.values]
        else:
            partners = [1 / v for v in w.values]
        values = tuple(
            ctx.fsum(w.values[i] * partners[j] * to_mpf(ctx, T.p(i, j, k))
                     for i in range(CLASSES) for j in range(CLASSES))
            for k in range(CLASSES)
        )
        bound = numeric_tolerance(ctx, n, tol)
        residual = max([abs(values[0] - n)] + [abs(s) for s in values[1:]])
        result = GramCoefficients(values, n, False, kind, residual <= bound, residual, bound)
    logger.info('Gram coefficients (%s, %s) at %s: %s', kind, 'exact' if w.exact else 'numeric',
                T.point, 'pass' if result.passed else 'FAIL')
    return result


def gram_entry(instance, w, x, y):
    """(W W*)[x][y] by direct summation over the two rows."""
    ctx = w.context
    row_x = instance.rel[x]
    row_y = instance.rel[y]
    return ctx.fsum(w.values[int(i)] * ctx.conj(w.values[int(j)]) for i, j in zip(row_x, row_y))


def dense_verify(instance, w, tol=None):
    """Check every Gram entry of W = (w[rel[x][y]]) against n I.

    Rows are taken two at a time; each (x, y) with x <= y is reduced to the
    5x5 histogram of joint relations, and entries are cached per histogram.
    """
    if w.exact:
        w = w.embed()
    if len(w.values) != CLASSES:
        raise DimensionError(f'expected {CLASSES} weights, got {len(w.values)}')
    if w.point is not None:
        q, m = w.point
        if instance.n != q ** (2 * m) - 1:
            raise DimensionError(f'weights are for n = {q ** (2 * m) - 1}, scheme has n = {instance.n}')
    ctx = w.context
    n = instance.n
    bound = numeric_tolerance(ctx, n, tol)
    products = [[w.values[i] * ctx.conj(w.values[j]) for j in range(CLASSES)] for i in range(CLASSES)]
    cache = {}
    worst, worst_pair, checked = ctx.mpf(-1), None, 0
    for x in range(n):
        ys = np.arange(x, n)
        histograms = pair_histograms(instance, x, ys)
        for t, histogram in enumerate(histograms):
            key = histogram.tobytes()
            value = cache.get(key)
            if value is None:
                value = ctx.fsum(int(histogram[i, j]) * products[i][j]
                                 for i in range(CLASSES) for j in range(CLASSES) if histogram[i, j])
                cache[key] = value
            residual = abs(value - n) if t == 0 else abs(value)
            if residual > worst:
                worst, worst_pair = residual, [x, int(ys[t])]
        checked += len(ys)
    passed = worst <= bound
    logger.info('dense Gram check on n=%d: max residual %s over %d pairs (%d histograms): %s',
                n, ctx.nstr(worst, 5), checked, len(cache), 'pass' if passed else 'FAIL')
    failures = () if passed else ({'pair': worst_pair, 'residual': ctx.nstr(worst, 10)},)
    return IdentityReport('dense-gram', checked, failures, {
        'max_residual': ctx.nstr(worst, 10), 'worst_pair': worst_pair,
        'tolerance': ctx.nstr(bound, 10), 'histograms': len(cache),
    })

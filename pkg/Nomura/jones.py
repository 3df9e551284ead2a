"""
Jones-graph products on a realized scheme.

(Y_ab)_x = W_xa / W_xb and <Y_ab, Y_cd> is the ordinary bilinear product
sum_x W_xa W_xc / (W_xb W_xd).  The spot checks here tie instance-level sums
to the parameter-level predictions of the claims module.
"""
import logging
from itertools import product

import numpy as np
from django.conf import settings

from Algebra.numeric import to_mpf
from Gram.gram import numeric_tolerance
from Scheme.eigen import CLASSES, concrete_tensor
from Scheme.identities import MAX_WITNESSES, IdentityReport

from .cijk import UNKNOWNS, fixed_value, solve_cijk
from .claims import CLAIM_RELATIONS, r4_sum

logger = logging.getLogger(__name__)


def _numeric(w):
    return w.embed() if w.exact else w


def jones_inner_product(instance, w, a, b, c, d):
    """<Y_ab, Y_cd> by direct summation over the points of the scheme."""
    w = _numeric(w)
    values = w.values
    rel = instance.rel
    return w.context.fsum(
        values[ra] * values[rc] / (values[rb] * values[rd])
        for ra, rb, rc, rd in zip(rel[:, a].tolist(), rel[:, b].tolist(),
                                  rel[:, c].tolist(), rel[:, d].tolist())
    )


def refined_counts(instance, a, b, c, d):
    """counts[i][j][k][l] = |{x : rel[x][a] = i, rel[x][b] = j, rel[x][c] = k, rel[x][d] = l}|."""
    rel = instance.rel
    codes = ((rel[:, a] * CLASSES + rel[:, b]) * CLASSES + rel[:, c]) * CLASSES + rel[:, d]
    return np.bincount(codes, minlength=CLASSES ** 4).reshape((CLASSES,) * 4)


def inner_product_from_counts(counts, w):
    w = _numeric(w)
    values = w.values
    return w.context.fsum(
        int(counts[i, j, k, l]) * values[i] * values[k] / (values[j] * values[l])
        for i, j, k, l in zip(*np.nonzero(counts))
    )


def triangle_counts(instance, x, y, z):
    """c[i][j][k] = |{u : rel[x][u] = i, rel[y][u] = j, rel[z][u] = k}|."""
    rel = instance.rel
    codes = (rel[x] * CLASSES + rel[y]) * CLASSES + rel[z]
    return np.bincount(codes, minlength=CLASSES ** 3).reshape((CLASSES,) * 3)


def r4_bridge(instance, w, x, z):
    """sum over y in R_4(x) of <Y_xy, Y_xz>."""
    w = _numeric(w)
    ys = np.flatnonzero(instance.rel[x] == 4)
    return w.context.fsum(jones_inner_product(instance, w, x, int(y), x, int(z)) for y in ys)


def triangle_defect(system, counts):
    """None if the observed counts lie on base + t * direction, else a witness."""
    for triple in product(range(CLASSES), repeat=3):
        if triple in UNKNOWNS:
            continue
        expected = fixed_value(system.tensor, *triple)
        if int(counts[triple]) != expected:
            return {'triple': list(triple), 'observed': int(counts[triple]), 'expected': str(expected)}
    pivot = next(index for index, v in enumerate(system.direction) if v)
    t = (int(counts[UNKNOWNS[pivot]]) - system.base[pivot]) / system.direction[pivot]
    for triple in UNKNOWNS:
        expected = system.value(*triple, t=t)
        if int(counts[triple]) != expected:
            return {'triple': list(triple), 'observed': int(counts[triple]), 'expected': str(expected)}
    return None


def _r4_triangle(instance, rng, x):
    rel = instance.rel
    ys = np.flatnonzero(rel[x] == 4)
    y = int(ys[rng.integers(len(ys))])
    zs = np.flatnonzero((rel[x] == 4) & (rel[y] == 4))
    if not len(zs):
        return None
    return y, int(zs[rng.integers(len(zs))])


def bridge_checks(instance, w, q, m, samples=None, seed=None, tol=None):
    """Sampled spot checks of the two claims on a realized scheme.

    For each l in 1..3 and sampled (x, z) in R_l the sum over y in R_4(x) of
    <Y_xy, Y_xz> is compared with the tensor prediction and must not vanish.
    Sampled R_4-triangles must have triangle counts on the solution line of
    the c-system.
    """
    if samples is None:
        samples = getattr(settings, 'JONES_SAMPLES', 10)
    if seed is None:
        seed = getattr(settings, 'DEFAULT_SEED', 0)
    w = _numeric(w)
    ctx = w.context
    T = concrete_tensor(q, m)
    bound = numeric_tolerance(ctx, instance.n, tol)
    rng = np.random.default_rng(seed)
    failures, checked, worst = [], 0, ctx.mpf(0)

    for l in CLAIM_RELATIONS:
        predicted = r4_sum(T, w.values, l, scalar=lambda v: to_mpf(ctx, v))
        for _ in range(samples):
            x = int(rng.integers(instance.n))
            partners = np.flatnonzero(instance.rel[x] == l)
            z = int(partners[rng.integers(len(partners))])
            value = r4_bridge(instance, w, x, z)
            residual = abs(value - predicted)
            worst = max(worst, residual)
            checked += 1
            if residual > bound or abs(value) <= bound:
                failures.append({'relation': l, 'pair': [x, z], 'value': ctx.nstr(value, 10),
                                 'predicted': ctx.nstr(predicted, 10)})

    system = solve_cijk(T)
    for _ in range(samples):
        x = int(rng.integers(instance.n))
        triangle = _r4_triangle(instance, rng, x)
        if triangle is None:
            failures.append({'check': 'triangle', 'x': x, 'message': 'no R_4-triangle through x'})
            continue
        y, z = triangle
        checked += 1
        defect = triangle_defect(system, triangle_counts(instance, x, y, z))
        if defect:
            failures.append({'check': 'triangle', 'points': [x, y, z], **defect})

    report = IdentityReport('jones-bridge', checked, tuple(failures[:MAX_WITNESSES]), {
        'max_residual': ctx.nstr(worst, 10), 'tolerance': ctx.nstr(bound, 10), 'seed': seed,
    })
    logger.info('Jones spot checks on n=%d: %s (%d samples)', instance.n,
                'pass' if report.passed else 'FAIL', checked)
    return report

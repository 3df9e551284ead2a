"""Structural identities of an intersection tensor and its eigenmatrices."""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from Algebra.polynomials import MultiPoly

from .eigen import CLASSES

logger = logging.getLogger(__name__)

# Witness lists are cut off at this length.
MAX_WITNESSES = 20

R = range(CLASSES)


@dataclass(frozen=True)
class IdentityReport:
    name: str
    checked: int
    failures: tuple = ()
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return not self.failures


def _report(name, checked, failures, **details):
    report = IdentityReport(name, checked, tuple(failures[:MAX_WITNESSES]), details)
    logger.info('%s: %s (%d checked, %d failures)', name,
                'pass' if report.passed else 'FAIL', checked, len(failures))
    return report


def check_orthogonality(E):
    """P * Q = n * I."""
    failures = []
    for i in R:
        for j in R:
            entry = sum((E.P[i][l] * E.Q[l][j] for l in R), E.Q[0][0] * 0)
            expected = E.n if i == j else 0
            if entry != expected:
                failures.append({'index': [i, j], 'value': str(entry)})
    return _report('P*Q=nI', CLASSES ** 2, failures)


def check_symmetry(T):
    failures = [
        {'index': [i, j, k], 'left': str(T.p(i, j, k)), 'right': str(T.p(j, i, k))}
        for i in R for j in R for k in R
        if i < j and T.p(i, j, k) != T.p(j, i, k)
    ]
    return _report('p[i][j][k]=p[j][i][k]', 50, failures)


def check_row_sums(T):
    """sum_j p[i][j][k] = k_i and p[i][j][0] = delta_ij k_i."""
    valencies = T.valencies()
    failures = []
    for i in R:
        for k in R:
            total = sum((T.p(i, j, k) for j in R), T.p(i, 0, k) * 0)
            if total != valencies[i]:
                failures.append({'index': [i, k], 'sum': str(total), 'valency': str(valencies[i])})
        for j in R:
            if j != i and T.p(i, j, 0) != 0:
                failures.append({'index': [i, j, 0], 'value': str(T.p(i, j, 0))})
    return _report('row sums', 2 * CLASSES ** 2, failures)


def check_integrality(T):
    """Nonnegative integer entries and k_k p[i][j][k] = k_i p[j][k][i] at a concrete point."""
    valencies = T.valencies()
    failures = []
    for i in R:
        for j in R:
            for k in R:
                value = Fraction(T.p(i, j, k))
                if value < 0 or value.denominator != 1:
                    failures.append({'index': [i, j, k], 'value': str(value)})
                left = valencies[k] * T.p(i, j, k)
                right = valencies[i] * T.p(j, k, i)
                if left != right:
                    failures.append({'triangle': [i, j, k], 'left': str(left), 'right': str(right)})
    return _report('integrality', 2 * CLASSES ** 3, failures, point=list(T.point))


def _product(a, b, zero):
    return [[sum((a[i][l] * b[l][j] for l in R), zero) for j in R] for i in R]


def check_bose_mesner(T):
    """B_i B_j = sum_k p[i][j][k] B_k for every i, j."""
    matrices = [T.matrix(i) for i in R]
    zero = T.p(0, 0, 0) * 0
    failures = []
    for i in R:
        for j in range(i, CLASSES):
            left = _product(matrices[i], matrices[j], zero)
            for a in R:
                for b in R:
                    right = sum((T.p(i, j, k) * matrices[k][a][b] for k in R), zero)
                    if left[a][b] != right:
                        failures.append({'pair': [i, j], 'entry': [a, b],
                                         'product': str(left[a][b]), 'expansion': str(right)})
    return _report('Bose-Mesner', 15 * CLASSES ** 2, failures)


def structure_checks(T):
    """|X|, the R_0 + R_4 equivalence relation and the strongly regular graph R_2.

    Returns the report with ``details['srg']`` holding (n, k, lambda, mu).
    """
    valencies = T.valencies()
    n = sum(valencies[1:], valencies[0])
    failures = []
    if T.symbolic:
        q, r = MultiPoly.variable('q'), MultiPoly.variable('r')
        expected_n = q ** 2 * r ** 2 - 1
    else:
        q, m = T.point
        expected_n = q ** (2 * m) - 1
    if n != expected_n:
        failures.append({'check': 'size', 'value': str(n), 'expected': str(expected_n)})

    k4 = valencies[4]
    if T.p(4, 4, 4) != k4 - 1:
        failures.append({'check': 'equivalence', 'index': [4, 4, 4], 'value': str(T.p(4, 4, 4))})
    for k in (1, 2, 3):
        if T.p(4, 4, k) != 0:
            failures.append({'check': 'equivalence', 'index': [4, 4, k], 'value': str(T.p(4, 4, k))})

    lam = T.p(2, 2, 2)
    mu = T.p(2, 2, 1)
    for k in (3, 4):
        if T.p(2, 2, k) != mu:
            failures.append({'check': 'strongly-regular', 'index': [2, 2, k],
                             'value': str(T.p(2, 2, k)), 'mu': str(mu)})
    srg = [str(n), str(valencies[2]), str(lam), str(mu)]
    return _report('structure', 7, failures, srg=srg)

"""
Symmetry of the Nomura algebra.

For i = 1..4 the sum

    S_i = sum_{j<k} p[j][k][i] (a_{j,k}^2 - 2) + sum_j p[j][j][i]

must not vanish.  Its numerator is compared with known factored forms, and
each factor is certified positive on q >= 4, r >= 4.
"""
import logging
from dataclasses import dataclass

from Algebra.polynomials import MultiPoly, RatFunc, positivity_certificate
from Scheme.eigen import CLASSES, intersection_tensor
from Scheme.identities import IdentityReport

from .exceptions import NomuraError

logger = logging.getLogger(__name__)

POSITIVITY_ORIGIN = {'q': 4, 'r': 4}


def _parameters():
    q, r = MultiPoly.variable('q'), MultiPoly.variable('r')
    return q, r, q ** 2 * r ** 2


def pp_polynomial():
    q, r, _ = _parameters()
    qm = q * r
    return (qm ** 5 * r + 2 * (q ** 2 - 10 * q + 14) * qm ** 3 * r
            + q * (q - 2) * (q ** 3 - 2 * q ** 2 + 8 * q + 16) * r ** 2
            - 4 * (q - 2) * (q ** 2 - 2 * q + 4))


def golden_factors(family):
    """Factor lists of the expected numerators S_1..S_4."""
    _, _, u = _parameters()
    generic = (u - 1, u - 4)
    if family == 'I':
        return (generic,) * 4
    if family == 'II':
        special = (u - 1, pp_polynomial())
        return (special,) * 3 + (generic,)
    raise NomuraError(f'no known symmetry sums for family {family}')


def _product(factors):
    result = MultiPoly.constant(1)
    for factor in factors:
        result = result * factor
    return result


@dataclass(frozen=True, eq=False)
class SymmetrySums:
    family: str
    sums: tuple
    numerators: tuple
    report: IdentityReport


def symmetry_sum(a, T, i):
    total = RatFunc(0)
    for j in range(CLASSES):
        total = total + T.p(j, j, i)
        for k in range(j + 1, CLASSES):
            total = total + T.p(j, k, i) * (RatFunc.coerce(a.a(j, k)) ** 2 - 2)
    return total


def symmetry_sums(a, T=None):
    """S_1..S_4 for a symbolic a-vector, checked against the factored forms."""
    if not a.symbolic:
        raise NomuraError('symmetry sums are checked symbolically; pass a symbolic a-vector')
    T = T or intersection_tensor()
    golden = golden_factors(a.family)
    sums, numerators, failures = [], [], []
    for i in range(1, CLASSES):
        total = symmetry_sum(a, T, i)
        numerator = total.numerator_form()
        expected = _product(golden[i - 1]).primitive()
        sums.append(total)
        numerators.append(numerator)
        if numerator != expected:
            failures.append({'index': i, 'numerator': str(numerator), 'expected': str(expected)})
    certificates = {}
    for factors in golden:
        for factor in factors:
            label = str(factor)
            if label in certificates:
                continue
            certificate = positivity_certificate(factor, POSITIVITY_ORIGIN)
            certificates[label] = str(certificate.constant)
            if not certificate.passed:
                failures.append({'factor': label, 'negative_terms': certificate.negative_terms})
    report = IdentityReport('symmetry', CLASSES - 1, tuple(failures), {
        'family': a.family, 'numerators': [str(n) for n in numerators],
        'positivity': certificates,
    })
    logger.info('symmetry sums for family %s: %s', a.family, 'pass' if report.passed else 'FAIL')
    return SymmetrySums(a.family, tuple(sums), tuple(numerators), report)

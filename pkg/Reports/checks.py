"""
Check builders behind the management commands.

Each builder runs one command's checks for one unit of work (a grid point,
a symbolic family, a scheme file) and returns CheckRecords in a fixed order.
"""
import logging
from fractions import Fraction

from Algebra.sturm import p9_polynomial, sturm_count, univariate
from Families.families import FamilySpec, check_interval_conditions, family_avector, verify_common_zero
from Families.weights import exact_w, numeric_w
from Gram.gram import dense_verify, gram_coefficients
from Nomura.cijk import check_marginals, needed_vanishings, solve_cijk
from Nomura.claims import first_claim_obstruction, second_claim_sums
from Nomura.jones import bridge_checks
from Nomura.symmetry import symmetry_sums
from Scheme.eigen import build_eigen, concrete_tensor, intersection_tensor
from Scheme.identities import (
    IdentityReport, check_bose_mesner, check_integrality, check_orthogonality, check_row_sums,
    check_symmetry, structure_checks,
)
from Scheme.instance import read_scheme_file, validate_instance
from Scheme.printed import check_against_printed_B

from .records import CheckRecord, timed

logger = logging.getLogger(__name__)


def _at(name, q, m):
    return f'{name} q={q} m={m}'


def params_symbolic():
    E = build_eigen()
    T = intersection_tensor(E)
    return [
        timed('eigenmatrices P*Q=nI', check_orthogonality, E),
        timed('printed intersection matrices', check_against_printed_B, T),
        timed('symmetry p[i][j][k]=p[j][i][k]', check_symmetry, T),
        timed('row sums', check_row_sums, T),
        timed('structure', structure_checks, T),
        timed('Bose-Mesner products', check_bose_mesner, T),
    ]


def params_point(q, m):
    T = concrete_tensor(q, m)
    return [
        timed(_at('integrality', q, m), check_integrality, T),
        timed(_at('row sums', q, m), check_row_sums, T),
        timed(_at('structure', q, m), structure_checks, T),
        timed(_at('Bose-Mesner products', q, m), check_bose_mesner, T),
    ]


def hadamard_symbolic(family, grid):
    a = family_avector(FamilySpec(family))
    return [
        timed(f'common zero family {family}', verify_common_zero, a),
        timed(f'interval conditions family {family}', check_interval_conditions, family, grid),
    ]


def _numeric_gram(spec, T, precision, label):
    w, unimodular = numeric_w(spec, precision)
    records = [CheckRecord.from_report(unimodular, name=f'unimodular {label}')]

    def gram():
        result = gram_coefficients(w, T)
        failures = () if result.passed else ({'residual': w.context.nstr(result.residual, 10)},)
        return IdentityReport('gram', 5, failures, {
            'S': result.formatted(w.context), 'tolerance': w.context.nstr(result.tolerance, 10),
        })
    records.append(timed(f'Gram coefficients {label}', gram))
    return records


def hadamard_point(family, q, m, branch=0, mode='exact', precision=None):
    T = concrete_tensor(q, m)
    if family == 'VI':
        records = []
        for sign in (1, -1):
            for root in (0, 1):
                spec = FamilySpec('VI', q, m, branch=root, sign=sign)
                records.extend(_numeric_gram(spec, T, precision,
                                             _at(f'family VI sign {sign:+d} branch {root}', q, m)))
        return records

    spec = FamilySpec(family, q, m, branch=branch)
    label = _at(f'family {family}', q, m)
    records = [timed(f'common zero {label}', verify_common_zero, family_avector(spec))]
    if mode == 'numeric':
        return records + _numeric_gram(spec, T, precision, label)

    def gram():
        result = gram_coefficients(exact_w(spec), T)
        failures = () if result.passed else ({'first_wrong': result.residual},)
        return IdentityReport('gram', 5, failures, {'S': result.formatted()})
    records.append(timed(f'Gram coefficients {label}', gram))
    return records


def nomura_symbolic(family):
    a = family_avector(FamilySpec(family))
    return [timed(f'symmetry sums family {family}', lambda: symmetry_sums(a).report)]


def nomura_point(family, q, m, tensor=None):
    T = tensor or concrete_tensor(q, m)
    spec = FamilySpec(family, q, m)
    system = solve_cijk(T)

    def rank():
        return IdentityReport('cijk-rank', 1, (), {'rank': system.rank,
                                                   'base': system.base, 'direction': system.direction})
    return [
        timed(_at('c-system rank', q, m), rank),
        timed(_at('c-system vanishings', q, m), needed_vanishings, T),
        timed(_at('c-system marginals', q, m), check_marginals, system),
        timed(_at(f'first claim family {family}', q, m), first_claim_obstruction, spec, T),
        timed(_at(f'second claim family {family}', q, m), second_claim_sums, spec, T),
    ]


def dense_run(path, family, q, m, branch=0, tol=None, seed=None, precision=None):
    if not path:
        return [CheckRecord.skipped('dense Gram', 'no scheme file given')]
    instance = read_scheme_file(path)
    records = [timed(_at('scheme instance', q, m), validate_instance, instance, q, m, seed=seed)]
    if records[0].failed:
        records.append(CheckRecord.skipped('dense Gram', 'scheme instance failed validation'))
        return records
    w, _ = numeric_w(FamilySpec(family, q, m, branch=branch), precision)
    records.append(timed(_at(f'dense Gram family {family}', q, m), dense_verify, instance, w, tol))
    if family in ('I', 'II'):
        records.append(timed(_at(f'Jones spot checks family {family}', q, m),
                             bridge_checks, instance, w, q, m, seed=seed, tol=tol))
    return records


def sturm_run(coeffs=None, lo=None, hi=None, known_p9=False):
    if known_p9:
        poly, lo, hi = p9_polynomial(), Fraction(-2), Fraction(2)
    else:
        poly = univariate([Fraction(c) for c in coeffs])
        lo = None if lo is None else Fraction(lo)
        hi = None if hi is None else Fraction(hi)

    def count():
        result = sturm_count(poly, lo, hi)
        return IdentityReport('sturm', 1, (), {
            'polynomial': str(poly), 'count': result.count,
            'interval': [None if result.lo is None else str(result.lo),
                         None if result.hi is None else str(result.hi)],
            'shift_exponent': result.shift_exponent, 'sequence_length': result.sequence_length,
        })
    return [timed('Sturm count', count)]

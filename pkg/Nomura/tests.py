import os
from fractions import Fraction
from unittest import skipUnless

import numpy as np
from django.conf import settings
from django.test import SimpleTestCase

from Families.exceptions import UnsupportedModeError
from Families.families import FamilySpec, family_avector
from Families.weights import numeric_w
from Scheme.eigen import concrete_tensor, intersection_tensor
from Scheme.instance import circulant_instance, read_scheme_file

from .cijk import UNKNOWNS, check_marginals, cijk_rank, needed_vanishings, solve_cijk
from .claims import (
    cubic_in_u, cubic_root_count, first_certificate, first_claim_obstruction,
    second_certificate, second_claim_sums,
)
from .exceptions import NomuraError
from .jones import (
    bridge_checks, inner_product_from_counts, jones_inner_product, refined_counts,
)
from .symmetry import golden_factors, pp_polynomial, symmetry_sums


class SymmetryTests(SimpleTestCase):
    def test_family_one_matches_golden(self):
        result = symmetry_sums(family_avector(FamilySpec('I')))
        self.assertTrue(result.report.passed, result.report.failures)
        u = result.numerators[0].evaluate({'q': 4, 'r': 4})
        self.assertEqual(u, 255 * 252)

    def test_family_two_matches_golden(self):
        result = symmetry_sums(family_avector(FamilySpec('II')))
        self.assertTrue(result.report.passed, result.report.failures)
        self.assertEqual(result.numerators[3], result.numerators[3].primitive())
        self.assertEqual(result.numerators[3].evaluate({'q': 4, 'r': 4}), 255 * 252)

    def test_pp_at_smallest_point(self):
        self.assertGreater(pp_polynomial().evaluate({'q': 4, 'r': 4}), 0)

    def test_golden_factors_are_certified(self):
        result = symmetry_sums(family_avector(FamilySpec('II')))
        self.assertEqual(len(result.report.details['positivity']), 3)

    def test_concrete_vector_rejected(self):
        with self.assertRaises(NomuraError):
            symmetry_sums(family_avector(FamilySpec('I', 4, 2)))

    def test_unknown_family(self):
        with self.assertRaises(NomuraError):
            golden_factors('VI')


class CijkTests(SimpleTestCase):
    def test_rank_is_seven(self):
        for point in ((4, 2), (8, 2)):
            self.assertEqual(cijk_rank(concrete_tensor(*point)), 7)

    def test_fewer_equations_cannot_raise_rank(self):
        self.assertLessEqual(cijk_rank(concrete_tensor(4, 2), families=('x', 'y')), 7)

    def test_rank_on_grid(self):
        for q, m in settings.NOMURA_GRID:
            self.assertEqual(solve_cijk(concrete_tensor(q, m)).rank, 7, (q, m))

    def test_direction_alternates_in_sign(self):
        system = solve_cijk(concrete_tensor(4, 2))
        ratios = {system.direction[n] * (-1) ** sum(triple) for n, triple in enumerate(UNKNOWNS)}
        self.assertEqual(len(ratios), 1)
        self.assertNotEqual(ratios.pop(), 0)

    def test_marginals_hold_in_t(self):
        for q, m in settings.DEFAULT_GRID:
            report = check_marginals(solve_cijk(concrete_tensor(q, m)))
            self.assertTrue(report.passed, (q, m, report.failures))
            self.assertEqual(report.checked, 75)

    def test_needed_vanishings(self):
        for q, m in settings.DEFAULT_GRID:
            self.assertTrue(needed_vanishings(concrete_tensor(q, m)).passed)

    def test_asymmetric_right_hand_side_is_inconsistent(self):
        T = concrete_tensor(4, 2)
        broken = T.replace(1, 2, 4, T.p(1, 2, 4) + 1)
        with self.assertRaises(NomuraError):
            solve_cijk(broken)

    def test_symbolic_tensor_rejected(self):
        with self.assertRaises(NomuraError):
            cijk_rank(intersection_tensor())


class FirstClaimTests(SimpleTestCase):
    def test_family_one_smallest_point(self):
        report = first_claim_obstruction(FamilySpec('I', 4, 2))
        self.assertTrue(report.passed, report.details)
        self.assertEqual(report.details['cubic_roots_above_255'], 0)

    def test_decided_by_the_resultant_in_t(self):
        report = first_claim_obstruction(FamilySpec('II', 8, 2))
        self.assertIn('resultant', report.details)
        self.assertNotEqual(Fraction(report.details['norm']), 0)
        self.assertNotIn('manual_review', report.details)

    def test_family_two_smallest_point(self):
        report = first_claim_obstruction(FamilySpec('II', 4, 2))
        self.assertTrue(report.passed, report.details)

    def test_both_branches_agree(self):
        for family in ('I', 'II'):
            first = first_claim_obstruction(FamilySpec(family, 8, 2, branch=0))
            second = first_claim_obstruction(FamilySpec(family, 8, 2, branch=1))
            self.assertEqual(first.details['norm'], second.details['norm'])
            self.assertTrue(first.passed)

    def test_grid(self):
        for family in ('I', 'II'):
            for q, m in settings.DEFAULT_GRID:
                self.assertTrue(first_claim_obstruction(FamilySpec(family, q, m)).passed, (family, q, m))

    def test_printed_certificates(self):
        u = 256
        self.assertEqual(cubic_in_u().evaluate({'u': u}), 5 * u ** 3 - 90 * u ** 2 + 313 * u - 128)
        self.assertGreater(first_certificate('I').evaluate({'q': 4, 'r': 4}), 0)
        self.assertGreater(first_certificate('II').evaluate({'q': 4, 'r': 4}), 0)
        self.assertEqual(cubic_root_count().count, 0)

    def test_family_six_not_supported(self):
        with self.assertRaises(UnsupportedModeError):
            first_claim_obstruction(FamilySpec('VI', 4, 2))


class SecondClaimTests(SimpleTestCase):
    def test_smallest_point(self):
        for family in ('I', 'II'):
            report = second_claim_sums(FamilySpec(family, 4, 2))
            self.assertTrue(report.passed, (family, report.failures))
            self.assertEqual(sorted(report.details['sums']), [1, 2, 3])
        self.assertGreater(second_certificate('II').evaluate({'q': 4, 'r': 4}), 0)

    def test_grid(self):
        for family in ('I', 'II'):
            for q, m in settings.NOMURA_GRID:
                self.assertTrue(second_claim_sums(FamilySpec(family, q, m)).passed, (family, q, m))

    def test_zeroed_r4_rows_are_flagged(self):
        T = concrete_tensor(4, 2)
        for i in range(5):
            for k in range(5):
                T = T.replace(4, k, i, Fraction(0))
        report = second_claim_sums(FamilySpec('I', 4, 2), tensor=T)
        self.assertFalse(report.passed)
        self.assertTrue(any(f.get('reason') == 'R_4 row sums' for f in report.failures))
        self.assertTrue(any(f.get('relation') == 1 for f in report.failures))


class JonesTests(SimpleTestCase):
    def setUp(self):
        self.instance = circulant_instance(4, 2)
        self.w, _ = numeric_w(FamilySpec('I', 4, 2))
        self.ctx = self.w.context

    def test_equal_pairs_give_n(self):
        for a, b in ((0, 0), (3, 3)):
            for c, d in ((5, 5), (0, 0)):
                value = jones_inner_product(self.instance, self.w, a, b, c, d)
                self.assertLess(abs(value - 255), self.ctx.mpf('1e-60'))

    def test_counts_oracle_matches_direct_sum(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            a, b, c, d = (int(v) for v in rng.integers(255, size=4))
            counts = refined_counts(self.instance, a, b, c, d)
            self.assertEqual(int(counts.sum()), 255)
            direct = jones_inner_product(self.instance, self.w, a, b, c, d)
            oracle = inner_product_from_counts(counts, self.w)
            self.assertLess(abs(direct - oracle), self.ctx.mpf('1e-50'))

    @skipUnless(os.getenv('HADAMARD_SCHEME_FILE'), 'no realized scheme file supplied')
    def test_realized_scheme_bridge(self):
        instance = read_scheme_file(os.environ['HADAMARD_SCHEME_FILE'])
        for family in ('I', 'II'):
            w, _ = numeric_w(FamilySpec(family, 4, 2))
            report = bridge_checks(instance, w, 4, 2, samples=5)
            self.assertTrue(report.passed, report.failures)

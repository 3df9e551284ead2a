from fractions import Fraction

from django.conf import settings
from django.test import SimpleTestCase

from Algebra.numeric import make_context
from Algebra.polynomials import X_NAMES, MultiPoly
from Algebra.quadratic import QuadExtElem

from .exceptions import FamilyError, PreconditionError, UnsupportedModeError
from .families import (
    AVector, FamilySpec, check_interval_conditions, family_avector, verify_common_zero,
)
from .generators import e_poly, full_generator_set, g_poly, h_poly
from .weights import exact_w, numeric_w, recover_w


class GeneratorTests(SimpleTestCase):
    def test_g_vanishes_on_two_y_y(self):
        g = g_poly(0, 1, 2)
        image = g.compose({'X01': Fraction(2), 'X12': MultiPoly.variable('X02')})
        self.assertTrue(image.is_zero)

    def test_h_at_all_twos(self):
        h = h_poly(0, 1, 2, 3)
        self.assertEqual(h.evaluate({name: 2 for name in X_NAMES}), 0)

    def test_h_symmetries(self):
        h = h_poly(0, 1, 2, 3)
        self.assertEqual(h, h_poly(1, 0, 2, 3))
        self.assertEqual(h, h_poly(0, 1, 3, 2))
        self.assertNotEqual(h, h_poly(0, 2, 1, 3))

    def test_repeated_indices(self):
        with self.assertRaises(FamilyError):
            g_poly(0, 0, 1)
        with self.assertRaises(FamilyError):
            h_poly(0, 1, 2, 2)
        with self.assertRaises(FamilyError):
            e_poly(0)

    def test_generator_counts(self):
        generators = full_generator_set()
        self.assertEqual(len(generators), 44)
        self.assertEqual(sum(1 for g in generators if g.label.startswith('g')), 10)
        self.assertEqual(len(full_generator_set(redundant=True)), 134)

    def test_generator_variables(self):
        allowed = set(X_NAMES) | {'q', 'r'}
        for generator in full_generator_set():
            self.assertLessEqual(set(generator.poly.variables), allowed, generator.label)


class AVectorTests(SimpleTestCase):
    def test_family_one_value(self):
        a = family_avector(FamilySpec('I', 4, 2))
        self.assertEqual(a.a(1, 2), Fraction(-127, 64))
        self.assertEqual(a.a(0, 2), Fraction(-127, 64))
        self.assertEqual(a.a(0, 1), 2)

    def test_family_two_values(self):
        a = family_avector(FamilySpec('II', 4, 2))
        self.assertEqual(a.a(0, 1), Fraction(619, 352))
        self.assertEqual(a.a(0, 2), Fraction(-41, 22))
        self.assertEqual(a.a(1, 2), Fraction(-127, 64))

    def test_family_two_symbolic_tail(self):
        a = family_avector(FamilySpec('II'))
        self.assertEqual(a.a(3, 4), 2)
        self.assertTrue(a.symbolic)

    def test_family_six_is_numeric_only(self):
        with self.assertRaises(UnsupportedModeError):
            family_avector(FamilySpec('VI', 4, 2))

    def test_family_six_needs_smallest_point(self):
        with self.assertRaises(FamilyError):
            FamilySpec('VI', 8, 2)

    def test_interval_conditions(self):
        for family in ('I', 'II'):
            report = check_interval_conditions(family, settings.DEFAULT_GRID)
            self.assertTrue(report.passed, report.failures)


class CommonZeroTests(SimpleTestCase):
    def test_symbolic_families(self):
        for family in ('I', 'II'):
            report = verify_common_zero(family_avector(FamilySpec(family)))
            self.assertTrue(report.passed, report.failures)
            self.assertEqual(report.checked, 44)

    def test_concrete_points(self):
        for family in ('I', 'II'):
            for point in ((4, 2), (16, 3)):
                report = verify_common_zero(family_avector(FamilySpec(family, *point)))
                self.assertTrue(report.passed, (family, point))

    def test_e4_vanishes_on_family_two(self):
        a = family_avector(FamilySpec('II'))
        residual = e_poly(4).substitute(dict(a.assignment()))
        self.assertTrue(residual.is_zero)

    def test_corrupted_vector_fails_on_eigenvalue_conditions(self):
        a = family_avector(FamilySpec('II', 4, 2)).replace(0, 1, Fraction(2))
        report = verify_common_zero(a)
        self.assertFalse(report.passed)
        self.assertTrue(any(f['generator'].startswith('e') for f in report.failures))


class WeightRecoveryTests(SimpleTestCase):
    def test_family_two_w2(self):
        w = exact_w(FamilySpec('II', 4, 2))
        modulus = QuadExtElem.unimodular_modulus(Fraction(619, 352))
        w1 = QuadExtElem.generator(modulus)
        self.assertEqual(w.w(1), w1)
        self.assertEqual(w.w(2), -(32 * w1 + 11) / 42)
        self.assertEqual(w.w(2) + w.w(2).inverse(), Fraction(-41, 22))

    def test_reverse_identities(self):
        w = exact_w(FamilySpec('II', 8, 3))
        a = family_avector(FamilySpec('II', 8, 3))
        self.assertEqual(w.w(1) / w.w(2) + w.w(2) / w.w(1), a.a(1, 2))
        self.assertEqual(w.w(2) + 1 / w.w(2), a.a(0, 2))

    def test_family_one_shape(self):
        w = exact_w(FamilySpec('I', 4, 2))
        self.assertEqual([w.w(i) for i in (0, 1, 3, 4)], [1, 1, 1, 1])

    def test_alternative_start_pair(self):
        a = family_avector(FamilySpec('II', 4, 2))
        w = recover_w(a, 0, 2)
        self.assertEqual(w.w(1) + 1 / w.w(1), Fraction(619, 352))

    def test_all_twos_rejected(self):
        a = AVector((Fraction(2),) * 10, point=(4, 2))
        with self.assertRaises(PreconditionError):
            recover_w(a)

    def test_symbolic_vector_rejected(self):
        with self.assertRaises(UnsupportedModeError):
            recover_w(family_avector(FamilySpec('I')))


class NumericWeightTests(SimpleTestCase):
    def test_family_one_value(self):
        w, report = numeric_w(FamilySpec('I', 4, 2))
        ctx = w.context
        expected = ctx.mpc(-127, ctx.sqrt(255)) / 128
        self.assertTrue(report.passed)
        self.assertLess(abs(w.w(2) - expected), ctx.mpf('1e-60'))

    def test_family_two_real_parts(self):
        w, report = numeric_w(FamilySpec('II', 4, 2))
        ctx = w.context
        self.assertTrue(report.passed)
        self.assertLess(abs(ctx.re(w.w(1)) - ctx.mpf(619) / 704), ctx.mpf('1e-60'))
        self.assertLess(abs(ctx.re(w.w(2)) + ctx.mpf(41) / 44), ctx.mpf('1e-60'))

    def test_family_six_unimodular(self):
        for sign in (1, -1):
            for branch in (0, 1):
                _, report = numeric_w(FamilySpec('VI', 4, 2, branch=branch, sign=sign))
                self.assertTrue(report.passed, report.failures)

    def test_exact_embedding_matches_numeric(self):
        ctx = make_context(256)
        bound = ctx.mpf('1e-20')
        for family in ('I', 'II'):
            for q, m in settings.DEFAULT_GRID:
                for branch in (0, 1):
                    spec = FamilySpec(family, q, m, branch=branch)
                    numeric, report = numeric_w(spec)
                    self.assertTrue(report.passed, (family, q, m))
                    embedded = exact_w(spec).embed(ctx)
                    for a, b in zip(embedded.values, numeric.values):
                        self.assertLessEqual(abs(a - b), bound * abs(b))

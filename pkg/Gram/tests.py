import os
from fractions import Fraction
from unittest import skipUnless

import numpy as np
from django.conf import settings
from django.test import SimpleTestCase

from Families.families import FamilySpec
from Families.weights import WVector, exact_w, numeric_w
from Scheme.eigen import concrete_tensor
from Scheme.instance import circulant_instance, read_scheme_file

from .exceptions import DimensionError, GramError
from .gram import dense_verify, gram_coefficients, gram_entry


class ExactGramTests(SimpleTestCase):
    def test_all_ones_gives_n_everywhere(self):
        w = WVector((Fraction(1),) * 5, True)
        for point in ((4, 2), (8, 3)):
            T = concrete_tensor(*point)
            result = gram_coefficients(w, T)
            n = point[0] ** (2 * point[1]) - 1
            self.assertEqual(result.values, (n,) * 5)
            self.assertFalse(result.passed)

    def test_family_one_at_smallest_point(self):
        result = gram_coefficients(exact_w(FamilySpec('I', 4, 2)), concrete_tensor(4, 2))
        self.assertEqual(result.values, (255, 0, 0, 0, 0))
        self.assertTrue(result.passed)

    def test_family_two_at_smallest_point(self):
        result = gram_coefficients(exact_w(FamilySpec('II', 4, 2)), concrete_tensor(4, 2))
        self.assertEqual(result.values, (255, 0, 0, 0, 0))

    def test_grid(self):
        for family in ('I', 'II'):
            for q, m in settings.DEFAULT_GRID:
                result = gram_coefficients(exact_w(FamilySpec(family, q, m)), concrete_tensor(q, m))
                self.assertTrue(result.passed, (family, q, m))
                self.assertEqual(result.values[0], q ** (2 * m) - 1)

    def test_type_ii_agrees_for_unimodular_weights(self):
        w = exact_w(FamilySpec('II', 8, 2))
        T = concrete_tensor(8, 2)
        self.assertEqual(gram_coefficients(w, T, kind='type-ii').values,
                         gram_coefficients(w, T).values)

    def test_negated_weight_fails(self):
        w = exact_w(FamilySpec('I', 4, 2))
        result = gram_coefficients(w.with_weight(2, -w.w(2)), concrete_tensor(4, 2))
        self.assertFalse(result.passed)
        self.assertTrue(any(s != 0 for s in result.values[1:]))

    def test_unknown_kind(self):
        with self.assertRaises(GramError):
            gram_coefficients(exact_w(FamilySpec('I', 4, 2)), concrete_tensor(4, 2), kind='other')


class NumericGramTests(SimpleTestCase):
    def test_family_six_both_signs(self):
        T = concrete_tensor(4, 2)
        for sign in (1, -1):
            w, unimodular = numeric_w(FamilySpec('VI', 4, 2, sign=sign))
            self.assertTrue(unimodular.passed, unimodular.failures)
            result = gram_coefficients(w, T)
            self.assertTrue(result.passed, sign)
            bound = w.context.ldexp(w.context.mpf(255), -80)
            for s in result.values[1:]:
                self.assertLessEqual(abs(s), bound)

    def test_scaling_by_unit_leaves_coefficients(self):
        w, _ = numeric_w(FamilySpec('II', 4, 2))
        ctx = w.context
        c = ctx.expj(ctx.mpf('0.7'))
        scaled = WVector(tuple(c * v for v in w.values), False, 'II', (4, 2), 0, ctx)
        T = concrete_tensor(4, 2)
        for a, b in zip(gram_coefficients(w, T).values, gram_coefficients(scaled, T).values):
            self.assertLess(abs(a - b), ctx.mpf('1e-60'))

    def test_coefficients_are_real(self):
        w, _ = numeric_w(FamilySpec('II', 8, 2))
        ctx = w.context
        result = gram_coefficients(w, concrete_tensor(8, 2))
        for s in result.values:
            self.assertLess(abs(ctx.im(s)), ctx.mpf('1e-60'))

    def test_exact_and_numeric_agree(self):
        spec = FamilySpec('I', 8, 3)
        T = concrete_tensor(8, 3)
        numeric = gram_coefficients(numeric_w(spec)[0], T)
        exact = gram_coefficients(exact_w(spec), T)
        self.assertTrue(numeric.passed)
        self.assertEqual(exact.values[0], numeric.n)


class DenseVerificationTests(SimpleTestCase):
    def test_all_ones_matches_j_squared(self):
        instance = circulant_instance(4, 2)
        w = WVector((Fraction(1),) * 5, True, point=(4, 2))
        report = dense_verify(instance, w)
        self.assertFalse(report.passed)
        self.assertEqual(float(report.details['max_residual']), 255.0)

    def test_agrees_with_matrix_product(self):
        instance = circulant_instance(4, 2)
        w, _ = numeric_w(FamilySpec('I', 4, 2))
        values = np.array([complex(v) for v in w.values])
        W = values[instance.rel]
        gram = W @ W.conj().T
        expected = np.abs(gram - 255 * np.eye(255)).max()
        report = dense_verify(instance, w)
        self.assertAlmostEqual(float(report.details['max_residual']), expected, places=6)
        self.assertAlmostEqual(complex(gram_entry(instance, w, 0, 5)), gram[0, 5], places=6)

    def test_dimension_mismatch(self):
        w, _ = numeric_w(FamilySpec('I', 8, 2))
        with self.assertRaises(DimensionError):
            dense_verify(circulant_instance(4, 2), w)

    @skipUnless(os.getenv('HADAMARD_SCHEME_FILE'), 'no realized scheme file supplied')
    def test_realized_scheme(self):
        instance = read_scheme_file(os.environ['HADAMARD_SCHEME_FILE'])
        T = concrete_tensor(4, 2)
        rng = np.random.default_rng(0)
        for family in ('I', 'II'):
            w, _ = numeric_w(FamilySpec(family, 4, 2))
            report = dense_verify(instance, w, tol='1e-30')
            self.assertTrue(report.passed, report.details)
            coefficients = gram_coefficients(w, T)
            for _ in range(20):
                x, y = (int(v) for v in rng.integers(instance.n, size=2))
                k = int(instance.rel[x, y])
                value = gram_entry(instance, w, x, y)
                self.assertLess(abs(value - coefficients.values[k]), w.context.mpf('1e-30'))
        w, _ = numeric_w(FamilySpec('I', 4, 2))
        broken = w.with_weight(2, -w.w(2))
        self.assertFalse(dense_verify(instance, broken).passed)

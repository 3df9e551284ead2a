import os
import tempfile
from fractions import Fraction
from unittest import skipUnless

import numpy as np
from django.conf import settings
from django.test import SimpleTestCase

from Algebra.polynomials import MultiPoly

from .eigen import build_eigen, concrete_tensor, intersection_tensor, parameter_point, scheme_size
from .exceptions import ParameterError, SchemeFormatError, SchemeSizeError
from .identities import (
    check_bose_mesner, check_integrality, check_orthogonality, check_row_sums, check_symmetry,
    structure_checks,
)
from .instance import (
    circulant_instance, format_scheme, parse_scheme, read_scheme_file, validate_instance,
    write_scheme_file,
)
from .printed import check_against_printed_B

q, r = MultiPoly.variable('q'), MultiPoly.variable('r')


class EigenmatrixTests(SimpleTestCase):
    def test_printed_entries(self):
        E = build_eigen()
        self.assertEqual(E.P[0][2], Fraction(1, 2) * q ** 2 * r ** 2)
        self.assertTrue(E.P[3][3].is_zero)
        self.assertTrue(all(row[0] == 1 for row in E.P))

    def test_size(self):
        E = build_eigen()
        self.assertEqual(E.n.evaluate(parameter_point(4, 2)), 255)
        self.assertEqual(scheme_size(4, 2), 255)
        self.assertEqual(sum(E.P[0][1:], E.P[0][0]), E.n)

    def test_orthogonality(self):
        self.assertTrue(check_orthogonality(build_eigen()).passed)

    def test_parameter_preconditions(self):
        with self.assertRaises(ParameterError):
            parameter_point(3, 2)
        with self.assertRaises(ParameterError):
            parameter_point(4, 1)
        with self.assertRaises(ParameterError) as raised:
            parameter_point(5, 2)
        self.assertIn('even', str(raised.exception))
        self.assertEqual(parameter_point(8, 3), {'q': 8, 'r': 64})


class IntersectionTensorTests(SimpleTestCase):
    def test_known_entries(self):
        T = intersection_tensor()
        self.assertEqual(T.p(4, 4, 4), q - 3)
        self.assertEqual(T.p(2, 2, 0), Fraction(1, 2) * q ** 2 * r ** 2)
        self.assertTrue(T.p(1, 3, 4).is_zero)
        self.assertEqual(T.p(3, 3, 3), r ** 2 - 2 * q + 1)

    def test_matches_printed_matrices(self):
        report = check_against_printed_B(intersection_tensor())
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(report.checked, 125)

    def test_perturbed_entry_is_reported(self):
        T = intersection_tensor().replace(0, 0, 0, MultiPoly.constant(2))
        report = check_against_printed_B(T)
        self.assertFalse(report.passed)
        self.assertEqual([f['index'] for f in report.failures], [[0, 0, 0]])

    def test_symbolic_identities(self):
        T = intersection_tensor()
        self.assertTrue(check_symmetry(T).passed)
        self.assertTrue(check_row_sums(T).passed)
        self.assertTrue(check_bose_mesner(T).passed)

    def test_structure(self):
        report = structure_checks(intersection_tensor())
        self.assertTrue(report.passed, report.failures)
        report = structure_checks(concrete_tensor(4, 2))
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(report.details['srg'], ['255', '128', '64', '64'])

    def test_valencies(self):
        self.assertEqual(concrete_tensor(4, 2).valencies(), (1, 64, 128, 60, 2))

    def test_specialization_agrees_with_direct_computation(self):
        symbolic = intersection_tensor()
        for point in ((4, 2), (8, 2), (4, 3)):
            self.assertEqual(symbolic.specialize(*point).entries, concrete_tensor(*point).entries)

    def test_grid_integrality(self):
        for point in settings.DEFAULT_GRID:
            T = concrete_tensor(*point)
            self.assertTrue(check_integrality(T).passed, point)
            self.assertTrue(check_against_printed_B(T).passed, point)
            self.assertTrue(check_bose_mesner(T).passed, point)


class SchemeFileTests(SimpleTestCase):
    def test_round_trip_through_file(self):
        instance = circulant_instance(4, 2)
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'circulant.txt')
            write_scheme_file(instance, path)
            loaded = read_scheme_file(path)
        self.assertEqual(loaded.n, 255)
        self.assertTrue(np.array_equal(loaded.rel, instance.rel))

    def test_truncated_file(self):
        text = format_scheme(circulant_instance(4, 2))
        with self.assertRaises(SchemeFormatError):
            parse_scheme('\n'.join(text.splitlines()[:100]))

    def test_rejects_asymmetric_input(self):
        with self.assertRaises(SchemeFormatError):
            parse_scheme('3 4\n0 1 2\n1 0 3\n3 3 0\n')

    def test_rejects_diagonal(self):
        with self.assertRaises(SchemeFormatError):
            parse_scheme('2 4\n1 1\n1 0\n')

    def test_rejects_class_count(self):
        with self.assertRaises(SchemeFormatError):
            parse_scheme('2 3\n0 1\n1 0\n')


class InstanceValidationTests(SimpleTestCase):
    def test_circulant_has_valencies_but_not_intersection_numbers(self):
        instance = circulant_instance(4, 2)
        self.assertTrue(np.array_equal(instance.rel, instance.rel.T))
        counts = instance.relation_counts()
        self.assertTrue((counts == np.array([1, 64, 128, 60, 2])).all())
        report = validate_instance(instance, 4, 2, samples=20, seed=1)
        self.assertFalse(report.passed)
        self.assertEqual({f['check'] for f in report.failures}, {'intersection'})

    def test_relabeled_edge_breaks_valencies(self):
        instance = circulant_instance(4, 2)
        x, y = 0, int(np.flatnonzero(instance.rel[0] == 1)[0])
        report = validate_instance(instance.with_relation(x, y, 2), 4, 2)
        relations = {f['relation'] for f in report.failures if f['check'] == 'valency'}
        self.assertEqual(relations, {1, 2})

    def test_asymmetric_instance(self):
        instance = circulant_instance(4, 2)
        rel = instance.rel.copy()
        rel[3, 7] = 4 if rel[3, 7] != 4 else 1
        broken = type(instance)(instance.n, rel)
        report = validate_instance(broken, 4, 2)
        symmetry = [f for f in report.failures if f['check'] == 'symmetry']
        self.assertEqual(symmetry[0]['pair'], [3, 7])

    def test_size_mismatch(self):
        with self.assertRaises(SchemeSizeError):
            validate_instance(circulant_instance(4, 2), 8, 2)

    @skipUnless(os.getenv('HADAMARD_SCHEME_FILE'), 'no realized scheme file supplied')
    def test_realized_scheme(self):
        instance = read_scheme_file(os.environ['HADAMARD_SCHEME_FILE'])
        report = validate_instance(instance, 4, 2)
        self.assertTrue(report.passed, report.failures)

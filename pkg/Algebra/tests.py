import random
from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from .exceptions import (
    DegenerateResultantError, MissingVariableError, ModulusMismatchError, NotInvertibleError,
    PoleError, PrecisionError, ZeroPolynomialError,
)
from .linalg import bareiss_det, resultant, sylvester_resultant
from .numeric import complex_roots_of_monic_quadratic, make_context
from .polynomials import X_NAMES, MultiPoly, RatFunc, positivity_certificate
from .quadratic import QuadExtElem
from .sturm import p9_polynomial, sturm_count, univariate

X = MultiPoly.variable


def random_poly(rng, names, max_terms=4, max_degree=8):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        remaining = rng.randint(0, max_degree)
        exponents = []
        for _ in names:
            exp = rng.randint(0, remaining)
            exponents.append(exp)
            remaining -= exp
        terms[tuple(exponents)] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    return MultiPoly.from_terms(names, terms)


def random_point(rng, names):
    return {name: Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for name in names}


class PolynomialArithmeticTests(SimpleTestCase):
    def test_difference_of_squares(self):
        x = X('X01')
        self.assertEqual((x + 1) * (x - 1), x ** 2 - 1)

    def test_p_plus_minus_p_has_no_terms(self):
        p = X('X01') * X('X02') + 3 * X('q') - Fraction(1, 2)
        total = p + (-p)
        self.assertTrue(total.is_zero)
        self.assertEqual(total.terms(), {})

    def test_square_of_sum(self):
        x, y = X('X01'), X('X02')
        self.assertEqual((x + y) ** 2, x ** 2 + 2 * x * y + y ** 2)

    def test_operands_in_different_rings_are_lifted(self):
        p = X('q') + 1
        s = X('X34') * 2
        self.assertEqual(set((p * s).variables), {'X34', 'q'})

    def test_ring_axioms_on_random_polynomials(self):
        rng = random.Random(20240917)
        universe = X_NAMES + ('q', 'r')
        for _ in range(1000):
            names = rng.sample(universe, rng.randint(1, 6))
            a, b, c = (random_poly(rng, names) for _ in range(3))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertTrue((a - a).is_zero)

    def test_evaluation_is_a_ring_homomorphism(self):
        rng = random.Random(7)
        universe = X_NAMES + ('q', 'r')
        for _ in range(1000):
            names = rng.sample(universe, rng.randint(1, 6))
            a, b = random_poly(rng, names), random_poly(rng, names)
            point = random_point(rng, names)
            self.assertEqual((a * b).evaluate(point), a.evaluate(point) * b.evaluate(point))
            self.assertEqual((a + b).evaluate(point), a.evaluate(point) + b.evaluate(point))


class EvaluationTests(SimpleTestCase):
    def test_g_polynomial_at_two_two_two(self):
        x, y, z = X('X01'), X('X02'), X('X12')
        g = x ** 2 + y ** 2 + z ** 2 - x * y * z - 4
        self.assertEqual(g.evaluate({'X01': 2, 'X02': 2, 'X12': 2}), 0)

    def test_cleared_family_value_vanishes(self):
        q, r = X('q'), X('r')
        u = q ** 2 * r ** 2
        poly = u * X('X12') + 2 * (u - 2)
        self.assertEqual(poly.evaluate({'q': 4, 'r': 4, 'X12': Fraction(-127, 64)}), 0)

    def test_zero_polynomial_evaluates_to_zero(self):
        self.assertEqual(MultiPoly.constant(0).evaluate({'X01': 5}), 0)

    def test_missing_variable_is_named(self):
        p = X('X01') + X('X02')
        with self.assertRaises(MissingVariableError) as caught:
            p.evaluate({'X01': 1})
        self.assertEqual(caught.exception.name, 'X02')

    def test_substitute_and_taylor_shift(self):
        q = X('q')
        p = q ** 2 - 16
        self.assertEqual(p.taylor_shift({'q': 4}), q ** 2 + 8 * q)
        self.assertEqual(p.substitute({'q': RatFunc(1, q)}), RatFunc(1 - 16 * q ** 2, q ** 2))

    def test_coefficients_in(self):
        q, r = X('q'), X('r')
        p = 3 * q ** 2 * r + q - 5
        self.assertEqual(p.coefficients_in('q'), [MultiPoly.constant(-5), MultiPoly.constant(1), 3 * r])
        self.assertEqual(p.coefficients_in('X01'), [p])

    def test_primitive_form(self):
        q = X('q')
        self.assertEqual((Fraction(-1, 2) * q ** 2 + Fraction(1, 3)).primitive(), 3 * q ** 2 - 2)
        self.assertEqual(
            (Fraction(-1, 2) * q ** 2 + Fraction(1, 3)).primitive(positive_leading=False),
            -3 * q ** 2 + 2,
        )


class RatFuncTests(SimpleTestCase):
    def test_cancellation_and_equality(self):
        x = X('X01')
        self.assertEqual(RatFunc(x ** 2 - 1, x - 1), RatFunc(x + 1))
        self.assertEqual(RatFunc(x ** 2 - 1, x - 1).den, 1)

    def test_arithmetic(self):
        q = X('q')
        left = RatFunc(1, q) + RatFunc(1, q + 1)
        self.assertEqual(left, RatFunc(2 * q + 1, q * (q + 1)))
        self.assertEqual(RatFunc(q, 2) ** -2, RatFunc(4, q ** 2))

    def test_pole(self):
        q = X('q')
        with self.assertRaises(PoleError):
            RatFunc(1, q - 4).evaluate({'q': 4})

    def test_zero_denominator(self):
        with self.assertRaises(ZeroPolynomialError):
            RatFunc(1, 0)


class PositivityTests(SimpleTestCase):
    def test_positive_after_shift(self):
        q, r = X('q'), X('r')
        certificate = positivity_certificate(q ** 2 * r ** 2 - 1, {'q': 4, 'r': 4})
        self.assertTrue(certificate.passed)
        self.assertEqual(certificate.constant, 255)

    def test_not_certified(self):
        certificate = positivity_certificate(X('q') - 5, {'q': 4})
        self.assertFalse(certificate.passed)


class BareissTests(SimpleTestCase):
    def test_rational_determinant(self):
        rows = [[Fraction(2), Fraction(1), Fraction(3)],
                [Fraction(0), Fraction(0), Fraction(1)],
                [Fraction(4), Fraction(5), Fraction(6)]]
        self.assertEqual(bareiss_det(rows), -6)

    def test_singular(self):
        rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
        self.assertEqual(bareiss_det(rows), 0)


class ResultantTests(SimpleTestCase):
    def test_linear_factors(self):
        x, a, b = X('x'), X('t'), X('u')
        self.assertEqual(resultant(x - a, x - b, 'x'), a - b)

    def test_common_root(self):
        x = X('x')
        self.assertTrue(resultant(x ** 2 - 2, x ** 2 - 2, 'x').is_zero)

    def test_quadratic_against_linear(self):
        x, b, c = X('x'), X('t'), X('u')
        self.assertEqual(resultant(x ** 2 + b * x + 1, x + c, 'x'), c ** 2 - b * c + 1)

    def test_both_constant(self):
        with self.assertRaises(DegenerateResultantError):
            resultant(X('q') + 1, X('q') - 1, 'x')

    def test_zero_input(self):
        with self.assertRaises(ZeroPolynomialError):
            resultant(MultiPoly.constant(0), X('x'), 'x')

    def test_linear_over_quadratic_extension(self):
        modulus = QuadExtElem.unimodular_modulus(Fraction(1, 2))
        one, zero = QuadExtElem.rational(1, modulus), QuadExtElem.rational(0, modulus)
        root = QuadExtElem.generator(modulus)
        # t - x against t - conj(x): the resultant is x - conj(x) = 2x - 1/2
        value = sylvester_resultant([one, -root], [one, -root.conjugate()], one=one, zero=zero)
        self.assertEqual((value.a, value.b), (Fraction(-1, 2), Fraction(2)))
        self.assertNotEqual(value.norm(), 0)
        shared = sylvester_resultant([one, -root], [one + one, -root - root], one=one, zero=zero)
        self.assertFalse(shared)

    def test_commutes_with_specialization(self):
        rng = random.Random(11)
        x = X('x')
        for _ in range(60):
            polys = []
            for _ in range(2):
                degree = rng.randint(1, 3)
                poly = x ** degree
                for k in range(degree):
                    poly = poly + random_poly(rng, ('u', 'w'), max_terms=2, max_degree=2) * x ** k
                polys.append(poly)
            point = random_point(rng, ('u', 'w'))
            generic = resultant(polys[0], polys[1], 'x').evaluate(point)
            special = resultant(polys[0].specialize(point), polys[1].specialize(point), 'x')
            self.assertEqual(generic, special.evaluate({}))


class SturmTests(SimpleTestCase):
    def test_two_roots(self):
        x = X('x')
        self.assertEqual(sturm_count(x ** 2 - 1, -2, 2).count, 2)

    def test_no_real_roots(self):
        x = X('x')
        self.assertEqual(sturm_count(x ** 2 + 1, -2, 2).count, 0)

    def test_degree_nine_polynomial_has_one_root(self):
        self.assertEqual(sturm_count(p9_polynomial(), -2, 2).count, 1)

    def test_zero_polynomial(self):
        with self.assertRaises(ZeroPolynomialError):
            sturm_count(MultiPoly.constant(0), -2, 2)

    def test_endpoint_roots_are_excluded(self):
        x = X('x')
        result = sturm_count(x ** 2 - 1, -1, 1)
        self.assertEqual(result.count, 0)
        self.assertEqual(result.shift_exponent, 1)
        self.assertEqual(sturm_count(x ** 2 - 1, -1, 2).count, 1)
        self.assertEqual(sturm_count((x - 1) ** 2, 1, 2).count, 0)

    def test_unbounded(self):
        x = X('x')
        self.assertEqual(sturm_count((x - 3) * (x + 7) * (x ** 2 + 1)).count, 2)

    def test_univariate_from_leading_coefficient(self):
        self.assertEqual(univariate([1, 0, -2]), X('x') ** 2 - 2)

    def test_agrees_with_sign_scan(self):
        rng = random.Random(3)
        offsets = (2 * np.arange(10000) + 1) / 2000.0 - 5.0
        grid = [Fraction(-5) + Fraction(2 * k + 1, 2000) for k in range(10000)]
        x = X('x')
        for _ in range(1000):
            roots = rng.sample(range(-4, 5), rng.randint(0, 4))
            poly = MultiPoly.constant(rng.choice([-3, -2, -1, 1, 2, 3]))
            for root in roots:
                poly = poly * (x - root)
            if rng.random() < 0.5:
                poly = poly * (x ** 2 + rng.randint(1, 5))
            if poly.is_constant:
                continue
            coeffs = [float(c) for c in reversed(poly.univariate_coefficients('x'))]
            signs = np.sign(np.polyval(coeffs, offsets))
            lo, hi = sorted(rng.sample(range(10000), 2))
            scanned = int(np.count_nonzero(np.diff(signs[lo:hi + 1])))
            self.assertEqual(sturm_count(poly, grid[lo], grid[hi]).count, scanned)


class QuadraticExtensionTests(SimpleTestCase):
    def test_generator_squared(self):
        a01 = Fraction(619, 352)
        modulus = QuadExtElem.unimodular_modulus(a01)
        x = QuadExtElem.generator(modulus)
        self.assertEqual(x * x, QuadExtElem(-1, a01, modulus))

    def test_inverse(self):
        modulus = QuadExtElem.unimodular_modulus(Fraction(1, 3))
        x = QuadExtElem.generator(modulus)
        self.assertEqual(x * x.inverse(), 1)

    def test_sum_with_inverse_is_trace_coefficient(self):
        modulus = QuadExtElem.unimodular_modulus(Fraction(619, 352))
        x = QuadExtElem.generator(modulus)
        self.assertEqual(x + x ** -1, Fraction(619, 352))

    def test_zero_is_not_invertible(self):
        modulus = QuadExtElem.unimodular_modulus(1)
        with self.assertRaises(NotInvertibleError):
            QuadExtElem.rational(0, modulus).inverse()

    def test_moduli_must_agree(self):
        x = QuadExtElem.generator(QuadExtElem.unimodular_modulus(1))
        y = QuadExtElem.generator(QuadExtElem.unimodular_modulus(0))
        with self.assertRaises(ModulusMismatchError):
            x + y

    def test_embeddings_are_homomorphisms(self):
        rng = random.Random(5)
        ctx = make_context(256)
        bound = ctx.mpf('1e-20')
        for _ in range(200):
            modulus = QuadExtElem.unimodular_modulus(Fraction(rng.randint(-19, 19), 10))

            def element():
                return QuadExtElem(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                                   Fraction(rng.randint(1, 9), rng.randint(1, 9)), modulus)

            u, v = element(), element()
            for branch in (0, 1):
                product = u.embed(ctx, branch) * v.embed(ctx, branch)
                self.assertLessEqual(abs((u * v).embed(ctx, branch) - product), bound * abs(product))
                total = u.embed(ctx, branch) + v.embed(ctx, branch)
                self.assertLessEqual(abs((u + v).embed(ctx, branch) - total), bound * (abs(total) + 1))
                inverse = 1 / u.embed(ctx, branch)
                self.assertLessEqual(abs(u.inverse().embed(ctx, branch) - inverse), bound * abs(inverse))


class NumericTests(SimpleTestCase):
    def test_double_root(self):
        ctx = make_context()
        first, second = complex_roots_of_monic_quadratic(-2, 1, ctx)
        self.assertEqual(first, 1)
        self.assertEqual(second, 1)

    def test_unimodular_pair(self):
        ctx = make_context()
        first, second = complex_roots_of_monic_quadratic(Fraction(254, 128), 1, ctx)
        expected = ctx.mpc(-127, ctx.sqrt(255)) / 128
        self.assertLess(abs(first - expected), ctx.mpf('1e-60'))
        self.assertLess(abs(second - ctx.conj(expected)), ctx.mpf('1e-60'))
        self.assertLess(abs(abs(first) - 1), ctx.mpf('1e-60'))

    def test_cube_roots_of_unity(self):
        ctx = make_context()
        first, _ = complex_roots_of_monic_quadratic(1, 1, ctx)
        self.assertLess(abs(first - ctx.mpc(-1, ctx.sqrt(3)) / 2), ctx.mpf('1e-60'))

    def test_precision_floor(self):
        with self.assertRaises(PrecisionError):
            make_context(64)

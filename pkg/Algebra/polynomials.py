"""
Sparse multivariate polynomials and rational functions over the rationals.

A MultiPoly wraps an element of a sympy sparse polynomial ring over QQ.
Each value lives in the ring of the variables it was built from; binary
operations lift both operands into the union ring.  Ring generators are
ordered by VARIABLE_ORDER so term orders and printed forms are stable
between runs.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.orderings import lex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyRing

from .exceptions import AlgebraError, MissingVariableError, PoleError, ZeroPolynomialError

logger = logging.getLogger(__name__)

# Index pairs (i, j), i < j, in the order of the a-vector.
PAIRS = tuple((i, j) for i in range(5) for j in range(i + 1, 5))
X_NAMES = tuple(f'X{i}{j}' for i, j in PAIRS)

# X_{0,1}, ..., X_{3,4}, then the scheme parameters, then auxiliary symbols.
VARIABLE_ORDER = X_NAMES + ('q', 'r', 't', 'u', 'w', 'x')
_POSITION = {name: index for index, name in enumerate(VARIABLE_ORDER)}

# Constants are carried in this one-variable ring.
_ANCHOR = 'q'


def x_name(i, j):
    if i == j:
        raise AlgebraError(f'X_{{{i},{j}}} needs distinct indices')
    i, j = min(i, j), max(i, j)
    return f'X{i}{j}'


def _order_key(name):
    if name in _POSITION:
        return (0, _POSITION[name], '')
    return (1, 0, name)


@lru_cache(maxsize=None)
def _ring(names):
    return PolyRing([Symbol(name) for name in names], QQ, lex)


def ring_for(names):
    names = set(names) or {_ANCHOR}
    return _ring(tuple(sorted(names, key=_order_key)))


def _qq(value):
    if isinstance(value, bool):
        raise TypeError('booleans are not coefficients')
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    raise TypeError(f'cannot use {type(value).__name__} as a rational coefficient')


def _fraction(coeff):
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def _is_scalar(value):
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def _lift_pair(a, b):
    if a.ring == b.ring:
        return a._element, b._element
    ring = ring_for(a.symbols + b.symbols)
    return a._element.set_ring(ring), b._element.set_ring(ring)


def as_poly(value):
    if isinstance(value, MultiPoly):
        return value
    if _is_scalar(value):
        return MultiPoly.constant(value)
    return NotImplemented


class MultiPoly:
    """Polynomial with exact rational coefficients."""

    __slots__ = ('_element',)

    def __init__(self, element):
        self._element = element

    @classmethod
    def variable(cls, name):
        return cls(ring_for((name,)).gens[0])

    @classmethod
    def constant(cls, value):
        ring = ring_for(())
        return cls(ring.ground_new(_qq(value)))

    @classmethod
    def from_terms(cls, variables, terms):
        """Build from ``{exponent_vector: coefficient}`` over ``variables``."""
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise AlgebraError(f'repeated variable in {variables}')
        ring = ring_for(variables)
        positions = [ring.symbols.index(Symbol(name)) for name in variables]
        data = {}
        for exponents, coeff in terms.items():
            if len(exponents) != len(variables):
                raise AlgebraError(
                    f'exponent vector {exponents} does not match variables {variables}'
                )
            monom = [0] * ring.ngens
            for pos, exp in zip(positions, exponents):
                monom[pos] = exp
            monom = tuple(monom)
            data[monom] = data.get(monom, QQ(0)) + _qq(coeff)
        return cls(ring.from_dict(data))

    # structure

    @property
    def ring(self):
        return self._element.ring

    @property
    def symbols(self):
        return tuple(str(symbol) for symbol in self.ring.symbols)

    @property
    def variables(self):
        used = set()
        for monom in self._element.keys():
            used.update(index for index, exp in enumerate(monom) if exp)
        return tuple(name for index, name in enumerate(self.symbols) if index in used)

    def terms(self):
        """Map exponent vectors over ``self.variables`` to Fraction coefficients."""
        symbols = self.symbols
        indices = [symbols.index(name) for name in self.variables]
        return {
            tuple(monom[i] for i in indices): _fraction(coeff)
            for monom, coeff in self._element.items()
        }

    @property
    def is_zero(self):
        return not self._element

    def __bool__(self):
        return bool(self._element)

    @property
    def is_constant(self):
        return not self.variables

    def constant_value(self):
        if not self.is_constant:
            raise AlgebraError(f'{self} is not constant')
        return sum((_fraction(c) for c in self._element.values()), Fraction(0))

    def degree(self, name=None):
        """Total degree, or degree in ``name``; the zero polynomial has degree -1."""
        if self.is_zero:
            return -1
        if name is None:
            return max(sum(monom) for monom in self._element.keys())
        if name not in self.symbols:
            return 0
        index = self.symbols.index(name)
        return max(monom[index] for monom in self._element.keys())

    def leading_coefficient(self):
        if self.is_zero:
            return Fraction(0)
        return _fraction(self._element.LC)

    # arithmetic

    def __add__(self, other):
        if _is_scalar(other):
            return MultiPoly(self._element + _qq(other))
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = _lift_pair(self, other)
        return MultiPoly(a + b)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(-self._element)

    def __sub__(self, other):
        if _is_scalar(other):
            return MultiPoly(self._element - _qq(other))
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = _lift_pair(self, other)
        return MultiPoly(a - b)

    def __rsub__(self, other):
        if _is_scalar(other):
            return MultiPoly(_qq(other) - self._element)
        return NotImplemented

    def __mul__(self, other):
        if _is_scalar(other):
            return MultiPoly(self._element * _qq(other))
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = _lift_pair(self, other)
        return MultiPoly(a * b)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        return MultiPoly(self._element ** exponent)

    def __truediv__(self, other):
        if _is_scalar(other):
            if other == 0:
                raise ZeroDivisionError('polynomial divided by zero')
            other = Fraction(other)
            return MultiPoly(self._element * QQ(other.denominator, other.numerator))
        if isinstance(other, MultiPoly):
            return RatFunc(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if _is_scalar(other):
            return RatFunc(MultiPoly.constant(other), self)
        return NotImplemented

    def __eq__(self, other):
        if _is_scalar(other):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = _lift_pair(self, other)
        return a == b

    __hash__ = None

    def exquo(self, other):
        a, b = _lift_pair(self, as_poly(other))
        try:
            return MultiPoly(a.exquo(b))
        except ExactQuotientFailed as exc:
            raise AlgebraError(f'{other} does not divide {self}') from exc

    def rem(self, other):
        a, b = _lift_pair(self, as_poly(other))
        if not b:
            raise ZeroPolynomialError('remainder modulo the zero polynomial')
        return MultiPoly(a.rem(b))

    def gcd(self, other):
        a, b = _lift_pair(self, as_poly(other))
        return MultiPoly(a.gcd(b))

    def diff(self, name):
        if name not in self.symbols:
            return MultiPoly.constant(0)
        return MultiPoly(self._element.diff(self.ring.gens[self.symbols.index(name)]))

    # evaluation and substitution

    def evaluate(self, assignment):
        """Exact value at a point; ``assignment`` must cover every variable."""
        used = self.variables
        for name in used:
            if name not in assignment:
                raise MissingVariableError(name)
        values = [Fraction(assignment[name]) if name in used else None for name in self.symbols]
        total = Fraction(0)
        for monom, coeff in self._element.items():
            term = _fraction(coeff)
            for value, exp in zip(values, monom):
                if exp:
                    term *= value ** exp
            total += term
        return total

    def _group(self, names):
        """Split terms by their exponents in ``names``.

        Returns the ordered mapped names and a dict from mapped exponent
        vectors to polynomials in the remaining variables.
        """
        symbols = self.symbols
        mapped = [name for name in symbols if name in names]
        kept = [name for name in symbols if name not in names]
        mapped_idx = [symbols.index(name) for name in mapped]
        kept_idx = [symbols.index(name) for name in kept]
        rest_ring = ring_for(kept)
        padding = (0,) * (rest_ring.ngens - len(kept))
        grouped = {}
        for monom, coeff in self._element.items():
            key = tuple(monom[i] for i in mapped_idx)
            rest = tuple(monom[i] for i in kept_idx) + padding
            bucket = grouped.setdefault(key, {})
            bucket[rest] = bucket.get(rest, QQ(0)) + coeff
        return mapped, {key: rest_ring.from_dict(bucket) for key, bucket in grouped.items()}

    def compose(self, images):
        """Replace variables by polynomials or rationals; returns a MultiPoly."""
        mapped, grouped = self._group(images)
        powers = {}
        result = MultiPoly.constant(0)
        for key, rest in grouped.items():
            term = MultiPoly(rest)
            for name, exp in zip(mapped, key):
                if exp:
                    if (name, exp) not in powers:
                        powers[name, exp] = images[name] ** exp
                    term = term * powers[name, exp]
            result = result + term
        return result

    def specialize(self, assignment):
        return self.compose({name: Fraction(value) for name, value in assignment.items()})

    def substitute(self, images):
        """Replace variables by rational functions; returns a RatFunc."""
        mapped, grouped = self._group(images)
        powers = {}
        result = RatFunc(0)
        for key, rest in grouped.items():
            factor = RatFunc(1)
            for name, exp in zip(mapped, key):
                if exp:
                    if (name, exp) not in powers:
                        powers[name, exp] = RatFunc.coerce(images[name]) ** exp
                    factor = factor * powers[name, exp]
            result = result + factor * MultiPoly(rest)
        return result

    def taylor_shift(self, origin):
        return self.compose({
            name: MultiPoly.variable(name) + Fraction(value) for name, value in origin.items()
        })

    # univariate views

    def coefficients_in(self, name):
        """Coefficients in ``name`` from degree 0 upward, as polynomials in the other variables."""
        degree = self.degree(name)
        if degree < 0:
            return []
        if name not in self.symbols:
            return [self]
        _, grouped = self._group((name,))
        return [MultiPoly(grouped[(k,)]) if (k,) in grouped else MultiPoly.constant(0)
                for k in range(degree + 1)]

    def univariate_coefficients(self, name):
        others = [v for v in self.variables if v != name]
        if others:
            raise AlgebraError(f'{self} is not univariate in {name}: also involves {others}')
        return [c.constant_value() for c in self.coefficients_in(name)]

    def primitive(self, positive_leading=True):
        """Scale to coprime integer coefficients.

        With ``positive_leading`` the leading coefficient is made positive;
        otherwise only a positive factor is applied and signs are kept.
        """
        if self.is_zero:
            return self
        _, cleared = self._element.clear_denoms()
        content = cleared.content()
        if positive_leading and cleared.LC < 0:
            content = -content
        return MultiPoly(cleared.quo_ground(content))

    def __str__(self):
        return str(self._element.as_expr())

    def __repr__(self):
        return f'MultiPoly({self})'


class RatFunc:
    """Quotient of two MultiPoly values.

    Numerator and denominator are reduced by their gcd on construction;
    equality is decided by cross-multiplication.
    """

    __slots__ = ('num', 'den')

    def __init__(self, num, den=1):
        num, den = as_poly(num), as_poly(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError('RatFunc parts must be polynomials or rationals')
        if den.is_zero:
            raise ZeroPolynomialError('rational function with zero denominator')
        a, b = _lift_pair(num, den)
        a, b = a.cancel(b)
        self.num = MultiPoly(a)
        self.den = MultiPoly(b)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, RatFunc):
            return value
        return cls(value)

    @staticmethod
    def _other(value):
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, MultiPoly) or _is_scalar(value):
            return RatFunc(value)
        return NotImplemented

    @property
    def variables(self):
        names = set(self.num.variables) | set(self.den.variables)
        return tuple(sorted(names, key=_order_key))

    @property
    def is_zero(self):
        return self.num.is_zero

    def __bool__(self):
        return not self.num.is_zero

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError('division by the zero rational function')
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if self.is_zero:
                raise ZeroDivisionError('negative power of zero')
            return RatFunc(self.den ** -exponent, self.num ** -exponent)
        return RatFunc(self.num ** exponent, self.den ** exponent)

    def __eq__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero

    __hash__ = None

    def evaluate(self, assignment):
        den = self.den.evaluate(assignment)
        if den == 0:
            raise PoleError(f'denominator {self.den} vanishes at {assignment}')
        return self.num.evaluate(assignment) / den

    def specialize(self, assignment):
        return RatFunc(self.num.specialize(assignment), self.den.specialize(assignment))

    def numerator_form(self):
        """Numerator as a primitive integer polynomial with positive leading coefficient."""
        return self.num.primitive()

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f'({self.num})/({self.den})'

    def __repr__(self):
        return f'RatFunc({self})'


@dataclass(frozen=True)
class PositivityCertificate:
    passed: bool
    origin: tuple
    constant: Fraction
    negative_terms: int


def positivity_certificate(poly, origin):
    """Certify ``poly > 0`` on the orthant ``v >= origin[v]`` for every variable.

    After shifting each variable by its origin the polynomial must have only
    nonnegative coefficients and a positive constant term.
    """
    poly = as_poly(poly)
    missing = [name for name in poly.variables if name not in origin]
    if missing:
        raise MissingVariableError(missing[0])
    shifted = poly.taylor_shift({name: origin[name] for name in poly.variables})
    terms = shifted.terms()
    constant = terms.get(tuple(0 for _ in shifted.variables), Fraction(0))
    negative = sum(1 for coeff in terms.values() if coeff < 0)
    logger.debug('positivity of %s: constant %s, %d negative terms', poly, constant, negative)
    return PositivityCertificate(
        passed=negative == 0 and constant > 0,
        origin=tuple(sorted(origin.items())),
        constant=constant,
        negative_terms=negative,
    )

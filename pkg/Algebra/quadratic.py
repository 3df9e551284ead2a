"""
Exact arithmetic in Q[x]/(x^2 - p*x - q0).

Unimodular weights are roots of x^2 - a*x + 1, so the modulus used
throughout the toolkit is (a, -1); the class itself accepts any pair.
"""
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import ModulusMismatchError, NotInvertibleError
from .numeric import complex_roots_of_monic_quadratic, to_mpf


def _rational(value):
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise TypeError(f'{value!r} is not rational')
    return Fraction(value)


@dataclass(frozen=True, eq=False)
class QuadExtElem:
    """The element a + b*x with x^2 = p*x + q0, where modulus = (p, q0)."""

    a: Fraction
    b: Fraction
    modulus: tuple

    def __post_init__(self):
        object.__setattr__(self, 'a', _rational(self.a))
        object.__setattr__(self, 'b', _rational(self.b))
        p, q0 = self.modulus
        object.__setattr__(self, 'modulus', (_rational(p), _rational(q0)))

    @classmethod
    def generator(cls, modulus):
        return cls(Fraction(0), Fraction(1), modulus)

    @classmethod
    def rational(cls, value, modulus):
        return cls(_rational(value), Fraction(0), modulus)

    @classmethod
    def unimodular_modulus(cls, a):
        """Modulus of x^2 - a*x + 1."""
        return (_rational(a), Fraction(-1))

    def _coerce(self, other):
        if isinstance(other, QuadExtElem):
            if other.modulus != self.modulus:
                raise ModulusMismatchError(self.modulus, other.modulus)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadExtElem.rational(other, self.modulus)
        return NotImplemented

    @property
    def is_rational(self):
        return self.b == 0

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExtElem(self.a + other.a, self.b + other.b, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElem(-self.a, -self.b, self.modulus)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExtElem(self.a - other.a, self.b - other.b, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p, q0 = self.modulus
        bd = self.b * other.b
        return QuadExtElem(
            self.a * other.a + bd * q0,
            self.a * other.b + self.b * other.a + bd * p,
            self.modulus,
        )

    __rmul__ = __mul__

    def norm(self):
        p, q0 = self.modulus
        return self.a * self.a + self.a * self.b * p - self.b * self.b * q0

    def trace(self):
        p, _ = self.modulus
        return 2 * self.a + self.b * p

    def conjugate(self):
        """Image under x -> p - x, the other root of the modulus."""
        p, _ = self.modulus
        return QuadExtElem(self.a + self.b * p, -self.b, self.modulus)

    def inverse(self):
        norm = self.norm()
        if norm == 0:
            raise NotInvertibleError(f'{self} has zero norm over modulus {self.modulus}')
        conj = self.conjugate()
        return QuadExtElem(conj.a / norm, conj.b / norm, self.modulus)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = QuadExtElem.rational(1, self.modulus)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExtElem):
            return (self.a, self.b, self.modulus) == (other.a, other.b, other.modulus)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.modulus))

    def embed(self, ctx, branch=0):
        """Complex value with x sent to root ``branch`` of the modulus."""
        p, q0 = self.modulus
        root = complex_roots_of_monic_quadratic(-p, -q0, ctx)[branch]
        return to_mpf(ctx, self.a) + to_mpf(ctx, self.b) * root

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f'{self.a} + ({self.b})*x'

    def __repr__(self):
        p, q0 = self.modulus
        return f'QuadExtElem({self}; x^2 = {p}*x + {q0})'

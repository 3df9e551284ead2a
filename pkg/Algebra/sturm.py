"""
Real-root counting with Sturm sequences in exact rational arithmetic.

Endpoints that are roots are moved inward by 2**-k for the smallest k >= 1
that leaves both endpoints nonzero and the cut-off slivers root free; the
exponent is reported with the count.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import AlgebraError, ZeroPolynomialError
from .polynomials import MultiPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SturmCount:
    count: int
    lo: Fraction | None
    hi: Fraction | None
    shift_exponent: int
    sequence_length: int


def _variable(p):
    names = p.variables
    if len(names) > 1:
        raise AlgebraError(f'{p} is not univariate')
    return names[0] if names else 'x'


def _horner(coeffs, point):
    value = Fraction(0)
    for coeff in reversed(coeffs):
        value = value * point + coeff
    return value


def _sign(value):
    return (value > 0) - (value < 0)


def sturm_sequence(p, name=None):
    """p, p', then negated remainders, each scaled to a primitive integer polynomial."""
    if p.is_zero:
        raise ZeroPolynomialError('Sturm sequence of the zero polynomial')
    name = name or _variable(p)
    sequence = [p.primitive(positive_leading=False)]
    current = p.diff(name)
    while not current.is_zero:
        sequence.append(current.primitive(positive_leading=False))
        current = -sequence[-2].rem(sequence[-1])
    return sequence


class _Evaluator:
    def __init__(self, sequence, name):
        self.coeffs = [s.univariate_coefficients(name) if not s.is_constant
                       else [s.constant_value()] for s in sequence]

    def value(self, point, index=0):
        return _horner(self.coeffs[index], point)

    def variations(self, point):
        """Sign changes at ``point``; None stands for +infinity, '-' for -infinity."""
        signs = []
        for coeffs in self.coeffs:
            if point is None:
                s = _sign(coeffs[-1])
            elif point == '-':
                s = _sign(coeffs[-1]) * (-1) ** (len(coeffs) - 1)
            else:
                s = _sign(_horner(coeffs, point))
            if s:
                signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_between(evaluator, lo, hi):
    return evaluator.variations('-' if lo is None else lo) - evaluator.variations(hi)


def _squarefree(p, name):
    return p.exquo(p.gcd(p.diff(name)))


def _sliver_is_root_free(sqf, name, root, inner):
    """No root of ``sqf`` strictly between ``root`` (a root) and ``inner``."""
    deflated = sqf.exquo(MultiPoly.variable(name) - root)
    if deflated.is_constant:
        return True
    evaluator = _Evaluator(sturm_sequence(deflated, name), name)
    lo, hi = min(root, inner), max(root, inner)
    return _count_between(evaluator, lo, hi) == 0


def sturm_count(p, lo=None, hi=None):
    """Number of distinct real roots of ``p`` in the open interval (lo, hi).

    ``lo=None`` and ``hi=None`` stand for -infinity and +infinity.
    """
    if p.is_zero:
        raise ZeroPolynomialError('cannot count roots of the zero polynomial')
    lo = None if lo is None else Fraction(lo)
    hi = None if hi is None else Fraction(hi)
    if lo is not None and hi is not None and lo >= hi:
        raise AlgebraError(f'empty interval ({lo}, {hi})')
    if p.is_constant:
        return SturmCount(0, lo, hi, 0, 1)

    name = _variable(p)
    sequence = sturm_sequence(p, name)
    evaluator = _Evaluator(sequence, name)
    lo_root = lo is not None and evaluator.value(lo) == 0
    hi_root = hi is not None and evaluator.value(hi) == 0

    exponent = 0
    new_lo, new_hi = lo, hi
    if lo_root or hi_root:
        sqf = _squarefree(p, name)
        exponent = 1
        while True:
            eps = Fraction(1, 2 ** exponent)
            new_lo = lo + eps if lo_root else lo
            new_hi = hi - eps if hi_root else hi
            if (new_lo is None or new_hi is None or new_lo < new_hi) \
                    and (not lo_root or (evaluator.value(new_lo) != 0
                                         and _sliver_is_root_free(sqf, name, lo, new_lo))) \
                    and (not hi_root or (evaluator.value(new_hi) != 0
                                         and _sliver_is_root_free(sqf, name, hi, new_hi))):
                break
            exponent += 1
        logger.info('endpoint is a root; interval shrunk by 2^-%d to (%s, %s)', exponent, new_lo, new_hi)

    count = _count_between(evaluator, new_lo, new_hi)
    return SturmCount(count, new_lo, new_hi, exponent, len(sequence))


# Degree-9 polynomial whose root in (-2, 2) is the a_{0,4} candidate at
# (q, m) = (4, 2); coefficients from the leading term down.
P9_COEFFICIENTS = (
    Fraction(1),
    Fraction(-235721, 1785),
    Fraction(-17957726593, 62475),
    Fraction(33219815829811, 937125),
    Fraction(-12554318926285933, 4685625),
    Fraction(29740292638491103, 312375),
    Fraction(-696525696876795217, 187425),
    Fraction(851886544261448041, 37485),
    Fraction(-124583919439776136, 2499),
    Fraction(30888835313436500, 833),
)


def univariate(coefficients, name='x'):
    """MultiPoly from coefficients listed from the leading term down."""
    degree = len(coefficients) - 1
    return MultiPoly.from_terms((name,), {
        (degree - k,): Fraction(c) for k, c in enumerate(coefficients) if c
    })


def p9_polynomial():
    return univariate(P9_COEFFICIENTS)

"""High-precision complex numbers on per-computation mpmath contexts."""
import logging
from fractions import Fraction

import mpmath
from django.conf import settings

from .exceptions import PrecisionError

logger = logging.getLogger(__name__)


def make_context(bits=None):
    """A fresh mpmath context fixed at ``bits`` of binary precision."""
    if bits is None:
        bits = getattr(settings, 'DEFAULT_PRECISION', 256)
    minimum = getattr(settings, 'MIN_PRECISION', 128)
    if bits < minimum:
        raise PrecisionError(f'precision {bits} bits is below the {minimum}-bit floor')
    ctx = mpmath.MPContext()
    ctx.prec = bits
    return ctx


def to_mpf(ctx, value):
    if isinstance(value, Fraction):
        return ctx.mpf(value.numerator) / value.denominator
    if isinstance(value, int):
        return ctx.mpf(value)
    if isinstance(value, str):
        return ctx.mpf(value)
    return ctx.convert(value)


def complex_roots_of_monic_quadratic(a1, a0, ctx):
    """Both roots of x^2 + a1*x + a0.

    Branch 0 is the root with nonnegative imaginary part (the larger real
    part when both are real); branch 1 is the other one.
    """
    a1 = to_mpf(ctx, a1)
    a0 = to_mpf(ctx, a0)
    root = ctx.sqrt(ctx.mpc(a1 * a1 - 4 * a0))
    first = (-a1 + root) / 2
    second = (-a1 - root) / 2
    if (ctx.im(first), ctx.re(first)) < (ctx.im(second), ctx.re(second)):
        first, second = second, first
    return first, second


def modulus_deviation(ctx, value):
    """| |value| - 1 |."""
    return abs(abs(ctx.mpc(value)) - 1)


def tolerance(ctx, text):
    return ctx.mpf(text)


def format_complex(ctx, value, digits=30):
    return ctx.nstr(ctx.mpc(value), digits)

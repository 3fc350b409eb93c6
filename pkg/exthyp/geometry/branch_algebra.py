# -*- coding: utf-8 -*-
"""
Sign and branch conventions.

One global branch policy: principal square roots and logarithms, cut along
the negative real axis, so that the square root of a negative real is a
positive multiple of i.
"""
import cmath
import logging
import math
from enum import IntEnum
from functools import reduce
from operator import mul
from typing import Union

from exthyp.constants.tolerances import SGN_TOLERANCE
from exthyp.errors import ConventionViolationError, DegenerateInputError
from exthyp.types.complex_measure import ComplexMeasure, measure

logger = logging.getLogger(__name__)

Number = Union[complex, float, int]


class SignValue(IntEnum):
    POSITIVE = 1
    NEGATIVE = -1

    @classmethod
    def of(cls, value: int) -> 'SignValue':
        return cls.POSITIVE if value > 0 else cls.NEGATIVE


def _clean(z: Number) -> complex:
    # -0.0 would send a negative real across the cut
    z = complex(z)
    return complex(z.real + 0.0, z.imag + 0.0)


def sqrt_conv(a: float) -> ComplexMeasure:
    """
    Square root of a real number: the usual root for a >= 0, sqrt(-a) i for
    a < 0. Never returns a negative or negative imaginary value.
    """
    a = float(a)
    if a >= 0:
        return measure(math.sqrt(a))
    return measure(complex(0.0, math.sqrt(-a)))


def principal_sqrt(z: Number) -> complex:
    return cmath.sqrt(_clean(z))


def sgn(a: Number, tolerance: float = SGN_TOLERANCE) -> SignValue:
    """
    Sign of a real or pure imaginary number: +1 for positive or positive
    imaginary, -1 for negative or negative imaginary.

    :param a: Value on the real or imaginary axis
    :param tolerance: Relative size allowed for the minor component
    :raises DegenerateInputError: a is zero
    :raises ConventionViolationError: both components are significant
    """
    z = complex(a)
    size = abs(z)
    if size == 0.0 or not math.isfinite(size):
        raise DegenerateInputError(f'sgn is undefined at {a!r}')
    if abs(z.imag) <= tolerance * size:
        return SignValue.of(z.real)
    if abs(z.real) <= tolerance * size:
        return SignValue.of(z.imag)
    raise ConventionViolationError(f'sgn expects a real or pure imaginary value, got {z!r}')


def _check_msgn_args(args) -> list:
    values = [float(a) for a in args]
    if not values:
        raise ValueError('msgn needs at least one argument')
    if any(v == 0.0 for v in values):
        raise DegenerateInputError(f'msgn is undefined with a zero argument: {values}')
    return values


def msgn(*args: float) -> SignValue:
    """
    Many-element sign: (-1)^floor(alpha / 2), alpha the number of negative
    arguments.
    """
    values = _check_msgn_args(args)
    alpha = sum(1 for v in values if v < 0)
    return SignValue.of((-1) ** (alpha // 2))


def msgn_by_roots(*args: float) -> SignValue:
    """
    msgn from its definition, prod(sqrt a_i) / sqrt(prod a_i).

    Used to cross-check the closed form; magnitudes cancel so only the
    resulting unit matters.
    """
    values = _check_msgn_args(args)
    numerator = reduce(mul, (complex(sqrt_conv(v)) / math.sqrt(abs(v)) for v in values), 1 + 0j)
    product = reduce(mul, (math.copysign(1.0, v) for v in values), 1.0)
    ratio = numerator / complex(sqrt_conv(product))
    if abs(ratio.imag) > 1e-12 or abs(abs(ratio.real) - 1.0) > 1e-12:
        raise ConventionViolationError(f'msgn ratio is not a real unit: {ratio!r}')
    return SignValue.of(ratio.real)


def arccosh_strip(q: Number) -> ComplexMeasure:
    """
    The preimage of cosh computed as log(q + sqrt(q - 1) sqrt(q + 1)).

    Re z >= 0 always. Im z lies in [0, pi] when Im q >= 0 (in particular for
    every real q), and in (-pi, 0) otherwise.
    """
    q = _clean(q)
    if not (math.isfinite(q.real) and math.isfinite(q.imag)):
        raise ValueError(f'arccosh_strip needs a finite argument, got {q!r}')
    z = cmath.log(q + cmath.sqrt(_clean(q - 1)) * cmath.sqrt(_clean(q + 1)))
    return measure(z)


def as_real(z: Number, what: str = 'value', tolerance: float = SGN_TOLERANCE) -> float:
    """Real part of a value that must lie on the real axis."""
    z = complex(z)
    if abs(z.imag) > tolerance * max(1.0, abs(z)):
        raise ConventionViolationError(f'{what} should be real, got {z!r}')
    return z.real


def as_imaginary(z: Number, what: str = 'value', tolerance: float = SGN_TOLERANCE) -> float:
    """Imaginary part of a value that must lie on the imaginary axis."""
    z = complex(z)
    if abs(z.real) > tolerance * max(1.0, abs(z)):
        raise ConventionViolationError(f'{what} should be pure imaginary, got {z!r}')
    return z.imag

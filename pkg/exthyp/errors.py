# -*- coding: utf-8 -*-
"""
Exception types raised by exthyp.

All of them derive from ``ValueError`` so callers that only know about bad
numeric input keep working.
"""


class ExtHypError(ValueError):
    """Base class for every exthyp error."""


class DimensionMismatchError(ExtHypError):
    """Two vectors (or a matrix and a vector) live in different R^{n,1}."""


class DegenerateInputError(ExtHypError):
    """
    Zero vectors, lightlike vectors where a norm is required, dependent
    vertices, tangents that vanish.
    """


class ConventionViolationError(ExtHypError):
    """A quantity that must be real or pure imaginary is genuinely complex."""


class QuadratureError(ExtHypError):
    """Numerical integration failed to converge."""


class SamplingError(ExtHypError):
    """Rejection sampling ran out of retries."""


class UnsupportedContourError(ExtHypError):
    """Only the clockwise detour around r = 1 is implemented."""

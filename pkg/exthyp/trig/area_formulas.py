# -*- coding: utf-8 -*-
"""
Triangle area three ways (angle defect, cosine-law composite, half-perimeter
product) and the hyperbolic/spherical correspondence of the laws.
"""
import cmath
import logging
import math
from enum import Enum
from typing import Callable, Dict, Tuple

from exthyp.constants.tolerances import ZERO_DIVISOR
from exthyp.errors import DegenerateInputError
from exthyp.misc.util import relative_residual
from exthyp.trig.trig_laws import model_sides
from exthyp.types.complex_measure import ComplexMeasure, measure
from exthyp.types.ext_triangle import ExtTriangle
from exthyp.types.model import Model
from exthyp.types.reports import AreaResult
from exthyp.utilities.log.decorators import log

logger = logging.getLogger(__name__)


class CorrespondenceLaw(Enum):
    COSINE = 'cosine'
    DUAL = 'dual'
    SINE = 'sine'
    AREA = 'area'

    @classmethod
    def parse(cls, text: str) -> 'CorrespondenceLaw':
        key = text.strip().lower().replace('_', '-')
        if key == 'dual-cosine':
            key = 'dual'
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f'Unknown law {text!r}; expected one of {[law.value for law in cls]}') from None


def area_defect(t: ExtTriangle, model: Model = Model.HYPERBOLIC) -> ComplexMeasure:
    """pi - A - B - C on the hyperbolic sphere, A + B + C - pi on the spherical one."""
    t.require_measured('The angle defect')
    total = sum(complex(x) for x in t.angles)
    return measure(math.pi - total if model is Model.HYPERBOLIC else total - math.pi)


def _half_tangent(model: Model) -> Callable[[complex], complex]:
    def tangent(x: complex) -> complex:
        if model is Model.HYPERBOLIC:
            num, den = cmath.sinh(x / 2), cmath.cosh(x / 2)
        else:
            num, den = cmath.sin(x / 2), cmath.cos(x / 2)
        if abs(den) <= ZERO_DIVISOR * max(1.0, abs(num)):
            raise DegenerateInputError(f'Half-perimeter factor at a pole: {x}')
        return num / den
    return tangent


def half_perimeter_product(a: complex, b: complex, c: complex,
                           model: Model = Model.HYPERBOLIC) -> Tuple[complex, complex]:
    """p = (a + b + c) / 2 and the product of the four half-angle tangents."""
    a, b, c = complex(a), complex(b), complex(c)
    p = (a + b + c) / 2
    tangent = _half_tangent(model)
    return p, tangent(p) * tangent(p - a) * tangent(p - b) * tangent(p - c)


def area_sides(a: complex, b: complex, c: complex, model: Model = Model.HYPERBOLIC) -> ComplexMeasure:
    """
    Area from the sides alone: tan^2(S/4) = tanh(p/2) tanh((p-a)/2)
    tanh((p-b)/2) tanh((p-c)/2), with tan in place of tanh on the spherical
    sphere. Principal square root and arctangent, so classical triangles get
    a real positive area.

    :raises DegenerateInputError: a factor sits on a pole or the area diverges
    """
    _, product = half_perimeter_product(a, b, c, model)
    try:
        area = 4 * cmath.atan(cmath.sqrt(product))
    except (ValueError, ZeroDivisionError) as e:
        raise DegenerateInputError(f'No side-formula area for sides {a}, {b}, {c}: {e}') from None
    if not (math.isfinite(area.real) and math.isfinite(area.imag)):
        raise DegenerateInputError(f'Side-formula area diverges for sides {a}, {b}, {c}')
    return measure(area)


def _cosine_angle(opposite: complex, first: complex, second: complex, model: Model) -> complex:
    if model is Model.HYPERBOLIC:
        num = cmath.cosh(first) * cmath.cosh(second) - cmath.cosh(opposite)
        den = cmath.sinh(first) * cmath.sinh(second)
    else:
        num = cmath.cos(opposite) - cmath.cos(first) * cmath.cos(second)
        den = cmath.sin(first) * cmath.sin(second)
    if abs(den) <= ZERO_DIVISOR:
        raise DegenerateInputError(f'Cosine law undefined: vanishing sides next to {opposite}')
    return cmath.acos(num / den)


def area_cosine(a: complex, b: complex, c: complex, model: Model = Model.HYPERBOLIC) -> ComplexMeasure:
    """The angle defect with each angle recovered from the sides by the cosine law."""
    a, b, c = complex(a), complex(b), complex(c)
    total = (_cosine_angle(a, b, c, model) + _cosine_angle(b, c, a, model)
             + _cosine_angle(c, a, b, model))
    return measure(math.pi - total if model is Model.HYPERBOLIC else total - math.pi)


@log(logger)
def area_result(t: ExtTriangle, model: Model = Model.HYPERBOLIC) -> AreaResult:
    t.require_measured('The triangle area')
    a, b, c = model_sides(t, model)
    return AreaResult(
        s_defect=area_defect(t, model),
        s_sides=area_sides(a, b, c, model),
        s_cosine=area_cosine(a, b, c, model),
        p=measure((a + b + c) / 2),
        model=model.value,
    )


def _rotations(values):
    x, y, z = values
    return (x, y, z), (y, z, x), (z, x, y)


def _spherical_cosine(x: complex, y: complex, z: complex) -> complex:
    return (cmath.cos(z) - cmath.cos(x) * cmath.cos(y)) / (cmath.sin(x) * cmath.sin(y))


def _cosine_cross(sides_h, sides_s) -> Tuple[float, float]:
    correspondence = symmetry = 0.0
    for (a, b, c), (a_s, b_s, c_s) in zip(_rotations(sides_h), _rotations(sides_s)):
        # cos C from both forms, cross-multiplied by the other denominator
        hyperbolic = (cmath.cosh(a) * cmath.cosh(b) - cmath.cosh(c)) * cmath.sin(a_s) * cmath.sin(b_s)
        spherical = (cmath.cos(c_s) - cmath.cos(a_s) * cmath.cos(b_s)) * cmath.sinh(a) * cmath.sinh(b)
        correspondence = max(correspondence, relative_residual(hyperbolic, spherical))
        symmetry = max(symmetry, relative_residual(_spherical_cosine(a_s, b_s, c_s),
                                                   _spherical_cosine(-a_s, -b_s, -c_s)))
    return correspondence, symmetry


def _dual_cross(sides_h, sides_s) -> Tuple[float, float]:
    correspondence = max(relative_residual(cmath.cosh(x), cmath.cos(y)) for x, y in zip(sides_h, sides_s))
    symmetry = max(relative_residual(cmath.cos(y), cmath.cos(-y)) for y in sides_s)
    return correspondence, symmetry


def _sine_cross(sides_h, sides_s, angles) -> Tuple[float, float]:
    correspondence = symmetry = 0.0
    for x, y, angle in zip(sides_h, sides_s, angles):
        sine = cmath.sin(angle)
        correspondence = max(correspondence, relative_residual(cmath.sinh(x) * sine, 1j * cmath.sin(y) * sine))
        symmetry = max(symmetry, relative_residual(cmath.sin(y) ** 2 * sine ** 2, cmath.sin(-y) ** 2 * sine ** 2))
    return correspondence, symmetry


def _area_cross(sides_h, sides_s) -> Tuple[float, float]:
    _, hyperbolic = half_perimeter_product(*sides_h, model=Model.HYPERBOLIC)
    _, spherical = half_perimeter_product(*sides_s, model=Model.SPHERICAL)
    _, mirrored = half_perimeter_product(*(-y for y in sides_s), model=Model.SPHERICAL)
    return relative_residual(hyperbolic, spherical), relative_residual(spherical, mirrored)


def correspondence_check(law: CorrespondenceLaw, t: ExtTriangle) -> Dict[str, float]:
    """
    Evaluate a law in its hyperbolic form at the lengths of t and in its
    spherical form at the lengths -i l, and report the residual between the
    two. 'symmetry' compares the spherical form at l_S and at -l_S, which
    agree for laws even in the lengths.
    """
    t.require_measured(f'The {law.value} correspondence')
    sides_h = tuple(complex(s) for s in t.sides)
    sides_s = model_sides(t, Model.SPHERICAL)
    angles = tuple(complex(x) for x in t.angles)
    if law is CorrespondenceLaw.COSINE:
        correspondence, symmetry = _cosine_cross(sides_h, sides_s)
    elif law is CorrespondenceLaw.DUAL:
        correspondence, symmetry = _dual_cross(sides_h, sides_s)
    elif law is CorrespondenceLaw.SINE:
        correspondence, symmetry = _sine_cross(sides_h, sides_s, angles)
    else:
        correspondence, symmetry = _area_cross(sides_h, sides_s)
    logger.debug('%s correspondence on %s: %g / %g', law.value, t.stratum, correspondence, symmetry)
    return {'correspondence': correspondence, 'symmetry': symmetry}

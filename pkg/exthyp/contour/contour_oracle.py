# -*- coding: utf-8 -*-
"""
Contour quadrature of the singular radial integrals.

Paths run along the real axis and step over the pole at r = 1 on the upper
semicircle, so (1 - r^2)^{1/2} continues to -i (r^2 - 1)^{1/2} beyond it.
"""
import cmath
import logging
import math
import warnings
from typing import Callable, Tuple

import mpmath
from scipy.integrate import IntegrationWarning, quad

from exthyp.constants.tolerances import DEFAULT_DETOUR, QUAD_ACCEPT, QUAD_EPSABS, QUAD_EPSREL
from exthyp.errors import DegenerateInputError, QuadratureError, UnsupportedContourError
from exthyp.types.complex_measure import ComplexMeasure, measure
from exthyp.types.contour_spec import ContourOrientation, ContourSpec, Integrand, RadialProfile, sphere_volume
from exthyp.types.model import Model

logger = logging.getLogger(__name__)


def continued_root(z: complex) -> complex:
    """(1 - z^2)^{1/2} continued over the upper half plane: -i sqrt(z - 1) sqrt(z + 1)."""
    z = complex(z)
    return -1j * cmath.sqrt(z - 1) * cmath.sqrt(z + 1)


def _quad_real(g: Callable[[float], float], lo: float, hi: float, limit: int) -> float:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always', IntegrationWarning)
        value, error = quad(g, lo, hi, epsabs=QUAD_EPSABS, epsrel=QUAD_EPSREL, limit=limit)
    if not (math.isfinite(value) and math.isfinite(error)):
        raise QuadratureError(f'Quadrature over [{lo}, {hi}] produced {value} +- {error}')
    if caught:
        if error > QUAD_ACCEPT * (1.0 + abs(value)):
            raise QuadratureError(f'Quadrature over [{lo}, {hi}] did not converge: {caught[-1].message}')
        logger.debug('quad over [%g, %g] warned (%s), error estimate %g accepted',
                     lo, hi, caught[-1].message, error)
    return value


def _quad_complex(g: Callable[[float], complex], lo: float, hi: float, limit: int) -> complex:
    re = _quad_real(lambda t: complex(g(t)).real, lo, hi, limit)
    im = _quad_real(lambda t: complex(g(t)).imag, lo, hi, limit)
    return complex(re, im)


def _segment(f: Integrand, lo: float, hi: float, limit: int) -> complex:
    if math.isinf(hi):
        # r = 1 / s on [lo, inf)
        return _quad_complex(lambda s: f(1.0 / s) / (s * s), 0.0, 1.0 / lo, limit)
    return _quad_complex(f, lo, hi, limit)


def _detour(f: Integrand, delta: float, limit: int) -> complex:
    def g(theta: float) -> complex:
        e = cmath.exp(1j * theta)
        return f(1.0 + delta * e) * 1j * delta * e
    # theta runs from pi down to 0
    return -_quad_complex(g, 0.0, math.pi, limit)


def _check_orientation(path: ContourSpec):
    if path.orientation is not ContourOrientation.CLOCKWISE:
        raise UnsupportedContourError(f'{path.orientation.value} contours are not implemented')


def integrate_contour(f: Integrand, path: ContourSpec) -> ComplexMeasure:
    """
    Integrate f from path.a to path.b along the clockwise contour.

    :param f: Integrand analytic near the path, its only pole at r = 1
    :param path: The contour
    :raises QuadratureError: a segment failed to converge
    :raises UnsupportedContourError: counterclockwise orientation
    """
    _check_orientation(path)
    limit = path.samples_per_segment
    if not path.crosses_pole:
        return measure(_segment(f, path.a, path.b, limit))
    delta = path.delta
    total = (_segment(f, path.a, 1.0 - delta, limit)
             + _detour(f, delta, limit)
             + _segment(f, 1.0 + delta, path.b, limit))
    logger.debug('contour %s -> %s (delta %g) = %s', path.a, path.b, delta, total)
    return measure(total)


def integrate_polygonal(f: Integrand, path: ContourSpec) -> ComplexMeasure:
    """
    Independent evaluation with mpmath along the polygon
    a -> 1 - delta -> 1 + delta i -> 1 + delta -> b.
    """
    _check_orientation(path)
    b = mpmath.inf if math.isinf(path.b) else path.b
    if path.crosses_pole:
        d = path.delta
        points = [path.a, 1 - d, mpmath.mpc(1, d), 1 + d, b]
    else:
        points = [path.a, b]
    try:
        value = mpmath.quad(lambda z: f(complex(z)), points)
    except (ZeroDivisionError, ValueError) as e:
        raise QuadratureError(f'Polygonal quadrature failed: {e}') from None
    return measure(complex(value))


def length_integrand(z: complex) -> complex:
    return 1.0 / (1.0 - z * z)


def length_1d(b: float) -> ComplexMeasure:
    """
    Length from 0 to b on the hyperbolic line: artanh(b) below 1,
    arcoth(b) + pi i / 2 beyond it; b = inf gives pi i / 2.

    :raises DegenerateInputError: b = 1
    """
    if b < 0 or math.isnan(b):
        raise ValueError(f'length_1d needs b >= 0, got {b}')
    if b == 1.0:
        raise DegenerateInputError('Length to the boundary point r = 1 diverges')
    if b < 1.0:
        return measure(math.atanh(b))
    if math.isinf(b):
        return measure(complex(0.0, math.pi / 2))
    return measure(complex(math.atanh(1.0 / b), math.pi / 2))


def volume_integrand(profile: RadialProfile) -> Integrand:
    """r^{n-1} F(r) / (1 - r^2)^{(n+1)/2} with the continued root."""
    n = profile.n

    def f(z: complex) -> complex:
        return z ** (n - 1) * profile.F(z) / continued_root(z) ** (n + 1)
    return f


def volume_radial(profile: RadialProfile, b: float, delta: float = DEFAULT_DETOUR) -> ComplexMeasure:
    """
    Hyperbolic volume of the radially described domain out to radius b
    (b may exceed 1 or be infinite).
    """
    return integrate_contour(volume_integrand(profile), radial_path(b, delta))


def radial_path(b: float, delta: float) -> ContourSpec:
    if b > 1.0:
        gap = b - 1.0
        if delta >= min(1.0, gap) / 2:
            delta = min(1.0, gap) / 4
            logger.debug('Detour radius shrunk to %g for b = %g', delta, b)
    return ContourSpec(0.0, b, delta)


def total_volume(n: int, model: Model = Model.HYPERBOLIC, delta: float = DEFAULT_DETOUR) -> ComplexMeasure:
    """
    Volume of the whole sphere, two hemispheres each integrated out to
    infinity. i^n vol(S^n) on the hyperbolic sphere, vol(S^n) on the
    spherical one.
    """
    value = 2 * complex(volume_radial(RadialProfile.full_sphere(n), math.inf, delta))
    if model is Model.SPHERICAL:
        value *= (-1j) ** n
    return measure(value)


def expected_total_volume(n: int, model: Model = Model.HYPERBOLIC) -> complex:
    value = sphere_volume(n)
    return value * 1j ** n if model is Model.HYPERBOLIC else complex(value)


def epsilon_integral(profile: RadialProfile, b: float, eps: float) -> ComplexMeasure:
    """
    The real-axis approximation with the singularity pushed off by
    d_eps = 1 - eps i: integrand d r^{n-1} F(r) / (d^2 - r^2)^{(n+1)/2}.
    Tends to volume_radial as eps -> 0.
    """
    if not eps > 0:
        raise ValueError(f'eps must be > 0, got {eps}')
    n = profile.n
    d = mpmath.mpc(1, -eps)
    power = mpmath.mpf(n + 1) / 2

    def f(r):
        return d * r ** (n - 1) * profile.F(complex(r)) / mpmath.power(d * d - r * r, power)

    end = mpmath.inf if math.isinf(b) else b
    points = [0, 1, end] if b > 1.0 else [0, end]
    try:
        value = mpmath.quad(f, points)
    except (ZeroDivisionError, ValueError) as e:
        raise QuadratureError(f'epsilon quadrature failed: {e}') from None
    return measure(complex(value))


def delta_spread(f: Integrand, path: ContourSpec) -> Tuple[ComplexMeasure, float]:
    """The contour value and its change when the detour radius is halved."""
    value = integrate_contour(f, path)
    return value, abs(value - integrate_contour(f, path.halved()))

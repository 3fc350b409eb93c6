# -*- coding: utf-8 -*-
"""
Distances, angles and duals on the extended sphere.

``extended_distance`` resolves the analytically continued hyperbolic distance
into seven cases by the causal classes of the two vectors and the
discriminant D = <x,y>^2 - <x,x><y,y>. Every finite value satisfies
<x,y> = |x| |y| cosh d.
"""
import cmath
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, NamedTuple, Optional, Tuple

import numpy as np
import scipy.linalg

from exthyp.constants.tolerances import TANGENT_TOLERANCE
from exthyp.errors import DegenerateInputError, DimensionMismatchError
from exthyp.geometry.branch_algebra import arccosh_strip, sgn
from exthyp.geometry.lorentz_core import (
    causal_class, column_matrix, inner_product, lorentz_cross, lorentz_norm, tangent_toward,
)
from exthyp.misc.util import relative_residual
from exthyp.types.complex_measure import ComplexMeasure, measure
from exthyp.types.ext_distance import DistanceCase, ExtDistance
from exthyp.types.ext_triangle import DualPair
from exthyp.types.lorentz_isometry import signature_matrix
from exthyp.types.minkowski_vector import MinkowskiVector

logger = logging.getLogger(__name__)

HALF_PI_I = complex(0.0, math.pi / 2)
PI_I = complex(0.0, math.pi)


def _proportionality(x: MinkowskiVector, y: MinkowskiVector) -> Optional[float]:
    """lambda with y = lambda x, or None when x and y are independent."""
    xa, ya = x.array, y.array
    lam = float(np.dot(xa, ya) / np.dot(xa, xa))
    if np.linalg.norm(ya - lam * xa) <= 1e-9 * np.linalg.norm(ya):
        return lam
    return None


def _flip(d: complex) -> complex:
    # d(-x, y) for a lower-sheet x moved to the upper sheet
    return PI_I - d


def _strip(ratio: float) -> complex:
    return complex(arccosh_strip(max(1.0, ratio)))


def extended_distance(x: MinkowskiVector, y: MinkowskiVector) -> ExtDistance:
    """
    Extended hyperbolic distance d_H(x, y) between the points of the sphere
    represented by two nonzero vectors.

    :raises DegenerateInputError: x or y is the zero vector
    :raises DimensionMismatchError: x and y live in different spaces
    """
    x.check_dimension(y)
    cx, cy = causal_class(x), causal_class(y)
    q = inner_product(x, y)
    scale = math.sqrt(x.euclidean_norm_squared() * y.euclidean_norm_squared())

    if cx.lightlike and cy.lightlike:
        lam = _proportionality(x, y)
        if lam is None:
            return ExtDistance.infinite(DistanceCase.LIGHTLIKE_PAIR)
        return ExtDistance.finite(0.0 if lam > 0 else PI_I, DistanceCase.LIGHTLIKE_PAIR)

    if cx.lightlike or cy.lightlike:
        if abs(q) <= TANGENT_TOLERANCE * scale:
            return ExtDistance.finite(HALF_PI_I, DistanceCase.ONE_LIGHTLIKE)
        return ExtDistance.infinite(DistanceCase.ONE_LIGHTLIKE)

    nx, ny = inner_product(x, x), inner_product(y, y)

    if cx.timelike and cy.timelike:
        flips = 0
        if x.time < 0:
            x, flips = -x, flips + 1
        if y.time < 0:
            y, flips = -y, flips + 1
        size = math.sqrt(nx * ny)
        d = _strip(-inner_product(x, y) / size)
        if flips % 2:
            d = _flip(d)
        return ExtDistance.finite(d, DistanceCase.TIMELIKE_PAIR)

    if cx.timelike or cy.timelike:
        t, s = (x, y) if cx.timelike else (y, x)
        flipped = t.time < 0
        if flipped:
            t = -t
        size = math.sqrt(-inner_product(t, t) * inner_product(s, s))
        d = HALF_PI_I + math.asinh(-inner_product(t, s) / size)
        if flipped:
            d = _flip(d)
        return ExtDistance.finite(d, DistanceCase.TIMELIKE_SPACELIKE)

    size = math.sqrt(nx * ny)
    disc = q * q - nx * ny
    if abs(disc) <= TANGENT_TOLERANCE * max(q * q, nx * ny):
        return ExtDistance.finite(0.0 if q > 0 else PI_I, DistanceCase.SPACELIKE_TANGENT)
    if disc < 0:
        cosine = min(1.0, max(-1.0, q / size))
        return ExtDistance.finite(complex(0.0, math.acos(cosine)), DistanceCase.SPACELIKE_SECANT)
    r = _strip(abs(q) / size)
    return ExtDistance.finite(-r if q > 0 else PI_I + r, DistanceCase.SPACELIKE_DISJOINT)


def spherical_distance(x: MinkowskiVector, y: MinkowskiVector) -> ExtDistance:
    """d_S(x, y) = -i d_H(x, y)."""
    return extended_distance(x, y).scaled(-1j)


def angle_between(v: MinkowskiVector, w: MinkowskiVector) -> ComplexMeasure:
    """
    Angle between two vectors, -i d_H(v, w).

    Satisfies <v, w> = |v| |w| cos(angle).

    :raises DegenerateInputError: v, w proportional or at infinite distance
    """
    v.check_dimension(w)
    if _proportionality(v, w) is not None:
        raise DegenerateInputError(f'{v} and {w} are proportional; no angle between them')
    distance = extended_distance(v, w)
    if distance.is_infinite:
        raise DegenerateInputError(f'Infinite distance between {v} and {w} ({distance.case.value})')
    return measure(-1j * distance.value)


def vertex_angle(p: MinkowskiVector, q1: MinkowskiVector, q2: MinkowskiVector) -> ComplexMeasure:
    """Angle at p between the geodesics toward q1 and toward q2."""
    return angle_between(tangent_toward(p, q1), tangent_toward(p, q2))


def dual_basis(*vectors: MinkowskiVector) -> Tuple[MinkowskiVector, ...]:
    """
    The basis w_i with <v_i, w_j> = delta_ij, W = S (V^T)^{-1}.

    Takes n + 1 vectors of R^{n,1}.

    :raises DegenerateInputError: the vectors are linearly dependent
    """
    if not vectors:
        raise ValueError('dual_basis needs vectors')
    n = vectors[0].dimension
    if len(vectors) != n + 1:
        raise DimensionMismatchError(f'dual_basis needs {n + 1} vectors in R^{{{n},1}}, got {len(vectors)}')
    v = column_matrix(vectors)
    if np.linalg.cond(v) > 1e12:
        raise DegenerateInputError(f'Vertices {vectors} are linearly dependent')
    s = signature_matrix(n)
    w = s @ scipy.linalg.solve(v.T, np.eye(n + 1))
    defect = np.max(np.abs(w.T @ s @ v - np.eye(n + 1)))
    if defect > 1e-9:
        logger.warning('dual_basis residual %g for %s', defect, vectors)
    return tuple(MinkowskiVector.from_array(w[:, i]) for i in range(n + 1))


def geometric_dual(w: MinkowskiVector) -> MinkowskiVector:
    """
    sgn(-|w|^2) w: timelike w is kept, spacelike w is negated.

    :raises DegenerateInputError: w is lightlike, where both directions qualify
    """
    if causal_class(w).lightlike:
        raise DegenerateInputError(f'Geometric dual of the lightlike vector {w} is not well defined')
    return w if inner_product(w, w) < 0 else -w


def dual_pairs(*vectors: MinkowskiVector) -> Tuple[DualPair, ...]:
    """Algebraic and geometric duals of a basis; lightlike duals are kept as their own geometric dual."""
    pairs = []
    for v, w in zip(vectors, dual_basis(*vectors)):
        if causal_class(w).lightlike:
            logger.debug('Dual %s of %s is lightlike', w, v)
            pairs.append(DualPair(v, w, w))
        else:
            pairs.append(DualPair(v, w, geometric_dual(w)))
    return tuple(pairs)


class LensLune(NamedTuple):
    lune: ComplexMeasure
    lens: ComplexMeasure


class LensRelation(Enum):
    """How the lens angle alpha follows from the lune angle theta."""
    SUPPLEMENT = 'pi - theta'
    NEGATED_SUPPLEMENT = 'theta - pi'
    EXTENSION = 'pi + theta'


def _check_on_dual(p: MinkowskiVector, x: MinkowskiVector):
    scale = math.sqrt(p.euclidean_norm_squared() * x.euclidean_norm_squared())
    if abs(inner_product(p, x)) > TANGENT_TOLERANCE * scale:
        raise DegenerateInputError(f'{p} does not lie on the dual of {x}')


def _inward(edge: MinkowskiVector, other: MinkowskiVector) -> MinkowskiVector:
    """edge or -edge, whichever points into the half-space sgn(<o,o>) <z, o> < 0."""
    side = sgn(inner_product(other, other)) * inner_product(edge, other)
    scale = math.sqrt(edge.euclidean_norm_squared() * other.euclidean_norm_squared())
    if abs(side) <= TANGENT_TOLERANCE * scale:
        raise DegenerateInputError(f'{edge} lies on the dual of {other}')
    return -edge if side > 0 else edge


def lens_lune_angles(x: MinkowskiVector, y: MinkowskiVector, p: MinkowskiVector) -> LensLune:
    """
    Lune and lens angles at p of the hemispheres bounded by x^perp and y^perp.

    The lune angle is the vertex angle at p between x_p and y_p. The lens is
    the angle between the edge directions of the two hemispheres
    {z : sgn(<x,x>) <z,x> < 0} and {z : sgn(<y,y>) <z,y> < 0}, each edge
    oriented into the other hemisphere; cos(lens) = -<x,y> / (|x| |y|).

    :raises DegenerateInputError: p not in x^perp and y^perp, p or x or y lightlike
    """
    x.check_dimension(y)
    x.check_dimension(p)
    if p.dimension != 2:
        raise DimensionMismatchError(f'lens_lune_angles works in R^{{2,1}}, got R^{{{p.dimension},1}}')
    for v in (p, x, y):
        if causal_class(v).lightlike:
            raise DegenerateInputError(f'{v} is lightlike')
    _check_on_dual(p, x)
    _check_on_dual(p, y)
    lune = vertex_angle(p, x, y)
    e_x = _inward(lorentz_cross(x, p), y)
    e_y = _inward(lorentz_cross(y, p), x)
    return LensLune(lune, angle_between(e_x, e_y))


def lens_relation(angles: LensLune, tolerance: float = 1e-8) -> Optional[LensRelation]:
    """First of pi - theta, theta - pi, pi + theta matching the lens angle."""
    theta = complex(angles.lune)
    candidates = (
        (LensRelation.SUPPLEMENT, math.pi - theta),
        (LensRelation.NEGATED_SUPPLEMENT, theta - math.pi),
        (LensRelation.EXTENSION, math.pi + theta),
    )
    for relation, value in candidates:
        if abs(value - angles.lens) <= tolerance * (1.0 + abs(theta)):
            return relation
    logger.warning('No lens relation matches lune %s and lens %s', angles.lune, angles.lens)
    return None


class InnerProductKind(Enum):
    TIMELIKE_PAIR = 'timelike-pair'
    TIMELIKE_SPACELIKE = 'timelike-spacelike'
    SECANT = 'secant'
    PARALLEL = 'parallel'
    ULTRAPARALLEL = 'ultraparallel'


@dataclass(frozen=True)
class InnerProductReading:
    """
    Classical reading of <x, y> as sign * |||x||| |||y||| * f(quantity),
    where f is cosh, sinh, -cos or 1 depending on the kind.
    """
    kind: InnerProductKind
    quantity: float
    sign: int
    value: float

    def reconstruct(self, x: MinkowskiVector, y: MinkowskiVector) -> float:
        size = math.sqrt(abs(inner_product(x, x) * inner_product(y, y)))
        f = {
            InnerProductKind.TIMELIKE_PAIR: math.cosh,
            InnerProductKind.TIMELIKE_SPACELIKE: math.sinh,
            InnerProductKind.SECANT: lambda t: -math.cos(t),
            InnerProductKind.PARALLEL: lambda t: 1.0,
            InnerProductKind.ULTRAPARALLEL: math.cosh,
        }[self.kind]
        return self.sign * size * f(self.quantity)


def interpret_inner_product(x: MinkowskiVector, y: MinkowskiVector) -> InnerProductReading:
    """
    Case split of <x, y> for non-lightlike vectors: distance between two
    hyperbolic points, distance from a point to a hyperplane, or the angle,
    tangency or distance between two hyperplanes.

    :raises DegenerateInputError: x or y lightlike
    """
    x.check_dimension(y)
    cx, cy = causal_class(x), causal_class(y)
    if cx.lightlike or cy.lightlike:
        raise DegenerateInputError(f'No classical reading with a lightlike vector: {x}, {y}')
    q = inner_product(x, y)
    nx, ny = inner_product(x, x), inner_product(y, y)
    size = math.sqrt(abs(nx * ny))
    sign = 1 if q >= 0 else -1
    if cx.timelike and cy.timelike:
        # same sheet means <x, y> < 0
        quantity = math.acosh(max(1.0, abs(q) / size))
        return InnerProductReading(InnerProductKind.TIMELIKE_PAIR, quantity, sign, q)
    if cx.timelike or cy.timelike:
        quantity = math.asinh(abs(q) / size)
        return InnerProductReading(InnerProductKind.TIMELIKE_SPACELIKE, quantity, sign, q)
    disc = q * q - nx * ny
    if abs(disc) <= TANGENT_TOLERANCE * max(q * q, nx * ny):
        return InnerProductReading(InnerProductKind.PARALLEL, 0.0, sign, q)
    if disc < 0:
        angle = math.acos(min(1.0, max(-1.0, -q / size)))
        return InnerProductReading(InnerProductKind.SECANT, angle, 1, q)
    quantity = math.acosh(abs(q) / size)
    return InnerProductReading(InnerProductKind.ULTRAPARALLEL, quantity, sign, q)


def corollary_residuals(x: MinkowskiVector, y: MinkowskiVector, p: MinkowskiVector) -> Dict[str, float]:
    """
    Relative residuals of the four inner-product identities at p in
    x^perp and y^perp: plain angle, tangent angle at p, lens angle and
    spherical distance.
    """
    q = inner_product(x, y)
    nx, ny = complex(lorentz_norm(x)), complex(lorentz_norm(y))
    angles = lens_lune_angles(x, y, p)
    xp, yp = tangent_toward(p, x), tangent_toward(p, y)
    qp = inner_product(xp, yp)
    d_s = spherical_distance(x, y)
    return {
        'angle': relative_residual(q, nx * ny * cmath.cos(angle_between(x, y))),
        'tangent_angle': relative_residual(
            qp, complex(lorentz_norm(xp)) * complex(lorentz_norm(yp)) * cmath.cos(angles.lune)),
        'lens_angle': relative_residual(q, -nx * ny * cmath.cos(angles.lens)),
        'spherical_distance': relative_residual(q, nx * ny * cmath.cos(d_s.value)),
    }


def tangent_line_length(x: MinkowskiVector, y: MinkowskiVector, z: MinkowskiVector) -> ExtDistance:
    """
    Length between y and z on the line x^perp tangent to the boundary at the
    ideal point x: 0 on the same side of x, pi i on opposite sides, pi i / 2
    when one of them is x itself.

    :raises DegenerateInputError: x not lightlike, or y, z off x^perp
    """
    if not causal_class(x).lightlike:
        raise DegenerateInputError(f'{x} is not an ideal point')
    _check_on_dual(x, y)
    _check_on_dual(x, z)
    return extended_distance(y, z)

# -*- coding: utf-8 -*-
"""
Vectors of R^{n,1}: the bilinear form, norms, causal classes, isometries and
tangent directions.
"""
import logging
import math
from typing import Optional, Sequence

import numpy as np

from exthyp.constants.tolerances import CAUSAL_TOLERANCE, TANGENT_TOLERANCE
from exthyp.errors import DegenerateInputError, DimensionMismatchError
from exthyp.geometry.branch_algebra import sqrt_conv
from exthyp.types.causal_class import CausalClass, CausalTag, Sheet
from exthyp.types.complex_measure import ComplexMeasure, measure
from exthyp.types.lorentz_isometry import LorentzIsometry, signature_matrix
from exthyp.types.minkowski_vector import MinkowskiVector
from exthyp.types.model import Model

logger = logging.getLogger(__name__)


def inner_product(x: MinkowskiVector, y: MinkowskiVector) -> float:
    """
    <x, y> = -x_0 y_0 + x_1 y_1 + ... + x_n y_n

    :raises DimensionMismatchError: x and y live in different spaces
    """
    x.check_dimension(y)
    return math.fsum([-x.coords[0] * y.coords[0]] + [a * b for a, b in zip(x.coords[1:], y.coords[1:])])


def default_tolerance(x: MinkowskiVector) -> float:
    return CAUSAL_TOLERANCE * max(1.0, x.euclidean_norm_squared())


def causal_class(x: MinkowskiVector, tolerance: Optional[float] = None) -> CausalClass:
    """
    Timelike when <x,x> < -tau, spacelike when <x,x> > tau, lightlike in
    between. The sheet of a timelike vector is the sign of x_0.

    :param x: Nonzero vector
    :param tolerance: tau; defaults to 1e-9 * max(1, |x|^2) (Euclidean)
    """
    if x.is_zero():
        raise DegenerateInputError('The zero vector has no causal class')
    tau = default_tolerance(x) if tolerance is None else tolerance
    if tau < 0:
        raise ValueError(f'Classification tolerance must be >= 0, got {tau}')
    q = inner_product(x, x)
    if q < -tau:
        return CausalClass(CausalTag.TIMELIKE, Sheet.UPPER if x.time > 0 else Sheet.LOWER)
    if q > tau:
        return CausalClass(CausalTag.SPACELIKE)
    return CausalClass(CausalTag.LIGHTLIKE)


def lorentz_norm(x: MinkowskiVector, tolerance: Optional[float] = None) -> ComplexMeasure:
    """
    <x,x>^{1/2}: positive real for spacelike, positive imaginary for
    timelike, 0 for lightlike (and for the zero vector).
    """
    tau = default_tolerance(x) if tolerance is None else tolerance
    q = inner_product(x, x)
    if abs(q) <= tau:
        return measure(0.0)
    return sqrt_conv(q)


def model_norm(x_p: MinkowskiVector, p: MinkowskiVector, model: Model = Model.HYPERBOLIC) -> ComplexMeasure:
    """
    Norm of a tangent vector x_p at a non-ideal point p of the model sphere.

    Hyperbolic sphere: |||x||| at a hyperbolic point; at a Lorentzian point
    i|||x||| (spacelike), -|||x||| (timelike), 0 (lightlike). The spherical
    sphere divides each of these by i.

    :raises DegenerateInputError: p is ideal (lightlike)
    """
    x_p.check_dimension(p)
    base = causal_class(p)
    if base.lightlike:
        raise DegenerateInputError(f'Base point {p} is ideal; tangent norms are undefined there')
    scale = TANGENT_TOLERANCE * math.sqrt(x_p.euclidean_norm_squared() * p.euclidean_norm_squared())
    if abs(inner_product(x_p, p)) > scale:
        raise DegenerateInputError(f'{x_p} is not tangent at {p}')
    q = inner_product(x_p, x_p)
    if abs(q) <= default_tolerance(x_p):
        value = 0j
    else:
        size = math.sqrt(abs(q))
        if base.timelike:
            value = complex(size)
        elif q > 0:
            value = complex(0.0, size)
        else:
            value = complex(-size)
    if model is Model.SPHERICAL:
        value = value / 1j
    return measure(value)


def apply_isometry(m: LorentzIsometry, x: MinkowskiVector) -> MinkowskiVector:
    if m.dimension != x.dimension:
        raise DimensionMismatchError(f'O({m.dimension},1) cannot act on R^{{{x.dimension},1}}')
    return MinkowskiVector.from_array(m.matrix @ x.array)


def tangent_toward(p: MinkowskiVector, q: MinkowskiVector) -> MinkowskiVector:
    """
    Direction at p of the geodesic from p toward q: the part of q that is
    Lorentz-orthogonal to p, u = q - (<q,p>/<p,p>) p.

    :raises DegenerateInputError: p lightlike, or q proportional to p
    """
    p.check_dimension(q)
    pp = inner_product(p, p)
    if causal_class(p).lightlike:
        raise DegenerateInputError(f'No tangent directions at the ideal point {p}')
    u = q.array - (inner_product(q, p) / pp) * p.array
    if np.linalg.norm(u) <= 1e-12 * max(1.0, math.sqrt(q.euclidean_norm_squared())):
        raise DegenerateInputError(f'{q} is proportional to {p}; the tangent vanishes')
    return MinkowskiVector.from_array(u)


def gram_matrix(vectors: Sequence[MinkowskiVector]) -> np.ndarray:
    """V^T S V for the matrix V with the given columns."""
    v = column_matrix(vectors)
    return v.T @ signature_matrix(v.shape[0] - 1) @ v


def column_matrix(vectors: Sequence[MinkowskiVector]) -> np.ndarray:
    if not vectors:
        raise ValueError('Need at least one vector')
    for other in vectors[1:]:
        vectors[0].check_dimension(other)
    return np.column_stack([v.array for v in vectors])


def lorentz_cross(a: MinkowskiVector, b: MinkowskiVector) -> MinkowskiVector:
    """
    A vector of R^{2,1} Lorentz-orthogonal to both a and b: S (a x b).
    """
    a.check_dimension(b)
    if a.dimension != 2:
        raise DimensionMismatchError(f'lorentz_cross is defined on R^{{2,1}}, got R^{{{a.dimension},1}}')
    return MinkowskiVector.from_array(signature_matrix(2) @ np.cross(a.array, b.array))


def upper_sheet(x: MinkowskiVector) -> MinkowskiVector:
    """Flip a lower-sheet timelike vector onto the upper sheet; others pass through."""
    cls = causal_class(x)
    if cls.timelike and cls.sheet is Sheet.LOWER:
        return -x
    return x

# -*- coding: utf-8 -*-
"""
Measured triangles and the generalized cosine, dual cosine and sine laws.

A triangle is given by three independent vertices of R^{2,1}. Sides are the
extended distances between them and angles the vertex angles of the
geodesics; with these conventions the classical formulas hold in every
causal stratum, with cosh and sinh taken of complex lengths. Ideal vertices
and sides on tangent lines leave some sides infinite or some angles
undefined; only the cross-multiplied laws are checked there.
"""
import cmath
import logging
import math
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from exthyp.constants.tolerances import RIGHT_ANGLE_TOLERANCE, TANGENT_TOLERANCE, ZERO_DIVISOR
from exthyp.errors import ConventionViolationError, DegenerateInputError, DimensionMismatchError
from exthyp.geometry.branch_algebra import msgn, sgn
from exthyp.geometry.lorentz_core import apply_isometry, causal_class, gram_matrix, inner_product, lorentz_norm
from exthyp.geometry.metric_geometry import dual_basis, dual_pairs, extended_distance, vertex_angle
from exthyp.misc.util import relative_residual
from exthyp.trig.sign_identities import verify_sign_lemmas
from exthyp.types.ext_distance import DistanceCase
from exthyp.types.ext_triangle import ExtTriangle
from exthyp.types.lorentz_isometry import LorentzIsometry
from exthyp.types.minkowski_vector import MinkowskiVector, as_vector
from exthyp.types.model import Model
from exthyp.types.reports import LawReport
from exthyp.utilities.log.decorators import log

logger = logging.getLogger(__name__)

SIDE_NAMES = ('a', 'b', 'c')
ANGLE_NAMES = ('A', 'B', 'C')

# (opposite, first, second) for each vertex
_ROTATIONS = ((0, 1, 2), (1, 2, 0), (2, 0, 1))

# Sides along a line tangent to the boundary or through an ideal point
BOUNDARY_CASES = (DistanceCase.SPACELIKE_TANGENT, DistanceCase.ONE_LIGHTLIKE, DistanceCase.LIGHTLIKE_PAIR)


def _pairs(vertices):
    v1, v2, v3 = vertices
    return (v2, v3), (v1, v3), (v1, v2)


def _discriminant_sign(x: MinkowskiVector, y: MinkowskiVector) -> str:
    q, nx, ny = inner_product(x, y), inner_product(x, x), inner_product(y, y)
    disc = q * q - nx * ny
    if abs(disc) <= TANGENT_TOLERANCE * max(q * q, abs(nx * ny)):
        return '0'
    return '+' if disc > 0 else '-'


def stratum_tag(vertices: Sequence[MinkowskiVector]) -> str:
    """
    '<n>T<m>S/<D signs of a, b, c>', e.g. '1T2S/++-'; ideal vertices add
    '<k>L', e.g. '1T1S1L/+0+'.
    """
    classes = [causal_class(v) for v in vertices]
    timelike = sum(1 for c in classes if c.timelike)
    ideal = sum(1 for c in classes if c.lightlike)
    counts = f'{timelike}T{len(vertices) - timelike - ideal}S' + (f'{ideal}L' if ideal else '')
    signs = ''.join(_discriminant_sign(x, y) for x, y in _pairs(vertices))
    return f'{counts}/{signs}'


def _sides_and_angles(vertices):
    """Distances along the three sides and the vertex angles, None where an angle does not exist."""
    v1, v2, v3 = vertices
    distances = tuple(extended_distance(x, y) for x, y in _pairs(vertices))
    angles = []
    for name, (p, q1, q2) in zip(ANGLE_NAMES, ((v1, v2, v3), (v2, v1, v3), (v3, v1, v2))):
        try:
            angles.append(vertex_angle(p, q1, q2))
        except DegenerateInputError as e:
            logger.debug('Angle %s undefined: %s', name, e)
            angles.append(None)
    return distances, tuple(angles)


def _measure_sides_angles(vertices):
    distances, angles = _sides_and_angles(vertices)
    for d in distances:
        if d.is_infinite:
            raise DegenerateInputError(f'Side at infinite distance ({d.case.value}) in {vertices}')
    for name, angle in zip(ANGLE_NAMES, angles):
        if angle is None:
            raise DegenerateInputError(f'Angle {name} undefined in {vertices}')
    return distances, angles


@log(logger)
def measure_triangle(v1, v2, v3) -> ExtTriangle:
    """
    Measure the triangle with vertices v1, v2, v3 in R^{2,1}.

    Ideal vertices and sides on lines tangent to the boundary are allowed:
    such sides and the angles that cannot be measured are listed in
    ``degenerate``, infinite sides and missing angles stay None. The dual
    triangle is measured from the geometric duals; its fields stay None when
    a dual vertex is lightlike or a dual side is infinite.

    :raises DimensionMismatchError: vertices not in R^{2,1}
    :raises DegenerateInputError: dependent vertices
    """
    vertices = tuple(as_vector(v) for v in (v1, v2, v3))
    for v in vertices:
        if v.dimension != 2:
            raise DimensionMismatchError(f'Triangles live in R^{{2,1}}, got {v}')
    duals = dual_pairs(*vertices)
    distances, angles = _sides_and_angles(vertices)
    degenerate = tuple(SIDE_NAMES[k] for k, d in enumerate(distances) if d.is_infinite or d.case in BOUNDARY_CASES)
    degenerate += tuple(ANGLE_NAMES[k] for k, angle in enumerate(angles) if angle is None)
    if degenerate:
        logger.info('Degenerate triangle %s: %s', vertices, ', '.join(degenerate))

    dual_sides = dual_angles = None
    geometric = tuple(p.geometric_dual for p in duals)
    if not any(causal_class(w).lightlike for w in geometric):
        try:
            dual_distances, dual_angles = _measure_sides_angles(geometric)
            dual_sides = tuple(d.value for d in dual_distances)
        except DegenerateInputError as e:
            logger.debug('Dual triangle not measured: %s', e)
            dual_angles = None

    return ExtTriangle(
        vertices=vertices,
        sides=tuple(d.value for d in distances),
        side_cases=tuple(d.case for d in distances),
        angles=angles,
        norms=tuple(lorentz_norm(v) for v in vertices),
        duals=duals,
        dual_norms=tuple(lorentz_norm(p.algebraic_dual) for p in duals),
        gram_determinant=float(np.linalg.det(gram_matrix(vertices))),
        stratum=stratum_tag(vertices),
        dual_sides=dual_sides,
        dual_angles=dual_angles,
        degenerate=degenerate,
    )


def _trig(model: Model) -> Tuple[Callable, Callable]:
    if model is Model.SPHERICAL:
        return cmath.cos, cmath.sin
    return cmath.cosh, cmath.sinh


def model_sides(t: ExtTriangle, model: Model = Model.HYPERBOLIC) -> Tuple[Optional[complex], ...]:
    """Side lengths in the given model, d_S = -i d_H; infinite sides stay None."""
    factor = -1j if model is Model.SPHERICAL else 1.0
    return tuple(None if s is None else factor * complex(s) for s in t.sides)


def _angles(t: ExtTriangle) -> Tuple[Optional[complex], ...]:
    return tuple(None if x is None else complex(x) for x in t.angles)


def _law_residual(report: LawReport, name: str, lhs: complex, numerator: complex, denominator: complex,
                  cross: bool = False):
    # lhs = numerator / denominator
    if abs(denominator) > ZERO_DIVISOR and not cross:
        report.record(name, relative_residual(lhs, numerator / denominator))
    else:
        logger.debug('%s: denominator %s, cross-multiplied', name, denominator)
        report.record(name, relative_residual(lhs * denominator, numerator), degenerate=True)


def _skip(report: LawReport, name: str):
    report.values.setdefault('skipped', []).append(name)


def verify_cosine_laws(t: ExtTriangle, model: Model = Model.HYPERBOLIC) -> LawReport:
    """
    Cosine and dual cosine laws at all three vertices.

    Hyperbolic: cos C = (cosh a cosh b - cosh c) / (sinh a sinh b) and
    cosh c = (cos A cos B + cos C) / (sin A sin B). The spherical forms use
    the spherical lengths with cos and sin. On a degenerate triangle every
    law is checked cross-multiplied, and a law involving an infinite side or
    a missing angle is skipped.
    """
    report = LawReport(t.stratum)
    ch, sh = _trig(model)
    sides = model_sides(t, model)
    angles = _angles(t)
    cross = t.is_degenerate
    for k, i, j in _ROTATIONS:
        name = f'cosine_{ANGLE_NAMES[k]}'
        if None in (sides[i], sides[j], sides[k], angles[k]):
            _skip(report, name)
        else:
            ci, cj, ck = ch(sides[i]), ch(sides[j]), ch(sides[k])
            numerator = ci * cj - ck if model is Model.HYPERBOLIC else ck - ci * cj
            _law_residual(report, name, cmath.cos(angles[k]), numerator, sh(sides[i]) * sh(sides[j]), cross)
        name = f'dual_cosine_{SIDE_NAMES[k]}'
        if None in (sides[k], angles[i], angles[j], angles[k]):
            _skip(report, name)
        else:
            _law_residual(report, name, ch(sides[k]),
                          cmath.cos(angles[i]) * cmath.cos(angles[j]) + cmath.cos(angles[k]),
                          cmath.sin(angles[i]) * cmath.sin(angles[j]), cross)
    report.values.update(model=model.value, sides=sides, angles=angles)
    return report


def verify_sine_law(t: ExtTriangle, model: Model = Model.HYPERBOLIC) -> LawReport:
    """
    sinh a sin B = sinh b sin A for each pair, cross-multiplied, and the
    squared form sin^2 A sinh^2 b sinh^2 c = 1 - cosh^2 a - cosh^2 b - cosh^2 c
    + 2 cosh a cosh b cosh c (cos and sin for the spherical model). Laws
    involving an infinite side or a missing angle are skipped.
    """
    report = LawReport(t.stratum)
    ch, sh = _trig(model)
    sides = model_sides(t, model)
    sines = [None if x is None else cmath.sin(x) for x in _angles(t)]
    volume = None
    if None not in sides:
        cosh_a, cosh_b, cosh_c = (ch(s) for s in sides)
        volume = 1 - cosh_a ** 2 - cosh_b ** 2 - cosh_c ** 2 + 2 * cosh_a * cosh_b * cosh_c
    for k, i, j in _ROTATIONS:
        name = f'sine_{SIDE_NAMES[i]}{SIDE_NAMES[j]}'
        if None in (sides[i], sides[j], sines[i], sines[j]):
            _skip(report, name)
        else:
            report.record(name, relative_residual(sh(sides[i]) * sines[j], sh(sides[j]) * sines[i]))
        name = f'sine_squared_{ANGLE_NAMES[k]}'
        if volume is None or sines[k] is None:
            _skip(report, name)
        else:
            report.record(name, relative_residual(sines[k] ** 2 * sh(sides[i]) ** 2 * sh(sides[j]) ** 2, volume))
    return report


def right_angle_index(t: ExtTriangle, tolerance: float = RIGHT_ANGLE_TOLERANCE) -> Optional[int]:
    for k, angle in enumerate(t.angles):
        if angle is not None and abs(complex(angle) - math.pi / 2) <= tolerance:
            return k
    return None


def verify_right_triangle(t: ExtTriangle) -> LawReport:
    """
    With C the right angle: cosh c = cosh a cosh b, sinh a = sin A sinh c and
    cosh b = cos B / sin A.

    :raises DegenerateInputError: no angle equals pi/2, or t is degenerate
    """
    t.require_measured('The right triangle relations')
    k = right_angle_index(t)
    if k is None:
        raise DegenerateInputError(f'No right angle among {t.angles}')
    _, i, j = _ROTATIONS[k]
    a, b, c = (complex(t.sides[n]) for n in (i, j, k))
    angle_a, angle_b = complex(t.angles[i]), complex(t.angles[j])
    report = LawReport(t.stratum)
    report.record('right_cosh', relative_residual(cmath.cosh(c), cmath.cosh(a) * cmath.cosh(b)))
    report.record('right_sinh', relative_residual(cmath.sinh(a), cmath.sin(angle_a) * cmath.sinh(c)))
    _law_residual(report, 'right_cos', cmath.cosh(b), cmath.cos(angle_b), cmath.sin(angle_a))
    report.values['right_angle'] = ANGLE_NAMES[k]
    return report


def _safe_sign(value: complex) -> Optional[int]:
    try:
        return int(sgn(value))
    except (DegenerateInputError, ConventionViolationError):
        return None


def _safe_msgn(*args: float) -> Optional[int]:
    try:
        return int(msgn(*args))
    except DegenerateInputError:
        return None


def verify_angle_signs(t: ExtTriangle) -> LawReport:
    """sgn(sin A) = -msgn(-1, -|v1|^2, -|w2|^2, -|w3|^2) and its cyclic forms."""
    t.require_measured('The angle sign rule')
    report = LawReport(t.stratum)
    qv, qw = t.norms_squared, t.dual_norms_squared
    for k, i, j in _ROTATIONS:
        name = f'sin_sign_{ANGLE_NAMES[k]}'
        measured = _safe_sign(cmath.sin(complex(t.angles[k])))
        predicted = _safe_msgn(-1, -qv[k], -qw[i], -qw[j])
        if measured is None or predicted is None:
            report.record(name, 0.0, degenerate=True)
            continue
        report.record(name, 0.0 if measured == -predicted else 1.0)
    return report


def verify_sign_identities(t: ExtTriangle) -> LawReport:
    """
    The sinh sign rule on every side of t,
    sgn(sinh b) = -msgn(-1, -|v1|^2, -|v3|^2, -|w2|^2) = sgn(-|v1|^3 |v3|^3 |w2|^3),
    merged with the exhaustive msgn lemmas over all admissible sign patterns.
    """
    t.require_measured('The sinh sign rule')
    report = LawReport(t.stratum)
    qv, qw = t.norms_squared, t.dual_norms_squared
    norms = [complex(n) for n in t.norms]
    dual_norms = [complex(n) for n in t.dual_norms]
    for k, i, j in _ROTATIONS:
        name = f'sinh_sign_{SIDE_NAMES[k]}'
        measured = _safe_sign(cmath.sinh(complex(t.sides[k])))
        predicted = _safe_msgn(-1, -qv[i], -qv[j], -qw[k])
        cubed = _safe_sign(-(norms[i] ** 3) * norms[j] ** 3 * dual_norms[k] ** 3)
        if measured is None or predicted is None or cubed is None:
            report.record(name, 0.0, degenerate=True)
            continue
        report.record(name, 0.0 if measured == -predicted else 1.0)
        report.record(f'{name}_cubed', 0.0 if cubed == -predicted else 1.0)
    return report.merge(verify_sign_lemmas())


def _polar_sign(qv, qw, i: int, j: int) -> Optional[int]:
    product = qv[i] * qv[j] * qw[i] * qw[j]
    return None if product == 0 else (1 if product > 0 else -1)


def verify_dual_relations(t: ExtTriangle) -> LawReport:
    """
    Between t and its geometric dual: -cos A = cosh a' and
    -cos A' = cosh a sgn(|v2|^2 |v3|^2 |w2|^2 |w3|^2), cyclically; also the
    algebraic dual of the algebraic dual returns the vertices.
    """
    t.require_measured('The polar relations')
    report = LawReport(t.stratum)
    algebraic = tuple(p.algebraic_dual for p in t.duals)
    twice = dual_basis(*algebraic)
    scale = max(math.sqrt(v.euclidean_norm_squared()) for v in t.vertices)
    report.record('double_dual', max(
        float(np.linalg.norm(w.array - v.array)) for w, v in zip(twice, t.vertices)) / (1.0 + scale))
    if not t.has_dual or t.dual_angles is None:
        logger.debug('No dual triangle for stratum %s', t.stratum)
        report.values['dual'] = None
        return report
    qv, qw = t.norms_squared, t.dual_norms_squared
    for k, i, j in _ROTATIONS:
        report.record(f'polar_angle_{ANGLE_NAMES[k]}',
                      relative_residual(-cmath.cos(complex(t.angles[k])), cmath.cosh(complex(t.dual_sides[k]))))
        sign = _polar_sign(qv, qw, i, j)
        if sign is None:
            report.record(f'polar_side_{SIDE_NAMES[k]}', 0.0, degenerate=True)
            continue
        report.record(f'polar_side_{SIDE_NAMES[k]}',
                      relative_residual(-cmath.cos(complex(t.dual_angles[k])),
                                        sign * cmath.cosh(complex(t.sides[k]))))
    return report


def verify_all(t: ExtTriangle, model: Model = Model.HYPERBOLIC) -> LawReport:
    """
    Every law and sign check that applies to t, in one report. A degenerate
    triangle gets only the cross-multiplied cosine and sine laws whose sides
    and angles all exist; the flagged measurements and the skipped laws are
    listed under ``degenerate_measures`` and ``skipped``.
    """
    report = verify_cosine_laws(t, model)
    sine = verify_sine_law(t, model)
    report.merge(sine)
    report.values['skipped'] = report.values.get('skipped', []) + sine.values.get('skipped', [])
    report.values.update(stratum=t.stratum)
    if t.is_degenerate:
        report.values['degenerate_measures'] = list(t.degenerate)
        if not report.residuals:
            logger.warning('No law applies to the degenerate triangle %s', t.stratum)
        return report
    report.merge(verify_angle_signs(t))
    report.merge(verify_sign_identities(t))
    report.merge(verify_dual_relations(t))
    if model is Model.HYPERBOLIC and right_angle_index(t) is not None:
        report.merge(verify_right_triangle(t))
    return report


def triangle_from_gram(gram) -> ExtTriangle:
    """
    Rebuild a triangle from its Gram matrix c_ij = <v_i, v_j>.

    The symmetric eigendecomposition G = Q diag(l) Q^T with exactly one
    negative eigenvalue gives V = diag(sqrt|l|) Q^T, the negative eigenvalue
    placed on the time row, so that V^T S V = G.

    :raises DegenerateInputError: G is singular or not of signature (2, 1)
    """
    g = np.asarray(gram, dtype=float)
    if g.shape != (3, 3):
        raise DimensionMismatchError(f'Gram matrix of a triangle is 3x3, got {g.shape}')
    if not np.allclose(g, g.T, rtol=0.0, atol=1e-12 * max(1.0, float(np.max(np.abs(g))))):
        raise ValueError(f'Gram matrix is not symmetric: {g.tolist()}')
    eigenvalues, eigenvectors = scipy.linalg.eigh(g)
    size = max(1.0, float(np.max(np.abs(eigenvalues))))
    if np.any(np.abs(eigenvalues) <= 1e-12 * size):
        raise DegenerateInputError(f'Gram matrix is singular: eigenvalues {eigenvalues.tolist()}')
    negative = np.flatnonzero(eigenvalues < 0)
    if len(negative) != 1:
        raise DegenerateInputError(f'Gram matrix has signature ({3 - len(negative)}, {len(negative)}), '
                                   f'not (2, 1)')
    order = [int(negative[0])] + [k for k in range(3) if k != negative[0]]
    v = np.sqrt(np.abs(eigenvalues[order]))[:, None] * eigenvectors[:, order].T
    return measure_triangle(*(MinkowskiVector.from_array(v[:, i]) for i in range(3)))


def _compare_measurements(report: LawReport, prefix: str, t: ExtTriangle, vertices):
    distances, angles = _measure_sides_angles(vertices)
    for k in range(3):
        report.record(f'{prefix}_side_{SIDE_NAMES[k]}',
                      relative_residual(distances[k].cosh(), cmath.cosh(complex(t.sides[k]))))
        report.record(f'{prefix}_angle_{ANGLE_NAMES[k]}',
                      relative_residual(cmath.cos(complex(angles[k])), cmath.cos(complex(t.angles[k]))))


def verify_isometry_invariance(t: ExtTriangle, isometry: LorentzIsometry) -> LawReport:
    """Sides and angles of the image of t under an isometry of R^{2,1}."""
    report = LawReport(t.stratum)
    _compare_measurements(report, 'isometry', t, tuple(apply_isometry(isometry, v) for v in t.vertices))
    return report


def verify_embedding(t: ExtTriangle, rng: np.random.Generator, max_rapidity: float = 1.0) -> LawReport:
    """
    Embed t in R^{3,1}, move it by a random isometry there and compare the
    sides and angles measured in four dimensions with those of t.
    """
    report = LawReport(t.stratum)
    isometry = LorentzIsometry.random(rng, dimension=3, max_rapidity=max_rapidity)
    lifted = tuple(apply_isometry(isometry, v.embed(3)) for v in t.vertices)
    _compare_measurements(report, 'embedded', t, lifted)
    return report

# -*- coding: utf-8 -*-
"""
Polygons read as truncated triangles.

Each family places a triangle whose vertices are polygon corners or the
poles of polygon edges. Its measured sides and angles differ from the real
polygon parameters by fixed complex shifts (a + pi i / 2, -d i, ...). The
family's identities are then checked on the recovered parameters, so every
sample exercises the distance table, the angle convention and the laws at
once.
"""
import cmath
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from exthyp.constants.tolerances import SAMPLE_HIGH, SAMPLE_LOW
from exthyp.geometry.lorentz_core import apply_isometry
from exthyp.misc.util import relative_residual
from exthyp.trig.sampling import randomize, rejection_sample, well_conditioned
from exthyp.trig.trig_laws import model_sides, verify_cosine_laws, verify_sine_law
from exthyp.types.ext_triangle import ExtTriangle
from exthyp.types.lorentz_isometry import LorentzIsometry
from exthyp.types.minkowski_vector import MinkowskiVector
from exthyp.types.model import Model
from exthyp.types.reports import PolygonReport
from exthyp.utilities.log.decorators import log

logger = logging.getLogger(__name__)

V = MinkowskiVector.of
HALF_PI = math.pi / 2
PI_I = complex(0.0, math.pi)
HALF_PI_I = complex(0.0, HALF_PI)

Vertices = Tuple[MinkowskiVector, MinkowskiVector, MinkowskiVector]
Params = Dict[str, complex]


@dataclass(frozen=True)
class Shift:
    """
    measured = offset + scale * parameter with a real parameter.

    scale None leaves the parameter a free complex value; scale 0 pins the
    measured value to the offset.
    """
    name: str
    offset: complex = 0j
    scale: Optional[complex] = 1

    def extract(self, value: complex) -> Tuple[complex, float]:
        """The parameter and how far it is from the required form."""
        value = complex(value)
        if self.scale is None:
            return value, 0.0
        if self.scale == 0:
            return complex(self.offset), abs(value - self.offset)
        p = (value - self.offset) / self.scale
        return complex(p.real), abs(p.imag)

    def __str__(self):
        if self.scale is None:
            return self.name
        if self.scale == 0:
            return f'{self.offset}'
        return f'{self.offset} + {self.scale} {self.name}'


@dataclass(frozen=True)
class ShiftSignature:
    """Shifts of the sides (v1v2, v1v3, v2v3) and of the angles at v1, v2, v3."""
    sides: Tuple[Shift, Shift, Shift]
    angles: Tuple[Shift, Shift, Shift]


def _free_signature() -> ShiftSignature:
    return ShiftSignature(
        (Shift('d12', scale=None), Shift('d13', scale=None), Shift('d23', scale=None)),
        (Shift('angle1', scale=None), Shift('angle2', scale=None), Shift('angle3', scale=None)),
    )


class PolygonFamily(Enum):
    LAMBERT_QUAD_H = 'LambertQuadH'
    RIGHT_HEXAGON_H = 'RightHexagonH'
    OPPOSITE_RIGHT_QUAD_H = 'OppositeRightQuadH'
    LAMBERT_QUAD_DS = 'LambertQuadDS'
    RIGHT_PENTAGON_DS = 'RightPentagonDS'
    SELF_INTERSECTING_QUAD_H = 'SelfIntersectingQuadH'

    @classmethod
    def parse(cls, text: str) -> 'PolygonFamily':
        key = text.strip().lower().replace('-', '').replace('_', '')
        for family in cls:
            if key in (family.value.lower(), family.name.lower().replace('_', '')):
                return family
        raise ValueError(f'Unknown polygon family {text!r}; expected one of {[f.value for f in cls]}')

    @property
    def model(self) -> Model:
        return Model.SPHERICAL if self.value.endswith('DS') else Model.HYPERBOLIC

    @property
    def signature(self) -> ShiftSignature:
        return _FAMILIES[self].signature


@dataclass(frozen=True)
class PolygonSample:
    family: PolygonFamily
    triangle: ExtTriangle
    mirror: bool
    construction: Dict[str, float] = field(default_factory=dict)


@dataclass(frozen=True)
class _FamilyRules:
    signature: ShiftSignature
    build: Callable[[np.random.Generator], Optional[Tuple[Vertices, Dict[str, float]]]]
    identities: Callable[[Params], Dict[str, Tuple[complex, complex]]]
    inequalities: Callable[[Params], Dict[str, bool]]


def _uniform(rng: np.random.Generator, low: float = SAMPLE_LOW, high: float = SAMPLE_HIGH) -> float:
    return float(rng.uniform(low, high))


def _hyperbolic_over(a: float, t: float, sign: float = 1.0) -> MinkowskiVector:
    """Upper-sheet point at signed distance a from the line x_1 = 0, parameter t along it."""
    return V(math.cosh(a) * math.cosh(t), sign * math.sinh(a), math.cosh(a) * math.sinh(t))


# Two right angles in a row: v1 the pole of the base, v2 and v3 the top corners.

def _build_lambert_h(rng):
    a, b, d = _uniform(rng), _uniform(rng), _uniform(rng)
    t2 = float(rng.uniform(-1.0, 1.0))
    t3 = t2 + d * (1 if rng.random() < 0.5 else -1)
    vertices = (V(0.0, -1.0, 0.0), _hyperbolic_over(a, t2), _hyperbolic_over(b, t3))
    return vertices, {'a': a, 'b': b, 'd': d}


def _lambert_h_identities(p: Params):
    a, b, c, d, A, B = (p[k] for k in 'abcdAB')
    ch, sh, cos, sin = cmath.cosh, cmath.sinh, cmath.cos, cmath.sin
    return {
        'cosh_d': (ch(d), (sh(a) * sh(b) + ch(c)) / (ch(a) * ch(b))),
        'cos_A': (cos(A), (ch(c) * sh(b) - sh(a)) / (sh(c) * ch(b))),
        'sinh_a': (sh(a), (cos(B) * ch(d) + cos(A)) / (sin(B) * sh(d))),
        'cosh_c': (ch(c), (cos(A) * cos(B) + ch(d)) / (sin(A) * sin(B))),
        'sine_ab': (ch(a) / sin(A), ch(b) / sin(B)),
        'sine_bd': (ch(b) / sin(B), sh(c) / sh(d)),
    }


# All right angles: the vertices are the poles of alternate hexagon sides.

def _build_right_hexagon_h(rng):
    b, c, angle = _uniform(rng), _uniform(rng), _uniform(rng)
    cosh_a = math.sinh(b) * math.sinh(c) * math.cosh(angle) - math.cosh(b) * math.cosh(c)
    if cosh_a <= math.cosh(SAMPLE_LOW):
        return None
    vertices = (V(0.0, -1.0, 0.0), V(math.sinh(c), math.cosh(c), 0.0),
                V(math.sinh(b) * math.cosh(angle), math.cosh(b), math.sinh(b) * math.sinh(angle)))
    return vertices, {'a': math.acosh(cosh_a), 'b': b, 'c': c, 'A': angle}


def _right_hexagon_h_identities(p: Params):
    a, b, c, A, B, C = (p[k] for k in 'abcABC')
    ch, sh = cmath.cosh, cmath.sinh
    return {
        'cosh_C': (ch(C), (ch(a) * ch(b) + ch(c)) / (sh(a) * sh(b))),
        'cosh_c': (ch(c), (ch(A) * ch(B) + ch(C)) / (sh(A) * sh(B))),
        'sine_ab': (sh(a) / sh(A), sh(b) / sh(B)),
        'sine_bc': (sh(b) / sh(B), sh(c) / sh(C)),
    }


# Right angles at two opposite corners: v1, v3 poles of two sides, v2 a corner.

def _build_opposite_right_h(rng):
    a, d = _uniform(rng), _uniform(rng)
    angle_b = _uniform(rng, SAMPLE_LOW, math.pi - SAMPLE_LOW)
    sinh_b = math.sinh(d) * math.cosh(a) * math.sin(angle_b) - math.sinh(a) * math.cos(angle_b)
    b = math.asinh(sinh_b)
    c = math.asinh((math.sinh(d) * math.cosh(a) * math.cos(angle_b) + math.sinh(a) * math.sin(angle_b))
                   / math.cosh(b))
    if b <= SAMPLE_LOW or c <= SAMPLE_LOW:
        return None
    vertices = (V(0.0, 0.0, -1.0),
                V(math.cosh(d) * math.cosh(a), math.sinh(d) * math.cosh(a), math.sinh(a)),
                V(0.0, -math.sin(angle_b), math.cos(angle_b)))
    return vertices, {'a': a, 'b': b, 'c': c, 'd': d, 'B': angle_b}


def _opposite_right_h_identities(p: Params):
    a, b, c, d, A, B = (p[k] for k in 'abcdAB')
    ch, sh, cos, sin = cmath.cosh, cmath.sinh, cmath.cos, cmath.sin
    return {
        'cos_A': (cos(A), (sh(a) * sh(b) - cos(B)) / (ch(a) * ch(b))),
        'sinh_a': (sh(a), (cos(A) * sh(d) + sh(c)) / (sin(A) * ch(d))),
        'sine_ac': (sin(B) / sin(A), ch(a) / ch(c)),
        'sine_bd': (sin(B) / sin(A), ch(b) / ch(d)),
    }


# de Sitter Lambert quadrilateral: a timelike corner and two spacelike ones.

def _build_lambert_ds(rng):
    a = _uniform(rng)
    d = _uniform(rng, SAMPLE_LOW, HALF_PI - SAMPLE_LOW)
    c = math.asinh(math.sinh(a) * math.cos(d))
    b = math.acos(min(1.0, math.cos(d) * math.cosh(a) / math.cosh(c)))
    if b <= SAMPLE_LOW:
        return None
    alpha = float(rng.uniform(0, 2 * math.pi))
    beta = alpha + b
    vertices = (V(1.0, 0.0, 0.0),
                V(-math.sinh(a), math.cosh(a) * math.cos(alpha), math.cosh(a) * math.sin(alpha)),
                V(-math.sinh(c), math.cosh(c) * math.cos(beta), math.cosh(c) * math.sin(beta)))
    return vertices, {'a': a, 'b': b, 'c': c, 'd': d}


def _lambert_ds_identities(p: Params):
    a, b, c, d, phi = (p[k] for k in ('a', 'b', 'c', 'd', 'phi'))
    ch, sh, cos, sin = cmath.cosh, cmath.sinh, cmath.cos, cmath.sin
    return {
        'sinh_c': (sh(c), cos(d) * sh(a)),
        'cos_b': (cos(b), (sh(a) * sh(c) + cos(d)) / (ch(a) * ch(c))),
        'cos_phi': (cos(phi), -1j * (sh(a) - sh(c) * cos(d)) / (ch(c) * sin(d))),
        'dual_cos_b': (cos(b), cos(d) * sin(phi)),
        'dual_cos_phi': (cos(phi), -1j * sh(a) * sin(b)),
        # the printed form has sinh a on the left; the dual law at the right angle gives sinh c
        'cot_product': (sh(c), 1j * cos(b) * cos(phi) / (sin(b) * sin(phi))),
        'sine_db': (sin(d) / sin(b), ch(c)),
        'sine_phi': (ch(c), ch(a) / sin(phi)),
    }


def _lambert_ds_inequalities(p: Params):
    a, c, d = (p[k].real for k in 'acd')
    return {'sinh_a_above_sinh_c_cos_d': math.sinh(a) > math.sinh(c) * math.cos(d)}


# de Sitter pentagon with four right angles.

def _build_right_pentagon_ds(rng):
    a, e, r = _uniform(rng), _uniform(rng), _uniform(rng)
    t1 = float(rng.uniform(-1.0, 1.0))
    t2 = t1 + r * (1 if rng.random() < 0.5 else -1)
    vertices = (V(0.0, 1.0, 0.0), _hyperbolic_over(a, t1), -_hyperbolic_over(e, t2, sign=-1.0))
    return vertices, {'a': a, 'e': e, 'r': r}


def _right_pentagon_ds_identities(p: Params):
    a, b, c, d, e, phi = (p[k] for k in ('a', 'b', 'c', 'd', 'e', 'phi'))
    ch, sh, cos, sin = cmath.cosh, cmath.sinh, cmath.cos, cmath.sin
    return {
        'cos_b': (cos(b), (sh(a) * ch(c) + sh(e)) / (ch(a) * sh(c))),
        'cos_d': (cos(d), (sh(e) * ch(c) + sh(a)) / (ch(e) * sh(c))),
        'cos_phi': (cos(phi), (sh(a) * sh(e) - ch(c)) / (ch(a) * ch(e))),
        'dual_cosh_c': (-ch(c), (cos(b) * cos(d) + cos(phi)) / (sin(b) * sin(d))),
        'dual_sinh_a': (-1j * sh(a), (cos(b) * cos(phi) + cos(d)) / (sin(b) * sin(phi))),
        'dual_sinh_e': (-1j * sh(e), (cos(d) * cos(phi) + cos(b)) / (sin(d) * sin(phi))),
        'sine_phi_b': (-1j * sh(c) / sin(phi), ch(e) / sin(b)),
        'sine_b_d': (ch(e) / sin(b), ch(a) / sin(d)),
    }


def _right_pentagon_ds_inequalities(p: Params):
    a, b, c, d, e = (p[k].real for k in 'abcde')
    return {
        'sinh_a_sinh_e_below_cosh_c': math.sinh(a) * math.sinh(e) < math.cosh(c),
        'b_acute': math.cos(b) > 0,
        'd_acute': math.cos(d) > 0,
    }


# Self-intersecting quadrilateral: v2 and v3 on opposite sides of the line dual to v1.

def _build_self_intersecting_h(rng):
    a, b = _uniform(rng), _uniform(rng)
    t2, t3 = float(rng.uniform(-1.0, 1.0)), float(rng.uniform(-1.0, 1.0))
    vertices = (V(0.0, -1.0, 0.0), _hyperbolic_over(a, t2), _hyperbolic_over(b, t3, sign=-1.0))
    return vertices, {'a': a, 'b': b}


def _none(p: Params):
    return {}


_FAMILIES = {
    PolygonFamily.LAMBERT_QUAD_H: _FamilyRules(
        ShiftSignature((Shift('a', HALF_PI_I), Shift('b', HALF_PI_I), Shift('c')),
                       (Shift('d', 0j, -1j), Shift('B'), Shift('A'))),
        _build_lambert_h, _lambert_h_identities, _none),
    PolygonFamily.RIGHT_HEXAGON_H: _FamilyRules(
        ShiftSignature((Shift('c', PI_I), Shift('b', PI_I), Shift('a', PI_I)),
                       (Shift('A', 0j, -1j), Shift('B', 0j, -1j), Shift('C', 0j, -1j))),
        _build_right_hexagon_h, _right_hexagon_h_identities, _none),
    PolygonFamily.OPPOSITE_RIGHT_QUAD_H: _FamilyRules(
        ShiftSignature((Shift('a', HALF_PI_I), Shift('B', PI_I, -1j), Shift('b', HALF_PI_I)),
                       (Shift('d', HALF_PI, -1j), Shift('A'), Shift('c', HALF_PI, -1j))),
        _build_opposite_right_h, _opposite_right_h_identities, _none),
    PolygonFamily.LAMBERT_QUAD_DS: _FamilyRules(
        ShiftSignature((Shift('a', HALF_PI, 1j), Shift('c', HALF_PI, 1j), Shift('d')),
                       (Shift('b'), Shift('right', HALF_PI, 0), Shift('phi', scale=None))),
        _build_lambert_ds, _lambert_ds_identities, _lambert_ds_inequalities),
    PolygonFamily.RIGHT_PENTAGON_DS: _FamilyRules(
        ShiftSignature((Shift('a', HALF_PI, 1j), Shift('e', HALF_PI, 1j), Shift('c', math.pi, 1j)),
                       (Shift('phi', scale=None), Shift('b'), Shift('d'))),
        _build_right_pentagon_ds, _right_pentagon_ds_identities, _right_pentagon_ds_inequalities),
    PolygonFamily.SELF_INTERSECTING_QUAD_H: _FamilyRules(
        _free_signature(), _build_self_intersecting_h, _none, _none),
}


def sample_configuration(family: PolygonFamily, rng: np.random.Generator,
                         max_rapidity: float = 1.0) -> PolygonSample:
    """
    A random triangle realizing ``family``, moved by a random orthochronous
    isometry. Half of the samples also pass through the reflection
    x_2 -> -x_2 and are tagged as mirror samples.

    :raises SamplingError: no well-conditioned configuration within the retry budget
    """
    rules = _FAMILIES[family]
    state = {}

    def draw():
        built = rules.build(rng)
        if built is None:
            return None
        vertices, construction = built
        moved = randomize(vertices, rng, max_rapidity)
        mirror = bool(rng.random() < 0.5)
        if mirror:
            reflection = LorentzIsometry.reflection(2)
            moved = tuple(apply_isometry(reflection, v) for v in moved)
        state.update(mirror=mirror, construction=construction)
        return moved

    t = rejection_sample(draw, well_conditioned, family.value)
    return PolygonSample(family, t, state['mirror'], state['construction'])


def extract_parameters(family: PolygonFamily, t: ExtTriangle) -> Tuple[Params, float]:
    """
    Polygon parameters read off the measured triangle through the family's
    shift signature, with the largest deviation from the required form.
    """
    signature = family.signature
    d23, d13, d12 = model_sides(t, family.model)
    params, deviation = {}, 0.0
    for shift, value in zip(signature.sides + signature.angles, (d12, d13, d23) + tuple(t.angles)):
        p, off = shift.extract(value)
        deviation = max(deviation, off)
        if shift.scale != 0:
            params[shift.name] = p
    return params, deviation


def evaluate_identities(family: PolygonFamily, params: Params) -> Dict[str, float]:
    rules = _FAMILIES[family]
    return {name: relative_residual(lhs, rhs) for name, (lhs, rhs) in rules.identities(params).items()}


def check_inequalities(family: PolygonFamily, params: Params) -> Dict[str, bool]:
    return _FAMILIES[family].inequalities(params)


def check_sample(sample: PolygonSample, report: PolygonReport):
    """Fold one sample's shift deviation, identities, laws and inequalities into report."""
    family, t = sample.family, sample.triangle
    params, deviation = extract_parameters(family, t)
    residuals = {'shift': deviation}
    residuals.update(evaluate_identities(family, params))
    laws = verify_cosine_laws(t).merge(verify_sine_law(t))
    residuals.update({f'law_{name}': r for name, r in laws.residuals.items()})
    for name, r in residuals.items():
        report.record(name, r)
    for name, holds in check_inequalities(family, params).items():
        if not holds:
            logger.warning('%s: inequality %s fails at %s', family.value, name, params)
        report.record_inequality(name, holds)
    report.samples += 1
    report.mirrored += int(sample.mirror)
    worst = max(residuals.values())
    if worst >= report.worst:
        report.worst = worst
        report.parameters = dict(params, mirror=sample.mirror)


@log(logger)
def verify_family(family: PolygonFamily, samples: int, rng: Optional[np.random.Generator] = None,
                  seed: Optional[int] = None) -> PolygonReport:
    """
    Sample ``samples`` configurations of ``family`` and record the worst
    residual of each identity, the general laws and the shift recovery.
    """
    if samples < 1:
        raise ValueError(f'verify_family needs samples >= 1, got {samples}')
    if rng is None:
        rng = np.random.default_rng(seed)
    report = PolygonReport(family.value)
    for _ in range(samples):
        check_sample(sample_configuration(family, rng), report)
    logger.info('%s: %d samples (%d mirrored), max residual %g',
                family.value, report.samples, report.mirrored, report.max_residual)
    return report


def substitution_residuals(x: complex) -> Dict[str, float]:
    """The shift rules behind the polygon readings, evaluated at x."""
    x = complex(x)
    ch, sh, cos, sin = cmath.cosh, cmath.sinh, cmath.cos, cmath.sin
    pairs = {
        'sin_ix': (sin(1j * x), 1j * sh(x)),
        'sinh_ix': (sh(1j * x), 1j * sin(x)),
        'sinh_plus_pi_i': (sh(x + PI_I), -sh(x)),
        'sinh_plus_half_pi_i': (sh(x + HALF_PI_I), 1j * ch(x)),
        'cos_ix': (cos(1j * x), ch(x)),
        'cosh_ix': (ch(1j * x), cos(x)),
        'cosh_plus_pi_i': (ch(x + PI_I), -ch(x)),
        'cosh_plus_half_pi_i': (ch(x + HALF_PI_I), 1j * sh(x)),
    }
    return {name: relative_residual(lhs, rhs) for name, (lhs, rhs) in pairs.items()}

# -*- coding: utf-8 -*-
"""
Seeded rejection samplers for triangles in the five causal strata and for
vector pairs in each row of the distance table.
"""
import cmath
import logging
import math
from enum import Enum
from typing import Callable, Optional, Tuple

import numpy as np

from exthyp.constants.tolerances import SAMPLE_HIGH, SAMPLE_LOW, SAMPLE_MARGIN, SAMPLE_RETRIES
from exthyp.errors import ConventionViolationError, DegenerateInputError, SamplingError
from exthyp.geometry.lorentz_core import apply_isometry, causal_class, inner_product
from exthyp.geometry.metric_geometry import extended_distance
from exthyp.trig.trig_laws import measure_triangle
from exthyp.types.ext_distance import DistanceCase
from exthyp.types.ext_triangle import ExtTriangle
from exthyp.types.lorentz_isometry import LorentzIsometry
from exthyp.types.minkowski_vector import MinkowskiVector

logger = logging.getLogger(__name__)


class Stratum(Enum):
    """
    Causal pattern of the vertices. The two all-spacelike strata differ in
    their sides: secant sides lie on lines crossing the hyperbolic disc
    (D > 0), equator-type sides on lines missing it (D < 0).
    """
    THREE_TIMELIKE = '3T'
    TWO_TIMELIKE = '2T1S'
    ONE_TIMELIKE = '1T2S'
    SECANT = '3S-secant'
    EQUATOR = '3S-equator'

    @classmethod
    def parse(cls, text: str) -> 'Stratum':
        for stratum in cls:
            if stratum.value.lower() == text.strip().lower() or stratum.name.lower() == text.strip().lower():
                return stratum
        raise ValueError(f'Unknown stratum {text!r}; expected one of {[s.value for s in cls]}')

    @property
    def timelike_count(self) -> int:
        return int(self.value[0]) if self.value[1] == 'T' else 0


def hyperbolic_point(rng: np.random.Generator, low: float = SAMPLE_LOW, high: float = SAMPLE_HIGH) -> MinkowskiVector:
    """Upper-sheet unit timelike vector at distance in (low, high) from (1, 0, 0)."""
    r, theta = rng.uniform(low, high), rng.uniform(0, 2 * math.pi)
    return MinkowskiVector.of(math.cosh(r), math.sinh(r) * math.cos(theta), math.sinh(r) * math.sin(theta))


def de_sitter_point(rng: np.random.Generator, low: float, high: float) -> MinkowskiVector:
    """Unit spacelike vector (sinh t, cosh t cos theta, cosh t sin theta), t in (low, high)."""
    t, theta = rng.uniform(low, high), rng.uniform(0, 2 * math.pi)
    return MinkowskiVector.of(math.sinh(t), math.cosh(t) * math.cos(theta), math.cosh(t) * math.sin(theta))


def _spacelike_range(stratum: Stratum) -> Tuple[float, float]:
    if stratum is Stratum.SECANT:
        return 1.0, SAMPLE_HIGH
    if stratum is Stratum.EQUATOR:
        return -0.3, 0.3
    return -1.0, 1.0


def _relative_discriminant(x: MinkowskiVector, y: MinkowskiVector) -> float:
    q, nx, ny = inner_product(x, y), inner_product(x, x), inner_product(y, y)
    return (q * q - nx * ny) / abs(nx * ny)


def _discriminants_fit(stratum: Stratum, vertices) -> bool:
    spacelike = [v for v in vertices if causal_class(v).spacelike]
    for m in range(len(spacelike)):
        for n in range(m + 1, len(spacelike)):
            d = _relative_discriminant(spacelike[m], spacelike[n])
            if abs(d) <= SAMPLE_MARGIN:
                return False
            if stratum is Stratum.SECANT and d < 0 or stratum is Stratum.EQUATOR and d > 0:
                return False
    return True


def well_conditioned(t: ExtTriangle, margin: float = SAMPLE_MARGIN) -> bool:
    """
    Every side sinh, angle sine and dual norm stays clear of zero, and the
    dual triangle exists.
    """
    if t.is_degenerate:
        return False
    if not t.has_dual or t.dual_angles is None:
        return False
    if any(abs(cmath.sinh(complex(s))) <= margin for s in t.sides):
        return False
    if any(abs(cmath.sin(complex(x))) <= margin for x in t.angles):
        return False
    for pair in t.duals:
        w = pair.algebraic_dual
        if abs(inner_product(w, w)) <= margin * w.euclidean_norm_squared():
            return False
    return True


def randomize(vertices, rng: np.random.Generator, max_rapidity: float = 1.0, flip: bool = False):
    """Move vertices by a random orthochronous isometry, optionally negating some of them."""
    isometry = LorentzIsometry.random(rng, max_rapidity=max_rapidity)
    moved = [apply_isometry(isometry, v) for v in vertices]
    if flip:
        moved = [-v if rng.random() < 0.5 else v for v in moved]
    return tuple(moved)


def rejection_sample(draw: Callable[[], Optional[Tuple[MinkowskiVector, ...]]], accept: Callable[[ExtTriangle], bool],
                     what: str, retries: int = SAMPLE_RETRIES) -> ExtTriangle:
    """
    Draw vertex triples until one measures into an accepted triangle. A draw
    returning None is a rejected construction.

    :raises SamplingError: no accepted triangle after ``retries`` draws
    """
    for attempt in range(retries):
        vertices = draw()
        if vertices is None:
            continue
        try:
            t = measure_triangle(*vertices)
        except (DegenerateInputError, ConventionViolationError) as e:
            logger.debug('%s draw %d rejected: %s', what, attempt, e)
            continue
        if accept(t):
            return t
        logger.debug('%s draw %d rejected as ill-conditioned', what, attempt)
    raise SamplingError(f'No acceptable {what} triangle after {retries} draws')


def sample_stratum(stratum: Stratum, rng: np.random.Generator, max_rapidity: float = 1.0) -> ExtTriangle:
    """
    A random well-conditioned triangle whose vertices fall in ``stratum``.

    All-timelike triangles stay on the upper sheet so they are classical
    hyperbolic triangles; the other strata also negate random vertices.
    """
    low, high = _spacelike_range(stratum)
    timelike = stratum.timelike_count

    def draw():
        points = [hyperbolic_point(rng) for _ in range(timelike)]
        points += [de_sitter_point(rng, low, high) for _ in range(3 - timelike)]
        order = rng.permutation(3)
        return randomize([points[k] for k in order], rng, max_rapidity, flip=stratum is not Stratum.THREE_TIMELIKE)

    def accept(t: ExtTriangle) -> bool:
        return (t.timelike_count == timelike and _discriminants_fit(stratum, t.vertices)
                and well_conditioned(t))

    return rejection_sample(draw, accept, stratum.value)


def _ideal_point(rng: np.random.Generator) -> Tuple[MinkowskiVector, MinkowskiVector]:
    """A lightlike vector on the upper cone and a unit spacelike vector orthogonal to it."""
    theta = rng.uniform(0, 2 * math.pi)
    scale = rng.uniform(0.5, 2.0)
    x = MinkowskiVector.of(scale, scale * math.cos(theta), scale * math.sin(theta))
    return x, MinkowskiVector.of(0.0, -math.sin(theta), math.cos(theta))


def _signed(rng: np.random.Generator, v: MinkowskiVector) -> MinkowskiVector:
    return -v if rng.random() < 0.5 else v


def _draw_pair(case: DistanceCase, rng: np.random.Generator):
    if case is DistanceCase.TIMELIKE_PAIR:
        return hyperbolic_point(rng), hyperbolic_point(rng)
    if case is DistanceCase.TIMELIKE_SPACELIKE:
        return hyperbolic_point(rng), de_sitter_point(rng, -1.0, 1.0)
    if case is DistanceCase.SPACELIKE_SECANT:
        return de_sitter_point(rng, -0.3, 0.3), de_sitter_point(rng, -0.3, 0.3)
    if case is DistanceCase.SPACELIKE_DISJOINT:
        return de_sitter_point(rng, 1.0, SAMPLE_HIGH), de_sitter_point(rng, -SAMPLE_HIGH, -1.0)
    x, e = _ideal_point(rng)
    if case is DistanceCase.SPACELIKE_TANGENT:
        return e + x * rng.uniform(-2, 2), (e + x * rng.uniform(-2, 2)) * rng.uniform(0.5, 2.0)
    if case is DistanceCase.ONE_LIGHTLIKE:
        if rng.random() < 0.5:
            return x, de_sitter_point(rng, -1.0, 1.0)
        return x, e + x * rng.uniform(-2, 2)
    if rng.random() < 0.5:
        return x, _ideal_point(rng)[0]
    return x, x * rng.uniform(0.5, 2.0)


def sample_pair(case: DistanceCase, rng: np.random.Generator,
                max_rapidity: float = 1.0) -> Tuple[MinkowskiVector, MinkowskiVector]:
    """
    Two vectors whose extended distance falls in ``case``, each negated at
    random and moved by a random isometry. The lightlike cases mix finite
    and infinite configurations.

    :raises SamplingError: no pair landed in ``case`` within the retry budget
    """
    for attempt in range(SAMPLE_RETRIES):
        x, y = (_signed(rng, v) for v in _draw_pair(case, rng))
        x, y = randomize((x, y), rng, max_rapidity)
        if extended_distance(x, y).case is case:
            if case not in (DistanceCase.SPACELIKE_SECANT, DistanceCase.SPACELIKE_DISJOINT):
                return x, y
            if abs(_relative_discriminant(x, y)) > SAMPLE_MARGIN:
                return x, y
        logger.debug('%s pair draw %d rejected', case.value, attempt)
    raise SamplingError(f'No {case.value} pair after {SAMPLE_RETRIES} draws')

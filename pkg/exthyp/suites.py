# -*- coding: utf-8 -*-
"""
Batch verification suites.

Each suite draws its own generator from the run seed and the suite's
position in ``SUITES``, so a suite gives the same rows whether it runs alone
or under ``suite all``.
"""
import cmath
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List

import numpy as np

from exthyp.constants.tolerances import (
    AREA_LIMIT_TOLERANCE, BRANCH_TOLERANCE, CANONICAL_TOLERANCE, CONTOUR_LIMIT_TOLERANCE, CORRESPONDENCE_TOLERANCE,
    DISTANCE_IDENTITY_TOLERANCE, FORM_TOLERANCE, INVARIANCE_TOLERANCE, MAX_RAPIDITY, QUADRATURE_TOLERANCE,
    RIGHT_TRIANGLE_TOLERANCE, SAMPLE_MARGIN, TANGENT_TOLERANCE, VOLUME_TOLERANCE,
)
from exthyp.contour.contour_oracle import (
    delta_spread, expected_total_volume, integrate_contour, length_1d, length_integrand, radial_path, total_volume,
)
from exthyp.errors import ExtHypError
from exthyp.geometry.branch_algebra import arccosh_strip, sqrt_conv
from exthyp.geometry.lorentz_core import (
    apply_isometry, causal_class, gram_matrix, inner_product, lorentz_cross, lorentz_norm, model_norm, tangent_toward,
)
from exthyp.geometry.metric_geometry import HALF_PI_I, corollary_residuals, extended_distance
from exthyp.misc.util import relative_residual
from exthyp.trig.area_formulas import (
    CorrespondenceLaw, area_cosine, area_defect, area_result, area_sides, correspondence_check,
)
from exthyp.trig.polygon_identities import PolygonFamily, substitution_residuals, verify_family
from exthyp.trig.sampling import Stratum, sample_pair, sample_stratum
from exthyp.trig.sign_identities import verify_sign_lemmas
from exthyp.trig.trig_laws import (
    ANGLE_NAMES, SIDE_NAMES, measure_triangle, triangle_from_gram, verify_angle_signs, verify_cosine_laws,
    verify_dual_relations, verify_embedding, verify_isometry_invariance, verify_right_triangle,
    verify_sign_identities, verify_sine_law,
)
from exthyp.types.ext_distance import DistanceCase
from exthyp.types.lorentz_isometry import LorentzIsometry
from exthyp.types.minkowski_vector import MinkowskiVector
from exthyp.types.model import Model
from exthyp.types.reports import CheckRow, LawReport
from exthyp.types.run_config import RunConfig
from exthyp.utilities.log.decorators import log

logger = logging.getLogger(__name__)

V = MinkowskiVector.of
EXACT = 0.0
QUARTER_CIRCLE_END = 1e6

# (x, y, expected d_H or None for Infinite, case)
CANONICAL_PAIRS = (
    (V(1, 0), V(math.cosh(1), math.sinh(1)), 1.0, DistanceCase.TIMELIKE_PAIR),
    (V(1, 0), V(-math.cosh(1), math.sinh(1)), complex(-1.0, math.pi), DistanceCase.TIMELIKE_PAIR),
    (V(1, 0, 0), V(0, 1, 0), complex(0.0, math.pi / 2), DistanceCase.TIMELIKE_SPACELIKE),
    (V(1, 0), V(math.sinh(0.8), math.cosh(0.8)), complex(0.8, math.pi / 2), DistanceCase.TIMELIKE_SPACELIKE),
    (V(0, 1), V(math.sinh(1), math.cosh(1)), -1.0, DistanceCase.SPACELIKE_DISJOINT),
    (V(0, 1), V(math.sinh(1), -math.cosh(1)), complex(1.0, math.pi), DistanceCase.SPACELIKE_DISJOINT),
    (V(0, 1, 0), V(0, math.cos(1.3), math.sin(1.3)), 1.3j, DistanceCase.SPACELIKE_SECANT),
    (V(0.7, 0.7, 1), V(2, 2, 1), 0.0, DistanceCase.SPACELIKE_TANGENT),
    (V(0.7, 0.7, 1), V(2, 2, -1), complex(0.0, math.pi), DistanceCase.SPACELIKE_TANGENT),
    (V(1, 1, 0), V(0.7, 0.7, 1), complex(0.0, math.pi / 2), DistanceCase.ONE_LIGHTLIKE),
    (V(1, 1, 0), V(0, 1, 0), None, DistanceCase.ONE_LIGHTLIKE),
    (V(1, 1, 0), V(3, 3, 0), 0.0, DistanceCase.LIGHTLIKE_PAIR),
    (V(1, 1, 0), V(-1, -1, 0), complex(0.0, math.pi), DistanceCase.LIGHTLIKE_PAIR),
    (V(1, 1, 0), V(1, -1, 0), None, DistanceCase.LIGHTLIKE_PAIR),
)


@dataclass
class SuiteResult:
    suite: str
    rows: List[CheckRow] = field(default_factory=list)
    details: Dict[str, object] = field(default_factory=dict)

    def add(self, case: str, residual: float, tolerance: float):
        residual = float(residual)
        self.rows.append(CheckRow(self.suite, case, residual if math.isfinite(residual) else math.inf, tolerance))

    def extend(self, report: LawReport, tolerance: float, prefix: str = ''):
        self.rows.extend(report.check_rows(self.suite, tolerance, prefix))

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def to_json(self) -> Dict[str, object]:
        return {
            'suite': self.suite,
            'passed': self.passed,
            'checks': [dict(row._asdict(), passed=row.passed) for row in self.rows],
            'details': self.details,
        }


def _random_vector(rng: np.random.Generator, dimension: int) -> MinkowskiVector:
    return MinkowskiVector.from_array(rng.uniform(-3.0, 3.0, size=dimension + 1))


def lorentz_suite(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    """
    Bilinearity and symmetry of the form, |x|^2 = <x,x>, i |x_p|_S = |x_p|_H
    and orthogonality of tangent directions, in R^{2,1} and R^{3,1}.
    """
    result = SuiteResult('lorentz')
    worst = dict.fromkeys(('bilinear', 'symmetric', 'norm_squared', 'model_norm_i', 'tangent_orthogonal'), 0.0)
    skipped = 0
    for k in range(config.sample_count(1000)):
        dimension = 2 + k % 2
        x, y, z = (_random_vector(rng, dimension) for _ in range(3))
        alpha, beta = rng.uniform(-2.0, 2.0, size=2)
        combined = inner_product(float(alpha) * x + float(beta) * y, z)
        split = alpha * inner_product(x, z) + beta * inner_product(y, z)
        scale = (abs(alpha) * _euclidean(x) + abs(beta) * _euclidean(y)) * _euclidean(z)
        worst['bilinear'] = max(worst['bilinear'], abs(combined - split) / (1.0 + scale))
        worst['symmetric'] = max(worst['symmetric'], abs(inner_product(x, y) - inner_product(y, x)))
        if not causal_class(x).lightlike:
            norm = complex(lorentz_norm(x))
            worst['norm_squared'] = max(worst['norm_squared'], relative_residual(norm * norm, inner_product(x, x)))
        try:
            u = tangent_toward(x, y)
            hyperbolic = complex(model_norm(u, x, Model.HYPERBOLIC))
            spherical = complex(model_norm(u, x, Model.SPHERICAL))
        except ExtHypError as e:
            logger.debug('Tangent at %s skipped: %s', x, e)
            skipped += 1
            continue
        worst['model_norm_i'] = max(worst['model_norm_i'], relative_residual(1j * spherical, hyperbolic))
        worst['tangent_orthogonal'] = max(worst['tangent_orthogonal'],
                                          abs(inner_product(u, x)) / (_euclidean(u) * _euclidean(x)))
    for name in ('bilinear', 'symmetric', 'norm_squared', 'model_norm_i'):
        result.add(name, worst[name], FORM_TOLERANCE)
    result.add('tangent_orthogonal', worst['tangent_orthogonal'], TANGENT_TOLERANCE)
    result.details['skipped'] = skipped
    return result


def _euclidean(x: MinkowskiVector) -> float:
    return math.sqrt(x.euclidean_norm_squared())


def branch_suite(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    """
    sqrt_conv(a)^2 = a with the root in the closed first quadrant, and
    cosh(arccosh_strip(q)) = q with the preimage in the strip
    Re z >= 0, 0 <= Im z <= pi for Im q >= 0.
    """
    result = SuiteResult('branch')
    count = config.sample_count(1000)
    square, quadrant = 0.0, 0
    for _ in range(count):
        a = float(rng.choice((-1.0, 1.0)) * 10.0 ** rng.uniform(-6.0, 6.0))
        root = complex(sqrt_conv(a))
        square = max(square, abs(root * root - a) / abs(a))
        quadrant += root.real < 0 or root.imag < 0
    result.add('sqrt_conv/square', square, FORM_TOLERANCE)
    result.add('sqrt_conv/quadrant', quadrant, EXACT)

    round_trip, outside = 0.0, 0
    for k in range(count):
        q = complex(rng.uniform(-50.0, 50.0), 0.0 if k % 2 else rng.uniform(0.0, 50.0))
        z = complex(arccosh_strip(q))
        round_trip = max(round_trip, abs(cmath.cosh(z) - q) / (1.0 + abs(q)))
        outside += z.real < -1e-12 or not -1e-12 <= z.imag <= math.pi + 1e-12
    result.add('arccosh_strip/round_trip', round_trip, BRANCH_TOLERANCE)
    result.add('arccosh_strip/strip', outside, EXACT)
    return result


def geometry_suite(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    """
    Scale and antipodal invariance of the distance over every case, and the
    plain, tangent, lens and spherical readings of <x,y> at the meeting
    point of x^perp and y^perp.
    """
    result = SuiteResult('geometry')
    per_case = max(1, config.sample_count(1000) // len(DistanceCase))
    for case in DistanceCase:
        scale, antipodal = 0.0, 0.0
        for _ in range(per_case):
            x, y = sample_pair(case, rng)
            lam, mu = rng.uniform(0.1, 10.0, size=2)
            d = extended_distance(x, y)
            scaled = extended_distance(float(lam) * x, float(mu) * y)
            flipped = extended_distance(-x, y)
            if scaled.case is not d.case or scaled.is_infinite != d.is_infinite:
                scale = math.inf
            elif not d.is_infinite:
                scale = max(scale, abs(scaled.value - d.value) / (1.0 + abs(d.value)))
            if flipped.is_infinite != d.is_infinite:
                antipodal = math.inf
            elif not d.is_infinite:
                c = d.cosh()
                antipodal = max(antipodal, abs(flipped.cosh() + c) / (1.0 + abs(c)))
        result.add(f'scale/{case.value}', scale, INVARIANCE_TOLERANCE)
        result.add(f'antipodal/{case.value}', antipodal, DISTANCE_IDENTITY_TOLERANCE)

    worst, checked, attempts = {}, 0, 0
    wanted = max(1, config.sample_count(1000) // 10)
    while checked < wanted and attempts < 50 * wanted:
        attempts += 1
        x, y = (MinkowskiVector.from_array(rng.normal(size=3)) for _ in range(2))
        p = lorentz_cross(x, y)
        if not all(abs(inner_product(v, v)) > SAMPLE_MARGIN * max(1.0, v.euclidean_norm_squared())
                   for v in (x, y, p)):
            continue
        try:
            residuals = corollary_residuals(x, y, p)
        except ExtHypError as e:
            logger.debug('Inner product readings skipped: %s', e)
            continue
        for name, value in residuals.items():
            worst[name] = max(worst.get(name, 0.0), value)
        checked += 1
    for name, value in sorted(worst.items()):
        result.add(f'reading/{name}', value, config.tolerance)
    result.details['readings'] = checked
    if checked < wanted:
        result.add('reading/missing', wanted - checked, EXACT)
    return result


def contour_suite(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    """
    Contour quadrature of dr / (1 - r^2) against artanh and arcoth + pi i / 2,
    unchanged when the detour radius is halved, and the quarter circle
    pi i / 2 approached at b = 1e6.
    """
    result = SuiteResult('contour')
    ends = list(np.linspace(0.05, 0.95, 10)) + list(np.linspace(1.1, 5.0, 10))
    for b in ends:
        b = float(b)
        path = radial_path(b, config.delta)
        if path.crosses_pole:
            value, spread = delta_spread(length_integrand, path)
            result.add(f'delta/b={b:.4g}', spread, QUADRATURE_TOLERANCE)
        else:
            value = integrate_contour(length_integrand, path)
        result.add(f'length/b={b:.4g}', abs(value - length_1d(b)), QUADRATURE_TOLERANCE)
    far = QUARTER_CIRCLE_END
    value = integrate_contour(length_integrand, radial_path(far, config.delta))
    result.add('limit/b=1e6', abs(value - HALF_PI_I - math.atanh(1.0 / far)), CONTOUR_LIMIT_TOLERANCE)
    result.details['limit_b_1e6'] = value
    return result


def volume_suite(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    """Whole-sphere volumes i^n vol(S^n) and vol(S^n) for n = 1, 2, 3."""
    result = SuiteResult('volume')
    for n in (1, 2, 3):
        for model in Model:
            value = total_volume(n, model, config.delta)
            expected = expected_total_volume(n, model)
            result.details[f'{model.value}{n}'] = value
            result.add(f'total/{model.value}{n}', abs(value - expected), VOLUME_TOLERANCE)
    return result


def distance_identity_residual(x: MinkowskiVector, y: MinkowskiVector) -> float:
    d = extended_distance(x, y)
    if d.is_infinite:
        return math.nan
    norms = complex(lorentz_norm(x)) * complex(lorentz_norm(y))
    return relative_residual(inner_product(x, y), norms * d.cosh())


def distance_suite(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    """<x,y> = |x||y| cosh d_H over stratified pairs, and the canonical table rows."""
    result = SuiteResult('distance')
    per_case = max(1, config.sample_count(10000) // len(DistanceCase))
    for case in DistanceCase:
        worst, infinite = 0.0, 0
        for _ in range(per_case):
            residual = distance_identity_residual(*sample_pair(case, rng))
            if math.isnan(residual):
                infinite += 1
            else:
                worst = max(worst, residual)
        result.details[case.value] = {'pairs': per_case, 'infinite': infinite}
        result.add(f'identity/{case.value}', worst, DISTANCE_IDENTITY_TOLERANCE)

    for k, (x, y, expected, case) in enumerate(CANONICAL_PAIRS):
        d = extended_distance(x, y)
        if expected is None:
            residual = 0.0 if d.is_infinite and d.case is case else math.inf
        elif d.is_infinite or d.case is not case:
            residual = math.inf
        else:
            residual = abs(d.value - expected)
        result.add(f'canonical/{k}/{case.value}', residual, CANONICAL_TOLERANCE)
    return result


def _right_triangle(rng: np.random.Generator):
    a, b = rng.uniform(0.1, 3.0, size=2)
    legs = (V(math.cosh(b), 0, math.sinh(b)), V(math.cosh(a), math.sinh(a), 0), V(1, 0, 0))
    isometry = LorentzIsometry.random(rng, max_rapidity=1.0)
    return measure_triangle(*(apply_isometry(isometry, v) for v in legs))


def laws_suite(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    """Cosine, dual cosine and sine laws, sign rules and polar relations in every stratum."""
    result = SuiteResult('laws')
    count = config.sample_count(1000)
    for stratum in Stratum:
        laws, signs, duals = LawReport(stratum.value), LawReport(stratum.value), LawReport(stratum.value)
        for _ in range(count):
            t = sample_stratum(stratum, rng)
            laws.merge(verify_cosine_laws(t)).merge(verify_sine_law(t))
            signs.merge(verify_angle_signs(t))
            sinh_signs = verify_sign_identities(t)
            for name in [n for n in sinh_signs.residuals if n.startswith('sinh_sign')]:
                signs.record(name, sinh_signs.residuals[name])
            duals.merge(verify_dual_relations(t))
        prefix = f'{stratum.value}/'
        result.extend(laws, config.tolerance, prefix)
        result.extend(signs, EXACT, prefix)
        result.extend(duals, config.tolerance, prefix)
        result.details[stratum.value] = {'triangles': count, 'degenerate': laws.degenerate + signs.degenerate}

    right = LawReport('right')
    for _ in range(max(1, count // 10)):
        right.merge(verify_right_triangle(_right_triangle(rng)))
    result.extend(right, RIGHT_TRIANGLE_TOLERANCE, 'right/')

    rebuilt, embedded = LawReport('gram'), LawReport('embedding')
    strata = list(Stratum)
    for k in range(max(1, count // 10)):
        t = sample_stratum(strata[k % len(strata)], rng)
        gram = gram_matrix(t.vertices)
        r = triangle_from_gram(gram)
        size = 1.0 + float(np.max(np.abs(gram)))
        rebuilt.record('gram', float(np.max(np.abs(gram_matrix(r.vertices) - gram))) / size)
        for n in range(3):
            rebuilt.record(f'side_{SIDE_NAMES[n]}', relative_residual(cmath.cosh(complex(r.sides[n])),
                                                                  cmath.cosh(complex(t.sides[n]))))
            rebuilt.record(f'angle_{ANGLE_NAMES[n]}', relative_residual(cmath.cos(complex(r.angles[n])),
                                                                    cmath.cos(complex(t.angles[n]))))
        embedded.merge(verify_embedding(t, rng))
    result.extend(rebuilt, config.tolerance, 'gram/')
    result.extend(embedded, config.tolerance)
    return result


def signs_suite(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    """The msgn lemmas over every admissible sign pattern; residuals count failures."""
    result = SuiteResult('signs')
    report = verify_sign_lemmas()
    result.extend(report, EXACT)
    result.details['admissible_patterns'] = report.values['admissible_patterns']
    result.details['msgn_longest'] = report.values['msgn_longest']
    return result


def polygons_suite(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    result = SuiteResult('polygons')
    for family in PolygonFamily:
        report = verify_family(family, config.sample_count(1000), rng=rng)
        result.rows.extend(report.check_rows(result.suite, config.tolerance))
        result.details[family.value] = report

    worst = {}
    for _ in range(config.sample_count(1000)):
        x = complex(*rng.uniform(-3.5, 3.5, size=2))
        for name, value in substitution_residuals(x).items():
            worst[name] = max(worst.get(name, 0.0), value)
    for name, value in worst.items():
        result.add(f'substitution/{name}', value, FORM_TOLERANCE)
    return result


def _classical_sides(rng: np.random.Generator, high: float, perimeter: float = math.inf):
    while True:
        a, b, c = rng.uniform(0.1, high, size=3)
        slack = min(a + b - c, b + c - a, c + a - b)
        if slack > 0.05 and a + b + c < perimeter - 0.05:
            return float(a), float(b), float(c)


def areas_suite(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    """
    Side formula against the cosine-law defect on classical hyperbolic and
    spherical triangles, against the measured defect on sampled ones, the
    large-side limit and S_H = -S_S. Other strata are reported, not checked.
    """
    result = SuiteResult('areas')
    count = config.sample_count(1000)
    worst = {'hyperbolic': 0.0, 'spherical': 0.0, 'defect': 0.0, 'relation': 0.0}
    for _ in range(count):
        sides = _classical_sides(rng, 3.0)
        worst['hyperbolic'] = max(worst['hyperbolic'], abs(area_cosine(*sides) - area_sides(*sides)))
        sides = _classical_sides(rng, 3.0, 2 * math.pi)
        worst['spherical'] = max(worst['spherical'], abs(area_cosine(*sides, model=Model.SPHERICAL)
                                                         - area_sides(*sides, model=Model.SPHERICAL)))
        t = sample_stratum(Stratum.THREE_TIMELIKE, rng)
        worst['defect'] = max(worst['defect'], abs(area_result(t).difference))
        relation = area_defect(t, Model.HYPERBOLIC) + area_defect(t, Model.SPHERICAL)
        worst['relation'] = max(worst['relation'], abs(relation))
    for name, residual in worst.items():
        result.add(f'classical/{name}', residual, config.tolerance)

    limit = area_sides(40.0, 40.0, 40.0)
    result.add('limit/sides=40', abs(limit - math.pi), AREA_LIMIT_TOLERANCE)
    result.details['limit_sides_30'] = area_sides(30.0, 30.0, 30.0)

    extended = {}
    for stratum in Stratum:
        if stratum is Stratum.THREE_TIMELIKE:
            continue
        spread, degenerate = 0.0, 0
        for _ in range(max(1, count // 50)):
            try:
                spread = max(spread, abs(area_result(sample_stratum(stratum, rng)).wrapped_difference))
            except ExtHypError:
                degenerate += 1
        extended[stratum.value] = {'max_wrapped_difference': spread, 'degenerate': degenerate}
    result.details['extended'] = extended
    return result


def correspondence_suite(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    """Hyperbolic forms at l against spherical forms at -i l, and i <-> -i symmetry."""
    result = SuiteResult('correspondence')
    worst = {(law, key): 0.0 for law in CorrespondenceLaw for key in ('correspondence', 'symmetry')}
    skipped = 0
    per_stratum = max(1, config.sample_count(1000) // 5)
    for stratum in Stratum:
        for _ in range(per_stratum):
            t = sample_stratum(stratum, rng)
            for law in CorrespondenceLaw:
                try:
                    residuals = correspondence_check(law, t)
                except ExtHypError:
                    skipped += 1
                    continue
                for key, value in residuals.items():
                    worst[law, key] = max(worst[law, key], value)
    for (law, key), residual in worst.items():
        result.add(f'{law.value}/{key}', residual, CORRESPONDENCE_TOLERANCE)
    result.details['skipped'] = skipped
    return result


def invariance_suite(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    """Sides, angles and law residuals under random isometries of rapidity up to 5."""
    result = SuiteResult('invariance')
    measurements, laws = LawReport('isometry'), LawReport('isometry')
    strata = list(Stratum)
    for k in range(config.sample_count(100)):
        t = sample_stratum(strata[k % len(strata)], rng)
        isometry = LorentzIsometry.random(rng, max_rapidity=MAX_RAPIDITY)
        measurements.merge(verify_isometry_invariance(t, isometry))
        moved = measure_triangle(*(apply_isometry(isometry, v) for v in t.vertices))
        laws.merge(verify_cosine_laws(moved)).merge(verify_sine_law(moved))
    result.extend(measurements, INVARIANCE_TOLERANCE)
    result.extend(laws, INVARIANCE_TOLERANCE, 'moved/')
    return result


SUITES: Dict[str, Callable[[RunConfig, np.random.Generator], SuiteResult]] = {
    'lorentz': lorentz_suite,
    'branch': branch_suite,
    'contour': contour_suite,
    'volume': volume_suite,
    'distance': distance_suite,
    'geometry': geometry_suite,
    'laws': laws_suite,
    'signs': signs_suite,
    'polygons': polygons_suite,
    'areas': areas_suite,
    'correspondence': correspondence_suite,
    'invariance': invariance_suite,
}


@log(logger)
def run_suite(name: str, config: RunConfig) -> SuiteResult:
    """
    Run one suite. An error inside it becomes a failing 'error' row rather
    than aborting the remaining suites.
    """
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f'Unknown suite {name!r}; expected all or one of {list(SUITES)}') from None
    rng = np.random.default_rng([config.seed, list(SUITES).index(name)])
    try:
        result = suite(config, rng)
    except ExtHypError as e:
        logger.error('Suite %s failed: %s', name, e)
        result = SuiteResult(name, details={'error': str(e)})
        result.add('error', math.inf, EXACT)
    logger.info('Suite %s: %s', name, 'passed' if result.passed else 'FAILED')
    return result


def run_suites(name: str, config: RunConfig) -> List[SuiteResult]:
    names = list(SUITES) if name == 'all' else [name]
    return [run_suite(n, config) for n in names]

# -*- coding: utf-8 -*-
"""
Command line frontend.

Every command prints one report, JSON by default or CSV check rows with
``--format csv``, and exits 0 when every check passed, 1 when a check
failed and 2 on bad input.
"""
import argparse
import cmath
import logging
import math
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, TextIO

from exthyp import __version__
from exthyp.constants.exit_codes import exOk, exUsage, exVerificationFailed
from exthyp.constants.tolerances import (
    DEFAULT_DETOUR, DISTANCE_IDENTITY_TOLERANCE, QUADRATURE_TOLERANCE, VOLUME_TOLERANCE,
)
from exthyp.contour.contour_oracle import (
    delta_spread, expected_total_volume, integrate_contour, length_1d, length_integrand, radial_path, total_volume,
    volume_integrand,
)
from exthyp.errors import ExtHypError
from exthyp.geometry.lorentz_core import inner_product, lorentz_norm
from exthyp.geometry.metric_geometry import angle_between, extended_distance
from exthyp.misc.serialize import dumps, write_csv
from exthyp.misc.util import parse_complex, parse_vector, relative_residual
from exthyp.suites import SUITES, distance_identity_residual, run_suites
from exthyp.trig.area_formulas import area_cosine, area_sides, half_perimeter_product
from exthyp.trig.polygon_identities import PolygonFamily, verify_family
from exthyp.trig.trig_laws import measure_triangle, verify_all
from exthyp.types.contour_spec import RadialProfile
from exthyp.types.model import Model
from exthyp.types.reports import CheckRow
from exthyp.types.run_config import FORMATS, RunConfig
from exthyp.utilities.log.decorators import log

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')
POLYGON_SAMPLES = 100


@dataclass
class Outcome:
    """What a command computed, and the checks it made."""
    payload: Dict[str, object]
    rows: List[CheckRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)


def _vectors(config: RunConfig, count: int):
    if len(config.vectors) != count:
        raise ValueError(f'{config.command} needs {count} vectors, got {len(config.vectors)}')
    return [parse_vector(text) for text in config.vectors]


def _dist(config: RunConfig) -> Outcome:
    x, y = _vectors(config, 2)
    model = Model.parse(config.model)
    d = extended_distance(x, y)
    payload = {'x': x, 'y': y, 'model': model, 'case': d.case, 'd_H': d}
    if model is Model.SPHERICAL:
        payload['d_S'] = d.scaled(-1j)
    outcome = Outcome(payload)
    residual = distance_identity_residual(x, y)
    if not math.isnan(residual):
        outcome.rows.append(CheckRow('dist', 'identity', residual, DISTANCE_IDENTITY_TOLERANCE))
    return outcome


def _angle(config: RunConfig) -> Outcome:
    v, w = _vectors(config, 2)
    theta = angle_between(v, w)
    norms = complex(lorentz_norm(v)) * complex(lorentz_norm(w))
    residual = relative_residual(inner_product(v, w), norms * cmath.cos(theta))
    return Outcome({'v': v, 'w': w, 'angle': theta}, [CheckRow('angle', 'identity', residual,
                                                                DISTANCE_IDENTITY_TOLERANCE)])


def _triangle(config: RunConfig) -> Outcome:
    model = Model.parse(config.model)
    t = measure_triangle(*_vectors(config, 3))
    outcome = Outcome({'model': model, 'triangle': t})
    if config.verify:
        report = verify_all(t, model)
        outcome.payload['report'] = report
        outcome.rows.extend(report.check_rows('triangle', config.tolerance))
    return outcome


def _polygon(config: RunConfig) -> Outcome:
    if config.action != 'verify':
        raise ValueError(f'Unknown polygon action {config.action!r}, expected verify')
    family = PolygonFamily.parse(config.family or '')
    report = verify_family(family, config.sample_count(POLYGON_SAMPLES), seed=config.seed)
    return Outcome({'family': family, 'seed': config.seed, 'report': report},
                   report.check_rows('polygon', config.tolerance))


def _contour(config: RunConfig) -> Outcome:
    if config.action == 'length':
        if config.b is None:
            raise ValueError('contour length needs --b')
        value = integrate_contour(length_integrand, radial_path(config.b, config.delta))
        expected = length_1d(config.b)
        return Outcome({'kind': 'length', 'b': config.b, 'value': value, 'closed_form': expected},
                       [CheckRow('contour', 'length', abs(value - expected), QUADRATURE_TOLERANCE)])
    if config.action == 'volume':
        model = Model.parse(config.model)
        if config.b is None or math.isinf(config.b):
            value = total_volume(config.n, model, config.delta)
            expected = expected_total_volume(config.n, model)
            return Outcome({'kind': 'volume', 'n': config.n, 'b': math.inf, 'model': model, 'value': value,
                            'closed_form': expected},
                           [CheckRow('contour', 'total_volume', abs(value - expected), VOLUME_TOLERANCE)])
        profile = RadialProfile.full_sphere(config.n)
        value, spread = delta_spread(volume_integrand(profile), radial_path(config.b, config.delta))
        if model is Model.SPHERICAL:
            value = value * (-1j) ** config.n
        return Outcome({'kind': 'volume', 'n': config.n, 'b': config.b, 'model': model, 'value': value},
                       [CheckRow('contour', 'delta_spread', spread, QUADRATURE_TOLERANCE)])
    raise ValueError(f'Unknown contour action {config.action!r}, expected length or volume')


def _area(config: RunConfig) -> Outcome:
    if len(config.sides) != 3:
        raise ValueError(f'area needs three sides, got {len(config.sides)}')
    a, b, c = (parse_complex(text) for text in config.sides)
    model = Model.parse(config.model)
    s_sides = area_sides(a, b, c, model)
    s_cosine = area_cosine(a, b, c, model)
    p, product = half_perimeter_product(a, b, c, model)
    difference = complex(s_cosine) - complex(s_sides)
    outcome = Outcome({'model': model, 'sides': [a, b, c], 'p': p, 'product': product, 's_sides': s_sides,
                       's_cosine': s_cosine, 'difference': difference})
    # off the classical region the two formulas may sit on different branches
    if all(side.is_real() for side in (a, b, c)):
        outcome.rows.append(CheckRow('area', 'cosine_vs_sides', abs(difference), config.tolerance))
    return outcome


def _suite(config: RunConfig) -> Outcome:
    results = run_suites(config.action, config)
    rows = [row for result in results for row in result.rows]
    return Outcome({'seed': config.seed, 'suites': results}, rows)


COMMANDS = {
    'dist': _dist,
    'angle': _angle,
    'triangle': _triangle,
    'polygon': _polygon,
    'contour': _contour,
    'area': _area,
    'suite': _suite,
}


@log(logger)
def dispatch(config: RunConfig) -> Outcome:
    try:
        command = COMMANDS[config.command]
    except KeyError:
        raise ValueError(f'Unknown command {config.command!r}') from None
    return command(config)


def emit(config: RunConfig, outcome: Outcome, stream: TextIO):
    if config.output_format == 'csv':
        write_csv(outcome.rows, stream)
        return
    document = {'command': config.command, **outcome.payload, 'passed': outcome.passed,
                'checks': [dict(row._asdict(), passed=row.passed) for row in outcome.rows]}
    stream.write(dumps(document))
    stream.write('\n')


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', dest='output_format', choices=FORMATS, default=argparse.SUPPRESS,
                        help='Report format (default: json).')
    common.add_argument('--json', dest='output_format', action='store_const', const='json',
                        default=argparse.SUPPRESS, help='Same as --format json.')
    common.add_argument('--seed', type=int, default=argparse.SUPPRESS, help='Random seed (default: 0).')
    common.add_argument('--samples', type=int, default=argparse.SUPPRESS,
                        help='Sample count, overriding each suite default.')
    common.add_argument('--tol', dest='tolerance', type=float, default=argparse.SUPPRESS,
                        help='Verification tolerance (default: $EXTHYP_TOL or 1e-8).')
    common.add_argument('--delta', type=float, default=argparse.SUPPRESS,
                        help=f'Contour detour radius (default: {DEFAULT_DETOUR:g}).')
    common.add_argument('--log-level', dest='log_level', choices=LOG_LEVELS, default=argparse.SUPPRESS,
                        help='Logging level on stderr (default: WARNING).')
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog='exthyp', parents=[common],
                                     description='Distances, angles, areas and trigonometric laws on the '
                                                 'extended hyperbolic and de Sitter spheres.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    p = commands.add_parser('dist', parents=[common], help='Extended distance between two points.')
    p.add_argument('vectors', nargs=2, metavar='vector', help="Comma separated coordinates, e.g. '1,0,0'.")
    p.add_argument('--model', default='H', help='H or S (default: H).')

    p = commands.add_parser('angle', parents=[common], help='Angle between two vectors.')
    p.add_argument('vectors', nargs=2, metavar='vector')

    p = commands.add_parser('triangle', parents=[common], help='Sides, angles and duals of a triangle.')
    p.add_argument('vectors', nargs=3, metavar='vertex')
    p.add_argument('--verify', action='store_true', help='Check every trigonometric law that applies.')
    p.add_argument('--model', default='H', help='H or S (default: H).')

    p = commands.add_parser('polygon', parents=[common], help='Polygon family identities.')
    p.add_argument('action', choices=('verify',))
    p.add_argument('family', help=', '.join(f.value for f in PolygonFamily))

    p = commands.add_parser('contour', parents=[common], help='Contour lengths and volumes.')
    p.add_argument('action', choices=('length', 'volume'))
    p.add_argument('--b', type=float, help='Radial end point; volume without --b is the whole sphere.')
    p.add_argument('--n', type=int, default=2, help='Dimension for volume (default: 2).')
    p.add_argument('--model', default='H', help='H or S (default: H).')

    p = commands.add_parser('area', parents=[common], help='Triangle area from its sides.')
    p.add_argument('--sides', nargs=3, required=True, metavar='side', help="Complex literals such as '1.5+0.5i'.")
    p.add_argument('--model', default='H', help='H or S (default: H).')

    p = commands.add_parser('suite', parents=[common], help='Batch verification suites.')
    p.add_argument('action', metavar='suite', choices=('all',) + tuple(SUITES), help='all or one suite name.')
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values = vars(args)
    fields = ('action', 'family', 'model', 'b', 'n', 'verify', 'tolerance', 'samples', 'seed', 'output_format',
              'delta', 'log_level')
    kwargs = {name: values[name] for name in fields if name in values}
    vectors = tuple(values.get('vectors') or ())
    sides = tuple(values.get('sides') or ())
    return RunConfig(command=args.command, vectors=vectors, sides=sides, **kwargs)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=getattr(logging, getattr(args, 'log_level', 'WARNING')), format=LOG_FORMAT,
                        stream=sys.stderr)
    try:
        config = config_from_args(args)
        outcome = dispatch(config)
    except (ExtHypError, ValueError) as e:
        logger.debug('Rejected input: %s', e)
        parser.print_usage(sys.stderr)
        print(f'{parser.prog}: error: {e}', file=sys.stderr)
        return exUsage
    emit(config, outcome, sys.stdout)
    if not outcome.passed:
        logger.warning('%d of %d checks failed', sum(not row.passed for row in outcome.rows), len(outcome.rows))
        return exVerificationFailed
    return exOk


if __name__ == '__main__':
    sys.exit(main())

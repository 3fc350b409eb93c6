# -*- coding: utf-8 -*-
import contextlib
import io
import json
import math
from unittest import TestCase, mock

from exthyp.cli import build_parser, config_from_args, dispatch, main
from exthyp.constants.exit_codes import exOk, exUsage, exVerificationFailed


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = main(list(argv))
        except SystemExit as e:
            code = e.code
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, _ = run(*argv)
    return code, json.loads(out)


def usage(*argv):
    code, out, err = run(*argv)
    assert code == exUsage, err
    assert out == ''
    assert 'usage' in err


class Test_Arguments(TestCase):
    """
    Test argument parsing into RunConfig
    """
    def test_options_after_command(self):
        args = build_parser().parse_args(['suite', 'laws', '--seed', '7', '--samples', '3', '--format', 'csv'])
        config = config_from_args(args)
        assert (config.command, config.action, config.seed, config.samples, config.output_format) == \
            ('suite', 'laws', 7, 3, 'csv')

    def test_options_before_command(self):
        config = config_from_args(build_parser().parse_args(['--seed', '5', '--tol', '1e-6', 'area',
                                                             '--sides', '1', '1', '1']))
        assert config.seed == 5
        assert config.tolerance == 1e-6
        assert config.sides == ('1', '1', '1')

    def test_environment_tolerance(self):
        with mock.patch.dict('os.environ', {'EXTHYP_TOL': '1e-5'}):
            config = config_from_args(build_parser().parse_args(['area', '--sides', '1', '1', '1']))
        assert config.tolerance == 1e-5

    def test_json_flag(self):
        config = config_from_args(build_parser().parse_args(['--json', 'contour', 'length', '--b', '2']))
        assert config.output_format == 'json'
        config = config_from_args(build_parser().parse_args(['suite', 'signs', '--json']))
        assert config.output_format == 'json'

    def test_dispatch(self):
        config = config_from_args(build_parser().parse_args(['contour', 'length', '--b', '0.5']))
        outcome = dispatch(config)
        assert outcome.passed
        self.assertAlmostEqual(outcome.payload['value'], math.atanh(0.5))


class Test_Commands(TestCase):
    """
    Test the commands end to end
    """
    def test_dist(self):
        code, report = run_json('dist', '1,0', f'{math.cosh(1)},{math.sinh(1)}')
        assert code == exOk
        assert report['schema'] == 'exthyp/1'
        assert report['case'] == 'timelike-pair'
        self.assertAlmostEqual(report['d_H']['re'], 1.0)

    def test_dist_infinite(self):
        code, report = run_json('dist', '1,1,0', '1,-1,0')
        assert code == exOk
        assert report['d_H'] == 'inf'
        assert report['checks'] == []

    def test_angle(self):
        code, report = run_json('angle', '0,1,0', '0,0,1')
        assert code == exOk
        self.assertAlmostEqual(report['angle']['re'], math.pi / 2)

    def test_triangle_verify(self):
        code, report = run_json('triangle', '1,0,0', '0,1,0', '0,0,1', '--verify')
        assert code == exOk
        assert report['passed']
        assert report['triangle']['stratum'] == '1T2S/-++'
        assert report['triangle']['degenerate'] == []
        assert report['checks']

    def test_triangle_on_tangent_line(self):
        """A side on a tangent line leaves two angles undefined; the laws at the third still hold."""
        code, report = run_json('triangle', '0.7,0.7,1', '2,2,1', '1,0,0', '--verify')
        assert code == exOk
        assert report['triangle']['degenerate'] == ['c', 'A', 'B']
        assert report['triangle']['angles'][0] is None
        assert {check['case'] for check in report['checks']} == {'cosine_C', 'sine_squared_C'}

    def test_triangle_with_ideal_vertex(self):
        code, report = run_json('triangle', '1,1,0', '1,0,0', '0,0,1', '--verify')
        assert code == exOk
        assert report['triangle']['stratum'] == '1T1S1L/+0+'
        assert report['checks'] == []

    def test_polygon(self):
        code, report = run_json('polygon', 'verify', 'LambertQuadDS', '--samples', '5', '--seed', '3')
        assert code == exOk
        assert report['report']['samples'] == 5

    def test_json_flag(self):
        """--json selects the JSON report on any command."""
        code, report = run_json('polygon', 'verify', 'LambertQuadH', '--samples', '5', '--seed', '3', '--json')
        assert code == exOk
        assert report['command'] == 'polygon'
        assert report['passed']

    def test_contour_length(self):
        code, report = run_json('contour', 'length', '--b', '2')
        assert code == exOk
        self.assertAlmostEqual(report['value']['re'], 0.549306, places=6)
        self.assertAlmostEqual(report['value']['im'], 1.570796, places=6)

    def test_contour_volume(self):
        code, report = run_json('contour', 'volume', '--n', '2', '--b', f'{math.tanh(1)}')
        assert code == exOk
        self.assertAlmostEqual(report['value']['re'], 2 * math.pi * (math.cosh(1) - 1), places=6)
        code, report = run_json('contour', 'volume', '--n', '2', '--model', 'S')
        assert code == exOk
        self.assertAlmostEqual(report['value']['re'], 4 * math.pi, places=3)

    def test_area(self):
        code, report = run_json('area', '--sides', '1', '1', '1')
        assert code == exOk
        self.assertAlmostEqual(report['s_sides']['re'], 0.3852, places=4)

    def test_area_extended_is_reported(self):
        code, report = run_json('area', '--sides', '1+0.5i', '1', '1.2')
        assert code == exOk
        assert report['checks'] == []
        assert 'difference' in report

    def test_csv(self):
        code, out, _ = run('suite', 'signs', '--format', 'csv')
        assert code == exOk
        lines = out.splitlines()
        assert lines[0] == 'suite,case,residual,tolerance,pass'
        assert all(line.startswith('signs,') for line in lines[1:])

    def test_deterministic(self):
        first = run('suite', 'laws', '--samples', '2', '--seed', '7')
        second = run('suite', 'laws', '--samples', '2', '--seed', '7')
        assert first[0] == exOk
        assert first[1] == second[1]

    def test_verification_failure(self):
        code, report = run_json('polygon', 'verify', 'LambertQuadH', '--samples', '5', '--tol', '1e-30')
        assert code == exVerificationFailed
        assert not report['passed']


class Test_UsageErrors(TestCase):
    """
    Test exit code 2 on bad input
    """
    def test_bad_vector(self):
        usage('dist', '1,x', '0,1')

    def test_dependent_triangle(self):
        usage('triangle', '1,0,0', '2,0,0', '0,0,1')

    def test_unknown_family(self):
        usage('polygon', 'verify', 'Heptagon')

    def test_missing_b(self):
        usage('contour', 'length')

    def test_unknown_command(self):
        usage('frobnicate')

    def test_bad_environment(self):
        with mock.patch.dict('os.environ', {'EXTHYP_TOL': 'loose'}):
            usage('area', '--sides', '1', '1', '1')

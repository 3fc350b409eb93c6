# -*- coding: utf-8 -*-
from unittest import TestCase, mock

from exthyp.constants.tolerances import LAW_TOLERANCE
from exthyp.types.run_config import RunConfig, default_tolerance


class Test_RunConfig(TestCase):
    """
    Test RunConfig defaults and validation
    """
    def test_defaults(self):
        with mock.patch.dict('os.environ', {}, clear=True):
            config = RunConfig('suite', 'all')
        assert config.tolerance == LAW_TOLERANCE
        assert config.seed == 0
        assert config.output_format == 'json'
        assert config.sample_count(50) == 50
        assert RunConfig('suite', samples=7).sample_count(50) == 7

    def test_environment_tolerance(self):
        with mock.patch.dict('os.environ', {'EXTHYP_TOL': '1e-6'}):
            assert default_tolerance() == 1e-6
            assert RunConfig('area').tolerance == 1e-6
            assert RunConfig('area', tolerance=1e-3).tolerance == 1e-3

    def test_bad_environment(self):
        with mock.patch.dict('os.environ', {'EXTHYP_TOL': 'tight'}):
            with self.assertRaises(ValueError):
                default_tolerance()

    def test_validation(self):
        for kwargs in ({'tolerance': 0.0}, {'samples': 0}, {'delta': -1.0}, {'output_format': 'xml'}):
            with self.subTest(**kwargs):
                with self.assertRaises(ValueError):
                    RunConfig('suite', **kwargs)

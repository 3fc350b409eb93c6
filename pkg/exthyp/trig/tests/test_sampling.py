# -*- coding: utf-8 -*-
import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from exthyp.errors import SamplingError
from exthyp.geometry.lorentz_core import gram_matrix, inner_product
from exthyp.trig.sampling import (
    Stratum, de_sitter_point, hyperbolic_point, randomize, rejection_sample, sample_stratum, well_conditioned,
)
from exthyp.types.minkowski_vector import MinkowskiVector

V = MinkowskiVector.of
seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


class TestStratum(unittest.TestCase):
    """Test Stratum parsing"""

    def test_parse(self):
        self.assertIs(Stratum.parse('1t2s'), Stratum.ONE_TIMELIKE)
        self.assertIs(Stratum.parse(' 3S-secant '), Stratum.SECANT)
        self.assertIs(Stratum.parse('equator'), Stratum.EQUATOR)
        with self.assertRaises(ValueError):
            Stratum.parse('4T')

    def test_timelike_count(self):
        counts = {s: s.timelike_count for s in Stratum}
        self.assertEqual(counts, {Stratum.THREE_TIMELIKE: 3, Stratum.TWO_TIMELIKE: 2, Stratum.ONE_TIMELIKE: 1,
                                  Stratum.SECANT: 0, Stratum.EQUATOR: 0})


class TestPoints(unittest.TestCase):
    """Test the point samplers"""

    @settings(max_examples=50, deadline=None)
    @given(seeds)
    def test_unit_points(self, seed):
        rng = np.random.default_rng(seed)
        p = hyperbolic_point(rng)
        self.assertAlmostEqual(inner_product(p, p), -1.0)
        self.assertGreater(p.time, 0)
        q = de_sitter_point(rng, -1.0, 1.0)
        self.assertAlmostEqual(inner_product(q, q), 1.0)

    @settings(max_examples=30, deadline=None)
    @given(seeds)
    def test_randomize_keeps_gram(self, seed):
        rng = np.random.default_rng(seed)
        vertices = (hyperbolic_point(rng), de_sitter_point(rng, -1, 1), de_sitter_point(rng, -1, 1))
        moved = randomize(vertices, rng)
        np.testing.assert_allclose(gram_matrix(moved), gram_matrix(vertices), rtol=1e-9, atol=1e-9)


class TestSampleStratum(unittest.TestCase):
    """Test stratified triangle sampling"""

    @settings(max_examples=25, deadline=None)
    @given(st.sampled_from(list(Stratum)), seeds)
    def test_lands_in_stratum(self, stratum, seed):
        t = sample_stratum(stratum, np.random.default_rng(seed))
        self.assertEqual(t.timelike_count, stratum.timelike_count)
        self.assertTrue(well_conditioned(t))
        self.assertTrue(t.stratum.startswith(stratum.value[:4] if stratum.timelike_count else '0T3S'))

    def test_secant_sides(self):
        t = sample_stratum(Stratum.SECANT, np.random.default_rng(3))
        self.assertTrue(t.stratum.endswith('/+++'))
        t = sample_stratum(Stratum.EQUATOR, np.random.default_rng(3))
        self.assertTrue(t.stratum.endswith('/---'))

    def test_classical_upper_sheet(self):
        t = sample_stratum(Stratum.THREE_TIMELIKE, np.random.default_rng(11))
        for v in t.vertices:
            self.assertGreater(v.time, 0)
        for angle in t.angles:
            self.assertTrue(angle.is_real())

    def test_reproducible(self):
        first = sample_stratum(Stratum.ONE_TIMELIKE, np.random.default_rng(7))
        second = sample_stratum(Stratum.ONE_TIMELIKE, np.random.default_rng(7))
        self.assertEqual(first.vertices, second.vertices)


class TestRejection(unittest.TestCase):
    """Test rejection_sample"""

    def test_exhausted(self):
        frame = (V(1, 0, 0), V(0, 1, 0), V(0, 0, 1))
        with self.assertRaises(SamplingError):
            rejection_sample(lambda: frame, lambda t: False, 'never', retries=3)

    def test_rejected_constructions(self):
        draws = iter([None, (V(1, 0, 0), V(2, 0, 0), V(0, 0, 1)), (V(1, 0, 0), V(0, 1, 0), V(0, 0, 1))])
        t = rejection_sample(lambda: next(draws), lambda t: True, 'frame', retries=3)
        self.assertEqual(t.vertices[1], V(0, 1, 0))


if __name__ == '__main__':
    unittest.main()

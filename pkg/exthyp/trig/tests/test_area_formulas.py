# -*- coding: utf-8 -*-
import math
import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from exthyp.constants.tolerances import AREA_LIMIT_TOLERANCE, CORRESPONDENCE_TOLERANCE, LAW_TOLERANCE
from exthyp.errors import DegenerateInputError
from exthyp.trig.area_formulas import (
    CorrespondenceLaw, area_cosine, area_defect, area_result, area_sides, correspondence_check,
    half_perimeter_product,
)
from exthyp.trig.sampling import Stratum, sample_stratum
from exthyp.trig.trig_laws import measure_triangle
from exthyp.types.minkowski_vector import MinkowskiVector
from exthyp.types.model import Model

V = MinkowskiVector.of
seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


def octant():
    return measure_triangle(V(1, 0, 0), V(0, 1, 0), V(0, 0, 1))


class TestAreaFromSides(unittest.TestCase):
    """Test area_sides and area_cosine on known triangles"""

    def test_equilateral(self):
        expected = math.pi - 3 * math.acos(math.cosh(1) / (math.cosh(1) + 1))
        self.assertAlmostEqual(area_sides(1, 1, 1), expected, places=10)
        self.assertAlmostEqual(area_cosine(1, 1, 1), expected, places=10)
        self.assertAlmostEqual(area_sides(1, 1, 1).real, 0.3852, places=4)

    def test_spherical_octant(self):
        right = math.pi / 2
        self.assertAlmostEqual(area_sides(right, right, right, Model.SPHERICAL), right)
        self.assertAlmostEqual(area_cosine(right, right, right, Model.SPHERICAL), right)

    def test_half_perimeter(self):
        p, product = half_perimeter_product(1, 2, 2.5)
        self.assertAlmostEqual(p, 2.75)
        expected = math.tanh(1.375) * math.tanh(0.875) * math.tanh(0.375) * math.tanh(0.125)
        self.assertAlmostEqual(product, expected)

    def test_infinite_sides_limit(self):
        """Three very long sides give an area just below pi."""
        area = area_sides(40, 40, 40)
        self.assertLess(abs(area - math.pi), AREA_LIMIT_TOLERANCE)
        self.assertLess(area.real, math.pi)

    def test_pole(self):
        third = 2 * math.pi / 3
        with self.assertRaises(DegenerateInputError):
            area_sides(third, third, third, Model.SPHERICAL)
        with self.assertRaises(DegenerateInputError):
            area_sides(third * 1j, third * 1j, third * 1j)

    @settings(max_examples=40, deadline=None)
    @given(st.floats(min_value=0.1, max_value=3.0), st.floats(min_value=0.1, max_value=3.0),
           st.floats(min_value=0.05, max_value=0.95))
    def test_classical_formulas_agree(self, a, b, t):
        c = abs(a - b) + t * (a + b - abs(a - b))
        area = area_sides(a, b, c)
        self.assertTrue(area.is_real())
        self.assertGreater(area.real, 0)
        self.assertAlmostEqual(area, area_cosine(a, b, c), places=7)


class TestAreaOfTriangle(unittest.TestCase):
    """Test area_defect and area_result on measured triangles"""

    def test_octant_defects(self):
        t = octant()
        self.assertAlmostEqual(area_defect(t, Model.SPHERICAL), math.pi / 2)
        self.assertAlmostEqual(area_defect(t, Model.HYPERBOLIC), -math.pi / 2)

    def test_octant_result(self):
        result = area_result(octant(), Model.SPHERICAL)
        self.assertTrue(result.agrees(LAW_TOLERANCE), result.to_json())
        self.assertAlmostEqual(result.p, 3 * math.pi / 4)
        self.assertEqual(result.to_json()['model'], 'S')

    @settings(max_examples=20, deadline=None)
    @given(seeds)
    def test_classical_result(self, seed):
        t = sample_stratum(Stratum.THREE_TIMELIKE, np.random.default_rng(seed))
        result = area_result(t)
        self.assertTrue(result.agrees(LAW_TOLERANCE), result.to_json())
        self.assertAlmostEqual(result.s_cosine, result.s_defect, places=7)
        self.assertGreater(result.s_defect.real, 0)

    @settings(max_examples=20, deadline=None)
    @given(st.sampled_from(list(Stratum)), seeds)
    def test_defects_opposite(self, stratum, seed):
        t = sample_stratum(stratum, np.random.default_rng(seed))
        self.assertAlmostEqual(area_defect(t, Model.HYPERBOLIC), -area_defect(t, Model.SPHERICAL))


class TestCorrespondence(unittest.TestCase):
    """Test the hyperbolic/spherical correspondence of the laws"""

    def test_parse(self):
        self.assertIs(CorrespondenceLaw.parse('Dual-Cosine'), CorrespondenceLaw.DUAL)
        self.assertIs(CorrespondenceLaw.parse('area'), CorrespondenceLaw.AREA)
        with self.assertRaises(ValueError):
            CorrespondenceLaw.parse('tangent')

    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from(list(CorrespondenceLaw)), st.sampled_from(list(Stratum)), seeds)
    def test_correspondence(self, law, stratum, seed):
        t = sample_stratum(stratum, np.random.default_rng(seed))
        residuals = correspondence_check(law, t)
        self.assertLess(residuals['correspondence'], CORRESPONDENCE_TOLERANCE, residuals)
        self.assertLess(residuals['symmetry'], CORRESPONDENCE_TOLERANCE, residuals)

    def test_octant(self):
        for law in CorrespondenceLaw:
            residuals = correspondence_check(law, octant())
            self.assertLess(max(residuals.values()), CORRESPONDENCE_TOLERANCE, law)


if __name__ == '__main__':
    unittest.main()

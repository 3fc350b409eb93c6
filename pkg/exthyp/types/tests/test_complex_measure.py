# -*- coding: utf-8 -*-
import math
import unittest

from exthyp.types.complex_measure import ComplexMeasure, measure


class TestComplexMeasure(unittest.TestCase):
    """Test ComplexMeasure value semantics."""

    def test_constructor(self):
        """Real and complex arguments both construct."""
        self.assertEqual(ComplexMeasure(1.0, 2.0), complex(1, 2))
        self.assertEqual(ComplexMeasure(complex(1, 2)), complex(1, 2))
        self.assertEqual(ComplexMeasure(), 0j)

    def test_rejects_non_finite(self):
        """Infinite and NaN parts are refused."""
        with self.assertRaises(ValueError):
            ComplexMeasure(math.inf)
        with self.assertRaises(ValueError):
            ComplexMeasure(0.0, math.nan)

    def test_axis_tests(self):
        """is_real / is_imaginary use a relative band."""
        self.assertTrue(ComplexMeasure(2.0, 1e-12).is_real())
        self.assertFalse(ComplexMeasure(2.0, 1e-3).is_real())
        self.assertTrue(ComplexMeasure(1e-12, -3.0).is_imaginary())
        self.assertTrue(ComplexMeasure(0.0).is_real())

    def test_json(self):
        """JSON form is {re, im}."""
        value = ComplexMeasure(0.5, -1.5)
        self.assertEqual(value.to_json(), {'re': 0.5, 'im': -1.5})
        self.assertEqual(ComplexMeasure.from_json({'re': 0.5, 'im': -1.5}), value)

    def test_measure_scrubs_negative_zero(self):
        """measure() never leaves -0.0 behind."""
        value = measure(complex(-0.0, -0.0))
        self.assertEqual(math.copysign(1.0, value.real), 1.0)
        self.assertEqual(math.copysign(1.0, value.imag), 1.0)

    def test_conjugate(self):
        """Conjugate stays a ComplexMeasure."""
        value = ComplexMeasure(1.0, 2.0).conjugate()
        self.assertIsInstance(value, ComplexMeasure)
        self.assertEqual(value, complex(1, -2))

# -*- coding: utf-8 -*-
import math
import unittest

import numpy as np

from exthyp.errors import DimensionMismatchError
from exthyp.types.lorentz_isometry import LorentzIsometry, signature_matrix


class TestLorentzIsometry(unittest.TestCase):
    """Test LorentzIsometry construction and group operations"""

    def test_rejects_non_lorentzian(self):
        """A Euclidean shear is not in O(2,1)."""
        m = np.eye(3)
        m[1, 2] = 0.5
        with self.assertRaises(ValueError):
            LorentzIsometry(m)

    def test_rejects_non_square(self):
        with self.assertRaises(DimensionMismatchError):
            LorentzIsometry(np.ones((2, 3)))

    def test_boost(self):
        """Boost entries are cosh / sinh."""
        m = LorentzIsometry.boost(1.0).matrix
        self.assertAlmostEqual(m[0, 0], math.cosh(1.0))
        self.assertAlmostEqual(m[0, 1], math.sinh(1.0))
        self.assertAlmostEqual(m[2, 2], 1.0)

    def test_inverse(self):
        """M M^{-1} = I."""
        rng = np.random.default_rng(3)
        g = LorentzIsometry.random(rng)
        self.assertEqual(g @ g.inverse(), LorentzIsometry.identity(2))

    def test_random_is_orthochronous(self):
        """Random elements preserve the sheets unless time reversal is asked for."""
        rng = np.random.default_rng(11)
        for _ in range(20):
            g = LorentzIsometry.random(rng)
            self.assertTrue(g.orthochronous)
            self.assertTrue(g.proper)
            s = signature_matrix(2)
            self.assertTrue(np.allclose(g.matrix.T @ s @ g.matrix, s, atol=1e-7))
        self.assertFalse(LorentzIsometry.random(rng, orthochronous=False).orthochronous)

    def test_reflection(self):
        """A space reflection is orthochronous but improper."""
        r = LorentzIsometry.reflection(2)
        self.assertTrue(r.orthochronous)
        self.assertFalse(r.proper)

    def test_matrix_read_only(self):
        g = LorentzIsometry.identity(2)
        with self.assertRaises(ValueError):
            g.matrix[0, 0] = 2.0

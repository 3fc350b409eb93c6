# -*- coding: utf-8 -*-
import math
import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from exthyp.errors import DegenerateInputError, DimensionMismatchError
from exthyp.geometry.lorentz_core import (
    apply_isometry, causal_class, gram_matrix, inner_product, lorentz_cross, lorentz_norm, model_norm,
    tangent_toward, upper_sheet,
)
from exthyp.types.causal_class import CausalTag, Sheet
from exthyp.types.lorentz_isometry import LorentzIsometry
from exthyp.types.minkowski_vector import MinkowskiVector
from exthyp.types.model import Model

V = MinkowskiVector.of
coordinate = st.floats(min_value=-10, max_value=10)
vectors = st.tuples(coordinate, coordinate, coordinate).map(lambda c: MinkowskiVector(c)).filter(
    lambda v: v.euclidean_norm_squared() > 1e-2)


class TestInnerProduct(unittest.TestCase):
    """Test the signature (n,1) form"""

    def test_basis(self):
        self.assertEqual(inner_product(V(1, 0, 0), V(1, 0, 0)), -1.0)
        self.assertEqual(inner_product(V(0, 1, 0), V(0, 1, 0)), 1.0)
        self.assertEqual(inner_product(V(1, 0, 0), V(0, 1, 0)), 0.0)
        self.assertEqual(inner_product(V(1, 1, 0), V(1, 1, 0)), 0.0)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            inner_product(V(1, 0), V(1, 0, 0))

    @given(vectors, vectors)
    @settings(max_examples=100, deadline=None)
    def test_symmetric(self, x, y):
        self.assertEqual(inner_product(x, y), inner_product(y, x))


class TestCausalClass(unittest.TestCase):
    """Test causal classification"""

    def test_classes(self):
        self.assertEqual(causal_class(V(1, 0, 0)).sheet, Sheet.UPPER)
        self.assertEqual(causal_class(V(-2, 0, 1)).sheet, Sheet.LOWER)
        self.assertEqual(causal_class(V(0, 1, 0)).tag, CausalTag.SPACELIKE)
        self.assertEqual(causal_class(V(1, 1, 0)).tag, CausalTag.LIGHTLIKE)
        self.assertEqual(causal_class(V(1, 0.6, 0.8)).tag, CausalTag.LIGHTLIKE)

    def test_band(self):
        """Values inside the tolerance band are lightlike."""
        self.assertTrue(causal_class(V(1, 1 + 1e-12, 0)).lightlike)
        self.assertTrue(causal_class(V(1, 1.1, 0), tolerance=1.0).lightlike)

    def test_zero_vector(self):
        with self.assertRaises(DegenerateInputError):
            causal_class(V(0, 0, 0))

    def test_negative_tolerance(self):
        with self.assertRaises(ValueError):
            causal_class(V(1, 0, 0), tolerance=-1.0)


class TestNorms(unittest.TestCase):
    """Test Lorentz and tangent norms"""

    def test_lorentz_norm(self):
        self.assertEqual(lorentz_norm(V(1, 0, 0)), 1j)
        self.assertEqual(lorentz_norm(V(0, 2, 0)), 2.0)
        self.assertEqual(lorentz_norm(V(1, 1, 0)), 0.0)
        self.assertEqual(lorentz_norm(V(0, 0, 0)), 0.0)

    @given(vectors)
    @settings(max_examples=100, deadline=None)
    def test_norm_squares_to_form(self, x):
        n = lorentz_norm(x)
        q = inner_product(x, x)
        if n != 0:
            self.assertAlmostEqual(abs(n * n - q), 0.0, delta=1e-9 * (1 + abs(q)))

    def test_model_norm_hyperbolic_point(self):
        """At a point of the hyperbolic disk the tangent norm is Riemannian."""
        p = V(1, 0, 0)
        self.assertAlmostEqual(model_norm(V(0, 3, 0), p, Model.HYPERBOLIC), 3.0)
        self.assertAlmostEqual(model_norm(V(0, 3, 0), p, Model.SPHERICAL), -3j)

    def test_model_norm_lorentzian_point(self):
        """At a point of the de Sitter band spacelike tangents are i|||x||| and timelike ones -|||x|||."""
        p = V(0, 1, 0)
        self.assertAlmostEqual(model_norm(V(0, 0, 2), p, Model.HYPERBOLIC), 2j)
        self.assertAlmostEqual(model_norm(V(2, 0, 0), p, Model.HYPERBOLIC), -2.0)
        self.assertAlmostEqual(model_norm(V(1, 0, 1), p, Model.HYPERBOLIC), 0.0)
        self.assertAlmostEqual(model_norm(V(0, 0, 2), p, Model.SPHERICAL), 2.0)
        self.assertAlmostEqual(model_norm(V(2, 0, 0), p, Model.SPHERICAL), 2j)

    def test_model_norm_errors(self):
        with self.assertRaises(DegenerateInputError):
            model_norm(V(0, 0, 1), V(1, 1, 0))
        with self.assertRaises(DegenerateInputError):
            model_norm(V(1, 1, 0), V(1, 0, 0))


class TestTangentToward(unittest.TestCase):
    """Test geodesic directions"""

    def test_example(self):
        u = tangent_toward(V(0, 1, 0), V(math.sinh(1), math.cosh(1), 0))
        self.assertAlmostEqual(u[0], math.sinh(1))
        self.assertAlmostEqual(u[1], 0.0)
        self.assertAlmostEqual(u[2], 0.0)

    def test_proportional(self):
        with self.assertRaises(DegenerateInputError):
            tangent_toward(V(1, 0, 0), V(-2, 0, 0))

    def test_ideal_base(self):
        with self.assertRaises(DegenerateInputError):
            tangent_toward(V(1, 1, 0), V(1, 0, 0))

    @given(vectors, vectors)
    @settings(max_examples=100, deadline=None)
    def test_orthogonal(self, p, q):
        """The tangent is Lorentz-orthogonal to the base point."""
        if causal_class(p).lightlike:
            return
        try:
            u = tangent_toward(p, q)
        except DegenerateInputError:
            return
        scale = math.sqrt(u.euclidean_norm_squared() * p.euclidean_norm_squared())
        self.assertLess(abs(inner_product(u, p)), 1e-9 * max(1.0, scale) * (1 + q.euclidean_norm_squared()))


class TestIsometries(unittest.TestCase):
    """Test isometry action and helpers"""

    def test_preserves_form(self):
        rng = np.random.default_rng(5)
        x, y = V(1.0, 0.3, -0.2), V(0.1, 2.0, 0.5)
        for _ in range(20):
            g = LorentzIsometry.random(rng, max_rapidity=2.0)
            gx, gy = apply_isometry(g, x), apply_isometry(g, y)
            self.assertAlmostEqual(inner_product(gx, gy), inner_product(x, y), delta=1e-8)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            apply_isometry(LorentzIsometry.identity(3), V(1, 0, 0))

    def test_lorentz_cross(self):
        a, b = V(1.0, 0.2, 0.3), V(0.4, 1.0, -0.5)
        c = lorentz_cross(a, b)
        self.assertAlmostEqual(inner_product(a, c), 0.0)
        self.assertAlmostEqual(inner_product(b, c), 0.0)
        with self.assertRaises(DimensionMismatchError):
            lorentz_cross(V(1, 0, 0, 0), V(0, 1, 0, 0))

    def test_gram_matrix(self):
        g = gram_matrix([V(1, 0, 0), V(0, 1, 0), V(0, 0, 1)])
        self.assertTrue(np.allclose(g, np.diag([-1.0, 1.0, 1.0])))

    def test_upper_sheet(self):
        self.assertEqual(upper_sheet(V(-1, 0, 0)), V(1, 0, 0))
        self.assertEqual(upper_sheet(V(0, -1, 0)), V(0, -1, 0))

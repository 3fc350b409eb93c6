# -*- coding: utf-8 -*-
import cmath
import itertools
import math
import unittest

from hypothesis import given, settings, strategies as st

from exthyp.errors import ConventionViolationError, DegenerateInputError
from exthyp.geometry.branch_algebra import (
    SignValue, arccosh_strip, as_imaginary, as_real, msgn, msgn_by_roots, sgn, sqrt_conv,
)

nonzero = st.floats(min_value=1e-3, max_value=1e3).flatmap(
    lambda m: st.sampled_from([m, -m]))


class TestSqrtConv(unittest.TestCase):
    """Test the conventional square root"""

    def test_examples(self):
        self.assertEqual(sqrt_conv(4.0), 2.0)
        self.assertEqual(sqrt_conv(-4.0), 2j)
        self.assertEqual(sqrt_conv(0.0), 0.0)

    @given(st.floats(min_value=-1e6, max_value=1e6))
    @settings(max_examples=200, deadline=None)
    def test_square(self, a):
        """sqrt_conv(a)^2 = a and the root is never negative."""
        root = sqrt_conv(a)
        self.assertAlmostEqual(abs(root * root - a), 0.0, delta=1e-9 * max(1.0, abs(a)))
        self.assertGreaterEqual(root.real, 0.0)
        self.assertGreaterEqual(root.imag, 0.0)


class TestSgn(unittest.TestCase):
    """Test sgn on the real and imaginary axes"""

    def test_axes(self):
        self.assertEqual(sgn(3.0), SignValue.POSITIVE)
        self.assertEqual(sgn(-3.0), SignValue.NEGATIVE)
        self.assertEqual(sgn(2j), SignValue.POSITIVE)
        self.assertEqual(sgn(-2j), SignValue.NEGATIVE)

    def test_not_multiplicative(self):
        """i * i = -1 is negative although both factors are positive."""
        self.assertEqual(sgn(1j * 1j), SignValue.NEGATIVE)
        self.assertEqual(sgn(1j) * sgn(1j), 1)
        self.assertNotEqual(sgn(1j * 1j), sgn(1j) * sgn(1j))

    def test_zero(self):
        with self.assertRaises(DegenerateInputError):
            sgn(0.0)

    def test_off_axis(self):
        """A genuinely complex argument is a convention violation."""
        with self.assertRaises(ConventionViolationError):
            sgn(1 + 1j)

    def test_near_axis(self):
        """Rounding noise on the minor axis is tolerated."""
        self.assertEqual(sgn(complex(-1.0, 1e-15)), SignValue.NEGATIVE)


class TestMsgn(unittest.TestCase):
    """Test the many-element sign"""

    def test_examples(self):
        self.assertEqual(msgn(1, 1), 1)
        self.assertEqual(msgn(-1, -1), -1)
        self.assertEqual(msgn(-1, -1, -1), -1)
        self.assertEqual(msgn(-1, -1, -1, -1), 1)
        self.assertEqual(msgn(-2.5), 1)

    def test_zero_argument(self):
        with self.assertRaises(DegenerateInputError):
            msgn(1.0, 0.0)

    def test_empty(self):
        with self.assertRaises(ValueError):
            msgn()

    def test_closed_form_matches_roots(self):
        """(-1)^floor(alpha/2) equals prod(sqrt a_i) / sqrt(prod a_i) for every sign pattern."""
        for k in range(1, 7):
            for signs in itertools.product((1.0, -1.0), repeat=k):
                self.assertEqual(msgn(*signs), msgn_by_roots(*signs), signs)

    @given(st.lists(nonzero, min_size=1, max_size=6))
    @settings(max_examples=200, deadline=None)
    def test_magnitudes_irrelevant(self, values):
        """Only the signs of the arguments matter."""
        self.assertEqual(msgn(*values), msgn(*(math.copysign(1.0, v) for v in values)))
        self.assertEqual(msgn(*values), msgn_by_roots(*values))

    def test_lemma_identities(self):
        """msgn(-1, -X) = -sgn(X); two arguments give -1 only when both are negative."""
        for x in (2.0, -2.0):
            self.assertEqual(msgn(-1, -x), -sgn(x))
        self.assertEqual(msgn(2.0, -3.0), 1)
        self.assertEqual(msgn(-2.0, -3.0), -1)


class TestArccoshStrip(unittest.TestCase):
    """Test the cosh preimage"""

    def test_real_branch(self):
        self.assertAlmostEqual(arccosh_strip(math.cosh(1.0)), 1.0)
        self.assertAlmostEqual(arccosh_strip(1.0), 0.0)

    def test_negative(self):
        """cosh^{-1}(-cosh a) = a + pi i."""
        z = arccosh_strip(-math.cosh(0.7))
        self.assertAlmostEqual(z.real, 0.7)
        self.assertAlmostEqual(z.imag, math.pi)

    def test_inside_unit_interval(self):
        """cosh^{-1}(cos t) = t i for t in [0, pi]."""
        for t in (0.1, 1.0, 2.0, 3.0):
            z = arccosh_strip(math.cos(t))
            self.assertAlmostEqual(z.real, 0.0)
            self.assertAlmostEqual(z.imag, t)

    @given(st.floats(min_value=-50, max_value=50), st.floats(min_value=0, max_value=50))
    @settings(max_examples=200, deadline=None)
    def test_inverse(self, re, im):
        """cosh(arccosh_strip(q)) = q, with Im z in [0, pi] on the upper half plane."""
        q = complex(re, im)
        z = arccosh_strip(q)
        self.assertAlmostEqual(abs(cmath.cosh(z) - q), 0.0, delta=1e-9 * (1 + abs(q)))
        self.assertGreaterEqual(z.real, -1e-12)
        self.assertGreaterEqual(z.imag, -1e-12)
        self.assertLessEqual(z.imag, math.pi + 1e-12)


class TestAxisCoercion(unittest.TestCase):

    def test_as_real(self):
        self.assertEqual(as_real(complex(2.0, 1e-14)), 2.0)
        with self.assertRaises(ConventionViolationError):
            as_real(complex(2.0, 0.5), 'side')

    def test_as_imaginary(self):
        self.assertEqual(as_imaginary(complex(1e-14, -2.0)), -2.0)
        with self.assertRaises(ConventionViolationError):
            as_imaginary(1.0)

# -*- coding: utf-8 -*-

# Causal classification band, scaled by max(1, |x|^2_euclidean)
CAUSAL_TOLERANCE = 1e-9

# A value counts as real (imaginary) when its minor component is below this fraction of its modulus
SGN_TOLERANCE = 1e-9

# Relative band for <u, p> == 0 and for the D == 0 (tangent line) test
TANGENT_TOLERANCE = 1e-9

# max |M^T S M - S| accepted for a Lorentz isometry
ISOMETRY_TOLERANCE = 1e-12

# Default residual threshold for law and identity checks
LAW_TOLERANCE = 1e-8

# Threshold used when comparing the hyperbolic and spherical forms of a law
CORRESPONDENCE_TOLERANCE = 1e-10

# Suite thresholds
FORM_TOLERANCE = 1e-12
BRANCH_TOLERANCE = 1e-9
CONTOUR_LIMIT_TOLERANCE = 1e-9
QUADRATURE_TOLERANCE = 1e-8
VOLUME_TOLERANCE = 1e-4
DISTANCE_IDENTITY_TOLERANCE = 1e-9
CANONICAL_TOLERANCE = 1e-12
RIGHT_TRIANGLE_TOLERANCE = 1e-10
INVARIANCE_TOLERANCE = 1e-7
# S2 at sides 40 falls short of pi by about 1.2e-8
AREA_LIMIT_TOLERANCE = 1e-7

# Contour integration
DEFAULT_DETOUR = 1e-2
QUAD_EPSABS = 1e-12
QUAD_EPSREL = 1e-12
QUAD_LIMIT = 400
# Error estimate still accepted when quad warns
QUAD_ACCEPT = 1e-9

# Rejection sampling
SAMPLE_RETRIES = 200
SAMPLE_LOW = 0.1
SAMPLE_HIGH = 2.0
MAX_RAPIDITY = 5.0

# Output
SCHEMA = 'exthyp/1'
SIGNIFICANT_DIGITS = 17
TOLERANCE_ENV = 'EXTHYP_TOL'

# Law denominators below this modulus switch to the cross-multiplied residual
ZERO_DIVISOR = 1e-9

# Angles within this distance of pi/2 count as right angles
RIGHT_ANGLE_TOLERANCE = 1e-6

# Sampled triangles keep every sinh, sine, discriminant and dual norm above this (relative) size
SAMPLE_MARGIN = 0.05

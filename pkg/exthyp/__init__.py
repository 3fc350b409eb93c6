# -*- coding: utf-8 -*-
"""
Extended hyperbolic and de Sitter trigonometry.

Complex-valued distances, angles, duals, areas and volumes on the extended
hyperbolic sphere and the extended de Sitter sphere, plus numerical
verification of the generalized trigonometric laws.
"""

__version__ = '0.1.0'

__author__ = 'akm'

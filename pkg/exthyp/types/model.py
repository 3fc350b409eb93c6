# -*- coding: utf-8 -*-
from enum import Enum


class Model(Enum):
    """
    The two analytic continuations carried on the unit sphere.

    HYPERBOLIC is the extended hyperbolic sphere (curvature -1); SPHERICAL is
    the extended de Sitter sphere, the same sphere with the metric negated.
    """
    HYPERBOLIC = 'H'
    SPHERICAL = 'S'

    @classmethod
    def parse(cls, text: str) -> 'Model':
        key = text.strip().upper()
        aliases = {'H': cls.HYPERBOLIC, 'HYPERBOLIC': cls.HYPERBOLIC, 'HYPERBOLICSPHERE': cls.HYPERBOLIC,
                   'S': cls.SPHERICAL, 'SPHERICAL': cls.SPHERICAL, 'SPHERICALSPHERE': cls.SPHERICAL}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f'Unknown model {text!r}, expected H or S') from None

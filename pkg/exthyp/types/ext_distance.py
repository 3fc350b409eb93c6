# -*- coding: utf-8 -*-
from __future__ import annotations

import cmath
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Union

from exthyp.types.complex_measure import ComplexMeasure, measure


class DistanceCase(Enum):
    """Branch of the distance table that produced a value."""
    LIGHTLIKE_PAIR = 'lightlike-pair'
    ONE_LIGHTLIKE = 'one-lightlike'
    TIMELIKE_PAIR = 'timelike-pair'
    TIMELIKE_SPACELIKE = 'timelike-spacelike'
    SPACELIKE_SECANT = 'spacelike-secant'
    SPACELIKE_DISJOINT = 'spacelike-disjoint'
    SPACELIKE_TANGENT = 'spacelike-tangent'


@dataclass(frozen=True)
class ExtDistance:
    """
    A distance on the extended sphere, or the Infinite marker (value None).

    Finite hyperbolic values have imaginary part in [0, pi]; the real part may
    be negative.
    """
    value: Optional[ComplexMeasure]
    case: DistanceCase

    @classmethod
    def infinite(cls, case: DistanceCase) -> ExtDistance:
        return cls(None, case)

    @classmethod
    def finite(cls, value: Union[complex, float], case: DistanceCase) -> ExtDistance:
        return cls(measure(value), case)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def cosh(self) -> complex:
        return cmath.cosh(self._require())

    def sinh(self) -> complex:
        return cmath.sinh(self._require())

    def scaled(self, factor: complex) -> ExtDistance:
        """factor * value, Infinite stays Infinite."""
        if self.value is None:
            return self
        return ExtDistance(measure(factor * self.value), self.case)

    def _require(self) -> ComplexMeasure:
        if self.value is None:
            raise ValueError(f'Infinite distance ({self.case.value}) has no finite value')
        return self.value

    def to_json(self) -> Union[str, Dict[str, float]]:
        return 'inf' if self.value is None else self.value.to_json()

    def __str__(self):
        if self.value is None:
            return 'inf'
        return f'{self.value.real:.12g}{self.value.imag:+.12g}i'

# -*- coding: utf-8 -*-
from __future__ import annotations

import cmath
import math
from typing import Dict, Union

from exthyp.constants.tolerances import SGN_TOLERANCE


class ComplexMeasure(complex):
    """
    A complex length, angle, norm, area or volume.

    Behaves exactly like ``complex`` in arithmetic (results are plain
    ``complex``); adds the real/imaginary tests used by the sign conventions
    and the JSON form ``{"re": r, "im": s}``.
    """

    __slots__ = ()

    def __new__(cls, real: Union[complex, float] = 0.0, imag: float = 0.0):
        if isinstance(real, complex):
            value = complex(real.real, real.imag + imag)
        else:
            value = complex(real, imag)
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise ValueError(f'ComplexMeasure must be finite, got {value!r}')
        return super().__new__(cls, value.real, value.imag)

    @property
    def re(self) -> float:
        return self.real

    @property
    def im(self) -> float:
        return self.imag

    def is_real(self, tolerance: float = SGN_TOLERANCE) -> bool:
        return abs(self.imag) <= tolerance * abs(self)

    def is_imaginary(self, tolerance: float = SGN_TOLERANCE) -> bool:
        return abs(self.real) <= tolerance * abs(self)

    def conjugate(self) -> ComplexMeasure:
        return ComplexMeasure(self.real, -self.imag)

    def phase(self) -> float:
        return cmath.phase(self)

    def to_json(self) -> Dict[str, float]:
        return {'re': self.real, 'im': self.imag}

    @classmethod
    def from_json(cls, data: Dict[str, float]) -> ComplexMeasure:
        return cls(float(data['re']), float(data['im']))

    def __repr__(self):
        return f'<ComplexMeasure({self.real!r}, {self.imag!r})>'


def measure(value: Union[complex, float]) -> ComplexMeasure:
    """
    Wrap a plain number, scrubbing ``-0.0`` so printed output is stable.
    """
    value = complex(value)
    return ComplexMeasure(value.real + 0.0, value.imag + 0.0)

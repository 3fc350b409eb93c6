# -*- coding: utf-8 -*-
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Union

from scipy.special import gamma

from exthyp.constants.tolerances import DEFAULT_DETOUR, QUAD_LIMIT
from exthyp.errors import DegenerateInputError

Integrand = Callable[[complex], complex]


class ContourOrientation(Enum):
    """Side of the pole r = 1 the detour passes on."""
    CLOCKWISE = 'clockwise'
    COUNTERCLOCKWISE = 'counterclockwise'

    @classmethod
    def parse(cls, text: str) -> ContourOrientation:
        key = text.strip().lower().replace('-', '').replace('_', '')
        for member in cls:
            if member.value == key or member.name.lower() == key:
                return member
        if key in ('cw',):
            return cls.CLOCKWISE
        if key in ('ccw', 'anticlockwise'):
            return cls.COUNTERCLOCKWISE
        raise ValueError(f'Unknown contour orientation {text!r}')


@dataclass(frozen=True)
class ContourSpec:
    """
    A path along the real axis from a to b that leaves the pole at 1 by a
    semicircle of radius delta, 1 + delta e^{i theta} with theta from pi to 0.

    b may be ``math.inf``. ``samples_per_segment`` bounds the adaptive
    subdivisions spent on each piece of the path.
    """
    a: float
    b: float
    delta: float = DEFAULT_DETOUR
    samples_per_segment: int = QUAD_LIMIT
    orientation: ContourOrientation = ContourOrientation.CLOCKWISE

    def __post_init__(self):
        if math.isnan(self.a) or math.isnan(self.b) or not math.isfinite(self.a):
            raise ValueError(f'Contour ends must be numbers, got {self.a}, {self.b}')
        if self.a <= -1.0:
            raise ValueError(f'Contour start {self.a} must lie right of the pole at -1')
        if self.b <= self.a:
            raise ValueError(f'Contour must run left to right, got {self.a} -> {self.b}')
        if self.a == 1.0 or self.b == 1.0:
            raise DegenerateInputError('Contour end on the pole r = 1')
        if not self.delta > 0:
            raise ValueError(f'Detour radius must be > 0, got {self.delta}')
        if self.samples_per_segment < 1:
            raise ValueError(f'samples_per_segment must be >= 1, got {self.samples_per_segment}')
        if self.crosses_pole:
            gap = min(1.0 - self.a, self.b - 1.0)
            if self.delta >= gap / 2:
                raise ValueError(f'Detour radius {self.delta} must be below half the gap {gap} to the pole')

    @property
    def crosses_pole(self) -> bool:
        return self.a < 1.0 < self.b

    def halved(self) -> ContourSpec:
        return ContourSpec(self.a, self.b, self.delta / 2, self.samples_per_segment, self.orientation)


def sphere_volume(n: int) -> float:
    """Euclidean volume of the unit sphere S^n, 2 pi^{(n+1)/2} / Gamma((n+1)/2)."""
    if n < 0:
        raise ValueError(f'Sphere dimension must be >= 0, got {n}')
    return 2.0 * math.pi ** ((n + 1) / 2) / gamma((n + 1) / 2)


@dataclass(frozen=True)
class RadialProfile:
    """
    Angular measure F(r) of the radial slice of a rotationally described
    domain in the n-dimensional model; F must accept complex r.
    """
    n: int
    F: Integrand = field(compare=False)
    name: str = 'profile'

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f'Radial profile dimension must be >= 1, got {self.n}')

    @classmethod
    def constant(cls, n: int, value: Union[float, complex], name: str = '') -> RadialProfile:
        return cls(n, lambda r: value, name or f'constant {value}')

    @classmethod
    def full_sphere(cls, n: int) -> RadialProfile:
        """F = vol(S^{n-1}): every direction, the whole hemisphere."""
        return cls.constant(n, sphere_volume(n - 1), f'vol(S^{n - 1})')

# -*- coding: utf-8 -*-
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from exthyp.errors import DimensionMismatchError


@dataclass(frozen=True)
class MinkowskiVector:
    """
    A vector of R^{n,1}, coordinates (x_0, x_1, ..., x_n).

    x_0 is the time coordinate. Instances are immutable; arithmetic returns
    new vectors and refuses to mix dimensions.
    """
    coords: Tuple[float, ...]

    def __post_init__(self):
        coords = tuple(float(c) for c in self.coords)
        if len(coords) < 2:
            raise DimensionMismatchError(f'R^{{n,1}} needs n >= 1, got {len(coords)} coordinates')
        if not all(math.isfinite(c) for c in coords):
            raise ValueError(f'Non-finite coordinate in {coords}')
        object.__setattr__(self, 'coords', coords)

    @classmethod
    def of(cls, *coords: float) -> MinkowskiVector:
        return cls(tuple(coords))

    @classmethod
    def from_array(cls, values: Union[np.ndarray, Sequence[float]]) -> MinkowskiVector:
        return cls(tuple(np.asarray(values, dtype=float).ravel()))

    @property
    def dimension(self) -> int:
        """n, the dimension of the model sphere."""
        return len(self.coords) - 1

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coords, dtype=float)

    @property
    def time(self) -> float:
        return self.coords[0]

    def euclidean_norm_squared(self) -> float:
        return math.fsum(c * c for c in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def check_dimension(self, other: MinkowskiVector):
        if self.dimension != other.dimension:
            raise DimensionMismatchError(
                f'Dimension mismatch: R^{{{self.dimension},1}} vs R^{{{other.dimension},1}}')

    def embed(self, dimension: int) -> MinkowskiVector:
        """Pad with zero space coordinates into R^{dimension,1}."""
        if dimension < self.dimension:
            raise DimensionMismatchError(f'Cannot embed R^{{{self.dimension},1}} into R^{{{dimension},1}}')
        return MinkowskiVector(self.coords + (0.0,) * (dimension - self.dimension))

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, item):
        return self.coords[item]

    def __neg__(self) -> MinkowskiVector:
        return MinkowskiVector(tuple(-c for c in self.coords))

    def __add__(self, other: MinkowskiVector) -> MinkowskiVector:
        self.check_dimension(other)
        return MinkowskiVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: MinkowskiVector) -> MinkowskiVector:
        self.check_dimension(other)
        return MinkowskiVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, scalar: float) -> MinkowskiVector:
        return MinkowskiVector(tuple(scalar * c for c in self.coords))

    __rmul__ = __mul__

    def to_json(self) -> List[float]:
        return list(self.coords)

    def __repr__(self):
        return f'<MinkowskiVector{self.coords}>'


def as_vector(value: Union[MinkowskiVector, Iterable[float], np.ndarray]) -> MinkowskiVector:
    if isinstance(value, MinkowskiVector):
        return value
    if not isinstance(value, (np.ndarray, list, tuple)):
        value = list(value)
    return MinkowskiVector.from_array(value)

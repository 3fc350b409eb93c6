# -*- coding: utf-8 -*-
from __future__ import annotations

import math

import numpy as np

from exthyp.constants.tolerances import ISOMETRY_TOLERANCE, MAX_RAPIDITY
from exthyp.errors import DimensionMismatchError


def signature_matrix(dimension: int) -> np.ndarray:
    """S = diag(-1, 1, ..., 1) for R^{dimension,1}."""
    s = np.eye(dimension + 1)
    s[0, 0] = -1.0
    return s


class LorentzIsometry:
    """
    An element of O(n,1): a real (n+1)x(n+1) matrix M with M^T S M = S.

    The defect |M^T S M - S|_max is checked at construction against
    ISOMETRY_TOLERANCE scaled by the squared size of the entries, so long
    products of boosts are not rejected for rounding alone.
    """

    __slots__ = ('_matrix',)

    def __init__(self, matrix, tolerance: float = ISOMETRY_TOLERANCE):
        m = np.array(matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 2:
            raise DimensionMismatchError(f'Isometry must be square of size >= 2, got shape {m.shape}')
        s = signature_matrix(m.shape[0] - 1)
        defect = np.max(np.abs(m.T @ s @ m - s))
        scale = max(1.0, float(np.max(np.abs(m))) ** 2)
        if defect > tolerance * scale:
            raise ValueError(f'Matrix is not Lorentzian: |M^T S M - S|_max = {defect:.3e}')
        m.setflags(write=False)
        self._matrix = m

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def dimension(self) -> int:
        return self._matrix.shape[0] - 1

    @property
    def orthochronous(self) -> bool:
        """Preserves the two sheets of timelike vectors."""
        return self._matrix[0, 0] > 0

    @property
    def proper(self) -> bool:
        return np.linalg.det(self._matrix) > 0

    def __matmul__(self, other: LorentzIsometry) -> LorentzIsometry:
        if self.dimension != other.dimension:
            raise DimensionMismatchError(f'Cannot compose O({self.dimension},1) with O({other.dimension},1)')
        return LorentzIsometry(self._matrix @ other._matrix)

    def inverse(self) -> LorentzIsometry:
        s = signature_matrix(self.dimension)
        return LorentzIsometry(s @ self._matrix.T @ s)

    @classmethod
    def identity(cls, dimension: int) -> LorentzIsometry:
        return cls(np.eye(dimension + 1))

    @classmethod
    def boost(cls, rapidity: float, axis: int = 1, dimension: int = 2) -> LorentzIsometry:
        """Hyperbolic rotation in the (x_0, x_axis) plane."""
        if not 1 <= axis <= dimension:
            raise ValueError(f'Boost axis {axis} outside 1..{dimension}')
        m = np.eye(dimension + 1)
        ch, sh = math.cosh(rapidity), math.sinh(rapidity)
        m[0, 0] = m[axis, axis] = ch
        m[0, axis] = m[axis, 0] = sh
        return cls(m)

    @classmethod
    def rotation(cls, angle: float, i: int = 1, j: int = 2, dimension: int = 2) -> LorentzIsometry:
        """Euclidean rotation in the (x_i, x_j) plane, i, j >= 1."""
        if not (1 <= i <= dimension and 1 <= j <= dimension and i != j):
            raise ValueError(f'Rotation plane ({i}, {j}) invalid for R^{{{dimension},1}}')
        m = np.eye(dimension + 1)
        c, s = math.cos(angle), math.sin(angle)
        m[i, i] = m[j, j] = c
        m[i, j] = -s
        m[j, i] = s
        return cls(m)

    @classmethod
    def reflection(cls, axis: int, dimension: int = 2) -> LorentzIsometry:
        """x_axis -> -x_axis; orthochronous when axis >= 1."""
        m = np.eye(dimension + 1)
        m[axis, axis] = -1.0
        return cls(m)

    @classmethod
    def random(cls, rng: np.random.Generator, dimension: int = 2,
               max_rapidity: float = MAX_RAPIDITY, orthochronous: bool = True) -> LorentzIsometry:
        """
        Random element of the identity component: rotations around a single
        boost along x_1. Optionally composed with time reversal.
        """
        result = cls.identity(dimension)
        for i in range(1, dimension + 1):
            for j in range(i + 1, dimension + 1):
                result = cls.rotation(rng.uniform(0, 2 * math.pi), i, j, dimension) @ result
        result = cls.boost(rng.uniform(-max_rapidity, max_rapidity), 1, dimension) @ result
        for i in range(1, dimension + 1):
            for j in range(i + 1, dimension + 1):
                result = cls.rotation(rng.uniform(0, 2 * math.pi), i, j, dimension) @ result
        if not orthochronous:
            result = cls.reflection(0, dimension) @ result
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, LorentzIsometry):
            return NotImplemented
        return self._matrix.shape == other._matrix.shape and np.allclose(self._matrix, other._matrix)

    def __repr__(self):
        return f'<LorentzIsometry({self._matrix.tolist()})>'


# -*- coding: utf-8 -*-
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from exthyp.errors import DegenerateInputError
from exthyp.types.complex_measure import ComplexMeasure
from exthyp.types.ext_distance import DistanceCase
from exthyp.types.minkowski_vector import MinkowskiVector

Triple = Tuple[ComplexMeasure, ComplexMeasure, ComplexMeasure]
PartialTriple = Tuple[Optional[ComplexMeasure], Optional[ComplexMeasure], Optional[ComplexMeasure]]


@dataclass(frozen=True)
class DualPair:
    """
    A vertex with its algebraic dual w' (<v_i, w'_j> = delta_ij) and its
    geometric dual sgn(-|w'|^2) w'.
    """
    primal: MinkowskiVector
    algebraic_dual: MinkowskiVector
    geometric_dual: MinkowskiVector

    def to_json(self) -> Dict[str, list]:
        return {
            'primal': self.primal.to_json(),
            'algebraic_dual': self.algebraic_dual.to_json(),
            'geometric_dual': self.geometric_dual.to_json(),
        }


@dataclass(frozen=True)
class ExtTriangle:
    """
    A measured triangle on the extended sphere in R^{2,1}.

    Sides follow the usual lettering: a = d(v2, v3), b = d(v1, v3),
    c = d(v1, v2); angle A sits at v1, B at v2, C at v3. The dual fields
    describe the geometric dual triangle and are None when a dual vertex is
    lightlike.

    ``degenerate`` names the sides lying on a line tangent to the boundary
    or through an ideal vertex, and the angles that do not exist there. An
    infinite side or a missing angle is None.
    """
    vertices: Tuple[MinkowskiVector, MinkowskiVector, MinkowskiVector]
    sides: PartialTriple
    side_cases: Tuple[DistanceCase, DistanceCase, DistanceCase]
    angles: PartialTriple
    norms: Triple
    duals: Tuple[DualPair, DualPair, DualPair]
    dual_norms: Triple
    gram_determinant: float
    stratum: str
    dual_sides: Optional[Triple] = None
    dual_angles: Optional[Triple] = None
    degenerate: Tuple[str, ...] = ()

    @property
    def norms_squared(self) -> Tuple[float, float, float]:
        """<v_i, v_i>, real by construction."""
        return tuple((n * n).real for n in self.norms)

    @property
    def dual_norms_squared(self) -> Tuple[float, float, float]:
        return tuple((n * n).real for n in self.dual_norms)

    @property
    def timelike_count(self) -> int:
        return sum(1 for q in self.norms_squared if q < 0)

    @property
    def has_dual(self) -> bool:
        return self.dual_sides is not None

    @property
    def is_degenerate(self) -> bool:
        return bool(self.degenerate)

    def require_measured(self, what: str = 'This check'):
        """:raises DegenerateInputError: some side or angle is flagged degenerate"""
        if self.degenerate:
            raise DegenerateInputError(f'{what} needs every side and angle; {", ".join(self.degenerate)} '
                                       f'degenerate in {self.stratum}')

    def to_json(self) -> Dict[str, object]:
        def triple(values):
            return None if values is None else [None if v is None else v.to_json() for v in values]
        return {
            'vertices': [v.to_json() for v in self.vertices],
            'sides': triple(self.sides),
            'side_cases': [c.value for c in self.side_cases],
            'angles': triple(self.angles),
            'norms': triple(self.norms),
            'dual_norms': triple(self.dual_norms),
            'dual_sides': triple(self.dual_sides),
            'dual_angles': triple(self.dual_angles),
            'gram_determinant': self.gram_determinant,
            'stratum': self.stratum,
            'degenerate': list(self.degenerate),
        }

# -*- coding: utf-8 -*-
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional

from exthyp.constants.tolerances import LAW_TOLERANCE
from exthyp.misc.serialize import plain
from exthyp.types.complex_measure import ComplexMeasure, measure


class CheckRow(NamedTuple):
    """One line of a verification stream: the worst residual of a check against its tolerance."""
    suite: str
    case: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


@dataclass
class LawReport:
    """
    Residuals of a batch of law checks.

    Each residual is a finite nonnegative real. Checks whose law divides by a
    vanishing quantity are listed in ``degenerate`` and carry the
    cross-multiplied residual instead.
    """
    stratum: str
    residuals: Dict[str, float] = field(default_factory=dict)
    values: Dict[str, object] = field(default_factory=dict)
    degenerate: List[str] = field(default_factory=list)

    def record(self, name: str, residual: float, degenerate: bool = False):
        residual = float(residual)
        if not math.isfinite(residual) or residual < 0:
            raise ValueError(f'Residual {name} must be finite and >= 0, got {residual}')
        self.residuals[name] = max(residual, self.residuals.get(name, 0.0))
        if degenerate and name not in self.degenerate:
            self.degenerate.append(name)

    def merge(self, other: LawReport) -> LawReport:
        """Fold another report in, keeping the worst residual per check."""
        for name, residual in other.residuals.items():
            self.record(name, residual, name in other.degenerate)
        return self

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values(), default=0.0)

    def failures(self, tolerance: float = LAW_TOLERANCE) -> Dict[str, float]:
        return {name: r for name, r in self.residuals.items() if r > tolerance}

    def passed(self, tolerance: float = LAW_TOLERANCE) -> bool:
        return not self.failures(tolerance)

    def check_rows(self, suite: str, tolerance: float = LAW_TOLERANCE, prefix: str = '') -> List[CheckRow]:
        return [CheckRow(suite, prefix + name, r, tolerance) for name, r in self.residuals.items()]

    def to_json(self) -> Dict[str, object]:
        return {
            'stratum': self.stratum,
            'residuals': dict(self.residuals),
            'degenerate': list(self.degenerate),
            'values': plain(self.values),
        }


@dataclass
class PolygonReport:
    """
    Worst residual per identity over the samples of one polygon family,
    with the inequality outcomes and the parameters of the worst sample.
    """
    family: str
    samples: int = 0
    mirrored: int = 0
    residuals: Dict[str, float] = field(default_factory=dict)
    inequalities: Dict[str, bool] = field(default_factory=dict)
    parameters: Dict[str, object] = field(default_factory=dict)
    worst: float = 0.0

    def record(self, name: str, residual: float):
        residual = float(residual)
        if not math.isfinite(residual):
            residual = math.inf
        self.residuals[name] = max(residual, self.residuals.get(name, 0.0))

    def record_inequality(self, name: str, holds: bool):
        self.inequalities[name] = self.inequalities.get(name, True) and bool(holds)

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values(), default=0.0)

    def passed(self, tolerance: float = LAW_TOLERANCE) -> bool:
        return self.max_residual <= tolerance and all(self.inequalities.values())

    def check_rows(self, suite: str, tolerance: float = LAW_TOLERANCE) -> List[CheckRow]:
        """Identity residuals, then each inequality as 0 (held on every sample) or 1 against 0."""
        rows = [CheckRow(suite, f'{self.family}/{name}', r, tolerance) for name, r in self.residuals.items()]
        rows += [CheckRow(suite, f'{self.family}/{name}', 0.0 if holds else 1.0, 0.0)
                 for name, holds in self.inequalities.items()]
        return rows

    def to_json(self) -> Dict[str, object]:
        return {
            'family': self.family,
            'samples': self.samples,
            'mirrored': self.mirrored,
            'residuals': dict(self.residuals),
            'inequalities': dict(self.inequalities),
            'parameters': plain(self.parameters),
        }


@dataclass(frozen=True)
class AreaResult:
    """
    Area of one triangle three ways: angle defect, the cosine-law composite
    S1 and the half-perimeter product S2, with p = (a + b + c) / 2.
    """
    s_defect: ComplexMeasure
    s_sides: ComplexMeasure
    s_cosine: ComplexMeasure
    p: ComplexMeasure
    model: str = 'H'

    @property
    def difference(self) -> ComplexMeasure:
        return measure(self.s_defect - self.s_sides)

    @property
    def wrapped_difference(self) -> ComplexMeasure:
        """difference with its real part reduced into [-2 pi, 2 pi)."""
        d = complex(self.difference)
        period = 4 * math.pi
        real = d.real - period * math.floor(d.real / period + 0.5)
        return measure(complex(real, d.imag))

    def agrees(self, tolerance: float = LAW_TOLERANCE) -> bool:
        return abs(self.difference) <= tolerance

    def to_json(self) -> Dict[str, object]:
        return {
            'model': self.model,
            's_defect': self.s_defect.to_json(),
            's_sides': self.s_sides.to_json(),
            's_cosine': self.s_cosine.to_json(),
            'p': self.p.to_json(),
            'difference': self.difference.to_json(),
        }


def worst_of(reports: List[LawReport], stratum: Optional[str] = None) -> LawReport:
    """Merge reports into one carrying the worst residual of each check."""
    merged = LawReport(stratum if stratum is not None else (reports[0].stratum if reports else ''))
    for report in reports:
        merged.merge(report)
    return merged

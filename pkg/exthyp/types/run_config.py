# -*- coding: utf-8 -*-
from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from typing import Optional, Tuple

from exthyp.constants.tolerances import DEFAULT_DETOUR, LAW_TOLERANCE, TOLERANCE_ENV

logger = logging.getLogger(__name__)

FORMATS = ('json', 'csv')


def default_tolerance() -> float:
    """LAW_TOLERANCE, or the value of the EXTHYP_TOL environment variable."""
    text = os.environ.get(TOLERANCE_ENV, '').strip()
    if not text:
        return LAW_TOLERANCE
    try:
        value = float(text)
    except ValueError:
        raise ValueError(f'{TOLERANCE_ENV}={text!r} is not a number') from None
    logger.debug('Tolerance %g from %s', value, TOLERANCE_ENV)
    return value


@dataclass(frozen=True)
class RunConfig:
    """
    One command line invocation.

    ``samples`` None means each suite runs its own default batch size;
    ``tolerance`` governs the law, polygon and area checks, while the
    quadrature, distance and correspondence checks keep their fixed bounds.
    """
    command: str
    action: Optional[str] = None
    vectors: Tuple[str, ...] = ()
    family: Optional[str] = None
    sides: Tuple[str, ...] = ()
    model: str = 'H'
    b: Optional[float] = None
    n: int = 2
    verify: bool = False
    tolerance: float = field(default_factory=default_tolerance)
    samples: Optional[int] = None
    seed: int = 0
    output_format: str = 'json'
    delta: float = DEFAULT_DETOUR
    log_level: str = 'WARNING'

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError(f'Tolerance must be > 0, got {self.tolerance}')
        if self.samples is not None and self.samples < 1:
            raise ValueError(f'Sample count must be >= 1, got {self.samples}')
        if not self.delta > 0:
            raise ValueError(f'Contour detour must be > 0, got {self.delta}')
        if self.output_format not in FORMATS:
            raise ValueError(f'Output format must be one of {FORMATS}, got {self.output_format!r}')

    def sample_count(self, default: int) -> int:
        return default if self.samples is None else self.samples

# -*- coding: utf-8 -*-
"""
JSON and CSV report streams.

JSON floats are written with ``repr``, the shortest string that reads back
to the same double, so identical runs give identical bytes. CSV residuals
use 17 significant digits.
"""
import csv
import json
import math
from enum import Enum
from typing import Any, Dict, Iterable, TextIO

import numpy as np

from exthyp.constants.tolerances import SCHEMA, SIGNIFICANT_DIGITS

CSV_COLUMNS = ('suite', 'case', 'residual', 'tolerance', 'pass')


def plain(value: Any) -> Any:
    """Reduce reports, measures, vectors and numpy values to JSON types."""
    if hasattr(value, 'to_json'):
        return plain(value.to_json())
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, np.generic):
        return plain(value.item())
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return value if math.isfinite(value) else str(value)
    if isinstance(value, complex):
        return {'re': plain(value.real + 0.0), 'im': plain(value.imag + 0.0)}
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [plain(v) for v in value]
    raise TypeError(f'Cannot serialize {type(value).__name__}: {value!r}')


def document(payload: Dict[str, Any]) -> Dict[str, Any]:
    """The payload under the versioned schema tag."""
    return {'schema': SCHEMA, **plain(payload)}


def dumps(payload: Dict[str, Any]) -> str:
    return json.dumps(document(payload), indent=2, allow_nan=False)


def format_number(value: float) -> str:
    return f'{value:.{SIGNIFICANT_DIGITS}g}'


def write_csv(rows: Iterable, stream: TextIO):
    """Write CheckRows as (suite, case, residual, tolerance, pass)."""
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([row.suite, row.case, format_number(row.residual), format_number(row.tolerance),
                         'true' if row.passed else 'false'])

# -*- coding: utf-8 -*-
import logging
from typing import Tuple, Union

from exthyp.types.complex_measure import ComplexMeasure, measure
from exthyp.types.minkowski_vector import MinkowskiVector

logger = logging.getLogger(__name__)


def parse_vector(text: str) -> MinkowskiVector:
    """
    Parse comma separated reals, '1,0,0', into a vector.

    :param text: Coordinates x_0,...,x_n
    :return: The vector
    """
    parts = [p.strip() for p in text.split(',')]
    if not all(parts):
        raise ValueError(f'Empty coordinate in {text!r}')
    try:
        return MinkowskiVector(tuple(float(p) for p in parts))
    except ValueError as e:
        raise ValueError(f'Bad vector literal {text!r}: {e}') from None


def _split_imaginary(body: str) -> Tuple[str, str]:
    # last sign that is not part of an exponent separates the parts
    for k in range(len(body) - 1, 0, -1):
        if body[k] in '+-' and body[k - 1] not in 'eE':
            return body[:k], body[k:]
    return '', body


def parse_complex(text: str) -> ComplexMeasure:
    """
    Parse 're+imi' literals: '1.5+0.5i', '-2', '0.5i', 'i', '1-i'.
    """
    compact = text.replace(' ', '')
    try:
        if not compact.endswith('i'):
            return measure(float(compact))
        real, imag = _split_imaginary(compact[:-1])
        if imag in ('', '+', '-'):
            imag += '1'
        return measure(complex(float(real) if real else 0.0, float(imag)))
    except ValueError:
        raise ValueError(f'Bad complex literal {text!r}') from None


def relative_residual(left: Union[complex, float], right: Union[complex, float]) -> float:
    """|L - R| / (1 + |L| + |R|)"""
    return abs(left - right) / (1.0 + abs(left) + abs(right))

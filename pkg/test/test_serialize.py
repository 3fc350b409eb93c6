# -*- coding: utf-8 -*-
import io
import json
import math
from unittest import TestCase

import numpy as np

from exthyp.misc.serialize import CSV_COLUMNS, document, dumps, format_number, plain, write_csv
from exthyp.types.complex_measure import ComplexMeasure
from exthyp.types.minkowski_vector import MinkowskiVector
from exthyp.types.model import Model
from exthyp.types.reports import CheckRow


class Test_Plain(TestCase):
    """
    Test reduction to JSON types
    """
    def test_scalars(self):
        assert plain(np.float64(0.5)) == 0.5
        assert plain(np.int64(3)) == 3
        assert plain(True) is True
        assert plain(math.inf) == 'inf'
        assert plain(1 + 2j) == {'re': 1.0, 'im': 2.0}

    def test_domain_values(self):
        assert plain(ComplexMeasure(0.25, -1.0)) == {'re': 0.25, 'im': -1.0}
        assert plain(MinkowskiVector.of(1, 0, 2)) == [1.0, 0.0, 2.0]
        assert plain(Model.SPHERICAL) == 'S'
        assert plain({'v': (np.array([1.0, 2.0]),)}) == {'v': [[1.0, 2.0]]}

    def test_unknown(self):
        with self.assertRaises(TypeError):
            plain(object())


class Test_Streams(TestCase):
    """
    Test JSON and CSV output
    """
    def test_document(self):
        assert document({'x': 1})['schema'] == 'exthyp/1'

    def test_dumps_round_trips_floats(self):
        value = 0.1 + 0.2
        assert json.loads(dumps({'x': value}))['x'] == value
        assert dumps({'x': value}) == dumps({'x': value})

    def test_format_number(self):
        assert format_number(0.1) == '0.10000000000000001'
        assert format_number(0.0) == '0'

    def test_csv(self):
        stream = io.StringIO()
        write_csv([CheckRow('laws', 'cosine_A', 1e-12, 1e-8), CheckRow('laws', 'sine', math.inf, 1e-8)], stream)
        lines = stream.getvalue().splitlines()
        assert lines[0] == ','.join(CSV_COLUMNS)
        assert lines[1] == 'laws,cosine_A,9.9999999999999998e-13,1e-08,true'
        assert lines[2] == 'laws,sine,inf,1e-08,false'

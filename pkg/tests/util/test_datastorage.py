# -*- coding: utf-8 -*-

"""
Unit tests for the CSV and JSON report storages.


Copyright (c) 2021, the qbmf developers. See the AUTHORS.md file at the top-level directory of this
distribution.

This file is part of qbmf.

qbmf is free software: you can redistribute it and/or modify it under the terms of
the GNU Lesser General Public License as published by the Free Software Foundation,
either version 3 of the License, or (at your option) any later version.

qbmf is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY;
without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.
See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with qbmf.
If not, see <https://www.gnu.org/licenses/>.
"""

import io
import json
import os
import tempfile
import unittest
import numpy as np

from qbmf.util.datastorage import CsvReportStorage, JsonReportStorage, ReportFormat
from qbmf.util.datastorage import format_column_headers, get_report_storage

FIELDS = ('rep', 'q', 'pass', 'notes')


class TestCsvReportStorage(unittest.TestCase):

    def test_header_and_values(self):
        storage = CsvReportStorage(FIELDS)
        stream = io.StringIO()
        storage.write([{'rep': 'P4_1', 'q': np.float64(0.1), 'pass': True, 'notes': ''}], stream)
        lines = stream.getvalue().splitlines()
        self.assertListEqual(lines, ['rep,q,pass,notes', 'P4_1,0.1,true,'])

    def test_read_back(self):
        storage = CsvReportStorage(FIELDS)
        rows = [{'rep': 'P5_1', 'q': 1 / 3, 'pass': False,
                 'notes': 'TailNotConverged: lattice tail, "m >= 0" side'},
                {'rep': 'E8_2', 'q': 0.7, 'notes': None}]
        stream = io.StringIO()
        storage.write(rows, stream)
        stream.seek(0)
        parsed = storage.read(stream)
        self.assertEqual(len(parsed), 2)
        self.assertListEqual(list(parsed[0]), list(FIELDS))
        self.assertEqual(parsed[0]['q'], 1 / 3)
        self.assertIs(parsed[0]['pass'], False)
        self.assertEqual(parsed[0]['notes'], rows[0]['notes'])
        self.assertIsNone(parsed[1]['pass'])
        self.assertIsNone(parsed[1]['notes'])

    def test_empty_table(self):
        storage = CsvReportStorage(FIELDS)
        stream = io.StringIO()
        storage.write([], stream)
        self.assertEqual(stream.getvalue().strip(), ','.join(FIELDS))
        stream.seek(0)
        self.assertListEqual(storage.read(stream), list())

    def test_save_appends_extension(self):
        storage = get_report_storage(ReportFormat.CSV, FIELDS)
        with tempfile.TemporaryDirectory() as tmpdir:
            path = storage.save([{'rep': 'P6_1', 'q': 0.5}], os.path.join(tmpdir, 'sub', 'out'))
            self.assertTrue(path.endswith('.csv'))
            self.assertEqual(storage.load(path)[0]['rep'], 'P6_1')

    def test_column_headers(self):
        self.assertEqual(format_column_headers(FIELDS), 'rep,q,pass,notes')
        with self.assertRaises(TypeError):
            format_column_headers(['rep', 1])
        with self.assertRaises(ValueError):
            format_column_headers(['re,p'])


class TestJsonReportStorage(unittest.TestCase):

    def test_numpy_and_non_finite_values(self):
        storage = JsonReportStorage(FIELDS)
        stream = io.StringIO()
        storage.write([{'q': np.float64(0.5), 'pass': np.bool_(True), 'notes': float('nan')}],
                      stream)
        data = json.loads(stream.getvalue())
        self.assertListEqual(list(data[0]), list(FIELDS))
        self.assertEqual(data[0]['q'], 0.5)
        self.assertIs(data[0]['pass'], True)
        self.assertIsNone(data[0]['notes'])


if __name__ == '__main__':
    unittest.main()

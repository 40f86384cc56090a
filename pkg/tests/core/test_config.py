# -*- coding: utf-8 -*-

"""
Unit tests for run configuration validation, defaults and file handling.


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

import os
import tempfile
import unittest

from qbmf.core.config import FileHandler, RunConfig, ValidationError, validate_run_config
from qbmf.special.qbessel import BesselKind
from qbmf.special.representations import DEFAULT_THRESHOLD, RepresentationId


class TestRunConfig(unittest.TestCase):

    def test_defaults(self):
        cfg = RunConfig({'command': 'verify'})
        self.assertEqual(cfg.command, 'verify')
        self.assertIsNone(cfg.funcs)
        self.assertIsNone(cfg.s_list)
        self.assertFalse(cfg.reps_requested)
        self.assertTupleEqual(cfg.reps, tuple(RepresentationId))
        self.assertTupleEqual(cfg.q_list, (0.3, 0.5, 0.7, 0.9))
        self.assertTupleEqual(cfg.nu_list, (0.25, 0.75, 1.5, 2.5))
        self.assertTupleEqual(cfg.k_list, (3, 4, 5, 6, 7, 8))
        self.assertEqual(cfg.output_format, 'csv')
        self.assertEqual(cfg.tolerance.eps_rel, 1e-13)
        self.assertEqual(cfg.tolerance.max_terms, 5000)
        self.assertEqual(cfg.truncation.m_max_abs, 2000)
        self.assertEqual(cfg.threshold, DEFAULT_THRESHOLD)
        self.assertIsNone(cfg.out)
        self.assertIsNone(cfg.report)

    def test_selection(self):
        cfg = RunConfig({'command': 'eval',
                         'func': ['K1', 'I2'],
                         'rep': ['E8_2', 'P4_1'],
                         'q': [0.9, 0.5],
                         's': [2.0, 0.5],
                         'k': [5, 3, 5]})
        self.assertTupleEqual(cfg.funcs, (BesselKind.K1, BesselKind.I2))
        self.assertTupleEqual(cfg.reps, (RepresentationId.P4_1, RepresentationId.E8_2))
        self.assertTrue(cfg.reps_requested)
        self.assertTupleEqual(cfg.q_list, (0.5, 0.9))
        self.assertTupleEqual(cfg.s_list, (0.5, 2.0))
        self.assertTupleEqual(cfg.k_list, (3, 5))

    def test_invalid(self):
        invalid = [{},
                   {'command': 'plot'},
                   {'command': 'eval', 'q': [1.0]},
                   {'command': 'eval', 'q': [0.0]},
                   {'command': 'eval', 'q': []},
                   {'command': 'eval', 'func': ['I3']},
                   {'command': 'eval', 'rep': ['P9_1']},
                   {'command': 'eval', 'k': [0]},
                   {'command': 'eval', 'format': 'xml'},
                   {'command': 'eval', 'tolerance': {'eps_rel': 0}},
                   {'command': 'eval', 'tolerance': {'max_terms': 0}},
                   {'command': 'eval', 'colour': 'red'}]
        for raw in invalid:
            with self.assertRaises(ValidationError, msg=f'{raw!r} passed validation'):
                RunConfig(raw)

    def test_validation_inserts_defaults(self):
        raw = {'command': 'table', 'tolerance': {'eps_rel': 1e-10}}
        validate_run_config(raw)
        self.assertEqual(raw['format'], 'csv')
        self.assertDictEqual(raw['tolerance'],
                             {'eps_rel': 1e-10, 'max_terms': 5000, 'consecutive_small': 3})

    def test_overrides(self):
        cfg = RunConfig({'command': 'eval', 'tolerance': {'eps_rel': 1e-10, 'max_terms': 100}})
        changed = cfg.with_overrides({'command': 'table',
                                      'q': None,
                                      'tolerance': {'max_terms': 200, 'eps_rel': None}})
        self.assertEqual(changed.command, 'table')
        self.assertTupleEqual(changed.q_list, cfg.q_list)
        self.assertEqual(changed.tolerance.eps_rel, 1e-10)
        self.assertEqual(changed.tolerance.max_terms, 200)
        self.assertEqual(cfg.tolerance.max_terms, 100)
        self.assertNotEqual(changed, cfg)
        self.assertEqual(RunConfig(cfg.config_map), cfg)


class TestFileHandler(unittest.TestCase):

    def setUp(self) -> None:
        self._tmpdir = tempfile.TemporaryDirectory()

    def tearDown(self) -> None:
        self._tmpdir.cleanup()

    def test_dump_and_load(self):
        path = os.path.join(self._tmpdir.name, 'run.yml')
        cfg = RunConfig({'command': 'verify', 'rep': ['P4_1'], 'nu': [0.75], 'threshold': 1e-6})
        cfg.dump(path)
        self.assertEqual(RunConfig(FileHandler.load(path)), cfg)
        loaded = RunConfig.from_file(path, {'nu': [1.5], 'tolerance': {'eps_rel': 1e-9}})
        self.assertTupleEqual(loaded.nu_list, (1.5,))
        self.assertTupleEqual(loaded.reps, (RepresentationId.P4_1,))
        self.assertEqual(loaded.threshold, 1e-6)
        self.assertEqual(loaded.tolerance.eps_rel, 1e-9)
        self.assertEqual(loaded.tolerance.max_terms, 5000)

    def test_partial_file(self):
        path = os.path.join(self._tmpdir.name, 'partial.yaml')
        with open(path, 'w') as file:
            file.write('q: [0.6]\nformat: json\n')
        with self.assertRaises(ValidationError):
            FileHandler.load(path)
        self.assertDictEqual(FileHandler.load(path, validate=False),
                             {'q': [0.6], 'format': 'json'})
        cfg = RunConfig.from_file(path, {'command': 'table'})
        self.assertTupleEqual(cfg.q_list, (0.6,))
        self.assertEqual(cfg.output_format, 'json')

    def test_file_errors(self):
        with self.assertRaises(FileNotFoundError):
            FileHandler.load(os.path.join(self._tmpdir.name, 'missing.yml'))
        with self.assertRaises(ValueError):
            FileHandler.dump(os.path.join(self._tmpdir.name, 'run.txt'), {'command': 'eval'})
        with self.assertRaises(ValidationError):
            FileHandler.dump(os.path.join(self._tmpdir.name, 'run.yml'), {'command': 'plot'})


if __name__ == '__main__':
    unittest.main()

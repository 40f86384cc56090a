# -*- coding: utf-8 -*-

"""
Unit tests for the geometric convergence fit model.


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

import unittest
import numpy as np

from qbmf.util.fit_models.convergence import GeometricConvergence, geometric_convergence


class TestGeometricConvergence(unittest.TestCase):
    _fit_param_tolerance = 0.05  # 5% tolerance for each fit parameter

    def setUp(self):
        self.amplitude = 0.1 + np.random.rand() * 10
        self.rate = 0.5 + np.random.rand() * 2.5
        self.x_values = np.arange(3, 13, dtype=float)
        self.noise = 1 + (np.random.rand(self.x_values.size) - 0.5) * 0.02

    def test_model_function(self):
        self.assertEqual(geometric_convergence(2, 3.0, 1.0), 0.75)
        values = geometric_convergence(np.array([0, 1]), 1.0, 2.0)
        self.assertListEqual(values.tolist(), [1.0, 0.25])

    def test_fit(self):
        y_values = geometric_convergence(self.x_values, self.amplitude, self.rate) * self.noise
        fit_model = GeometricConvergence()
        estimate = fit_model.estimators['Log-linear'](y_values, self.x_values)
        fit_result = fit_model.fit(data=y_values, x=self.x_values, params=estimate,
                                   weights=1 / y_values)
        params_ideal = {'amplitude': self.amplitude, 'rate': self.rate}
        for name, ideal_val in params_ideal.items():
            diff = abs(fit_result.best_values[name] - ideal_val)
            tolerance = abs(ideal_val * self._fit_param_tolerance)
            msg = 'Convergence fit parameter "{0}" not within {1:.2%} tolerance'.format(
                name, self._fit_param_tolerance
            )
            self.assertLessEqual(diff, tolerance, msg)

    def test_estimator_without_data(self):
        fit_model = GeometricConvergence()
        self.assertListEqual(list(fit_model.estimators), ['Log-linear'])
        with self.assertWarns(UserWarning):
            estimate = fit_model.estimators['Log-linear'](np.array([0., 0., 1e-3]),
                                                          np.array([1., 2., 3.]))
        self.assertEqual(estimate['rate'].value, 0)
        self.assertEqual(estimate['amplitude'].value, 1e-3)


if __name__ == '__main__':
    unittest.main()

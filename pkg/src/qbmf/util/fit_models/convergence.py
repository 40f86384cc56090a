# -*- coding: utf-8 -*-

"""
Geometric convergence model for the q -> 1 limit tables. Along the sequence q_k = 1 - 2^(-k) an
error that behaves like C (1 - q)^p follows

    error(k) = amplitude * 2^(-rate * k)


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

__all__ = ('GeometricConvergence', 'geometric_convergence')

import warnings
import numpy as np
from qbmf.util.fit_models.model import FitModelBase, estimator


def geometric_convergence(x, amplitude, rate):
    """ amplitude * 2^(-rate * x)

    @param float x: The independent variable (refinement level k)
    @param float amplitude: Error prefactor
    @param float rate: Convergence order in powers of 2

    @return float|numpy.ndarray: The result given x for f(x)
    """
    return amplitude * np.exp2(-rate * np.asarray(x, dtype=float))


class GeometricConvergence(FitModelBase):
    """ Error model amplitude * 2^(-rate * k). Fit with weights 1/data to compare relative
    deviations, the errors span many decades.
    """
    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        self.set_param_hint('amplitude', value=1., min=0., max=np.inf)
        self.set_param_hint('rate', value=1., min=-np.inf, max=np.inf)

    @staticmethod
    def _model_function(x, amplitude, rate):
        return geometric_convergence(x, amplitude, rate)

    @estimator('Log-linear')
    def estimate_log_linear(self, data, x):
        data = np.abs(np.asarray(data, dtype=float))
        x = np.asarray(x, dtype=float)
        mask = data > 0
        estimate = self.make_params()
        if np.count_nonzero(mask) < 2:
            warnings.warn('Less than two nonzero errors. Convergence rate estimation skipped.')
            estimate['amplitude'].set(value=float(np.max(data, initial=0.)))
            estimate['rate'].set(value=0.)
            return estimate
        slope, offset = np.polyfit(x[mask], np.log2(data[mask]), deg=1)
        estimate['amplitude'].set(value=float(np.exp2(offset)), min=0.)
        estimate['rate'].set(value=float(-slope))
        return estimate

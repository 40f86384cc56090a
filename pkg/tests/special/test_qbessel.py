# -*- coding: utf-8 -*-

"""
Unit tests for the q-Bessel functions of the first and second kind and the q-Bessel-Macdonald
functions.


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

import math
import unittest
import numpy as np

from qbmf.special.errors import DomainError, IntegerOrderError, RadiusError
from qbmf.special.qbessel import BesselKind, BesselParams, a_nu_product, asymptotic_eval
from qbmf.special.qbessel import bessel_eval, bessel_series_terms, bessel_term_count
from qbmf.special.qbessel import classical_oracle, diff_eq_residual, j1_real_continuation
from qbmf.special.qbessel import k_integer_order
from qbmf.special.qcore import QContext, qpochhammer_inf


class TestBesselKind(unittest.TestCase):

    def test_properties(self):
        self.assertEqual(BesselKind.K2.family, 'K')
        self.assertEqual(BesselKind.K2.index, 2)
        self.assertTrue(BesselKind.J2.entire)
        self.assertFalse(BesselKind.I1.entire)
        self.assertIs(BesselKind('J1'), BesselKind.J1)

    def test_params(self):
        ctx = QContext(0.5)
        params = BesselParams(1.5, 0.3, ctx)
        self.assertTrue(params.is_real_positive)
        self.assertEqual(params.with_nu(2.5).nu, 2.5)
        self.assertFalse(params.with_s(-0.3).is_real_positive)
        with self.assertRaises(TypeError):
            BesselParams(1.5, 0.3, 0.5)
        with self.assertRaises(DomainError):
            BesselParams(math.inf, 0.3, ctx)


class TestSeries(unittest.TestCase):

    def test_rotation(self):
        ctx = QContext(0.6)
        for kind_i, kind_j in ((BesselKind.I1, BesselKind.J1), (BesselKind.I2, BesselKind.J2)):
            rotated = bessel_eval(kind_i, BesselParams(1.0, 0.4j, ctx))
            direct = bessel_eval(kind_j, BesselParams(1.0, 0.4, ctx))
            self.assertLessEqual(abs(rotated - 1j * direct), 1e-15)

    def test_series_terms(self):
        ctx = QContext(0.5)
        for kind in (BesselKind.J1, BesselKind.I1, BesselKind.J2, BesselKind.I2):
            params = BesselParams(0.75, 0.9, ctx)
            count = bessel_term_count(kind, params)
            terms = bessel_series_terms(kind, params, count)
            value = bessel_eval(kind, params)
            self.assertLessEqual(abs(np.sum(terms) - value) / abs(value), 1e-13)
        with self.assertRaises(DomainError):
            bessel_series_terms(BesselKind.K1, BesselParams(0.75, 0.9, ctx), 3)
        with self.assertRaises(DomainError):
            bessel_series_terms(BesselKind.I1, BesselParams(0.75, np.array([0.1, 0.2]), ctx), 3)

    def test_array_argument(self):
        ctx = QContext(0.5)
        s = np.array([0.2, 0.5, 1.1])
        values = bessel_eval(BesselKind.I1, BesselParams(1.5, s, ctx))
        self.assertEqual(values.shape, (3,))
        for s_val, value in zip(s, values):
            scalar = bessel_eval(BesselKind.I1, BesselParams(1.5, s_val, ctx))
            self.assertLessEqual(abs(scalar - value), 1e-14 * abs(value))

    def test_radius(self):
        ctx = QContext(0.5)
        radius = 1 / ctx.lam
        for kind in (BesselKind.I1, BesselKind.J1, BesselKind.K1):
            with self.assertRaises(RadiusError):
                bessel_eval(kind, BesselParams(0.75, radius, ctx))
        value = bessel_eval(BesselKind.I2, BesselParams(0.75, 10 * radius, ctx))
        self.assertTrue(np.isfinite(value))

    def test_difference_equations(self):
        for q in (0.5, 0.7):
            ctx = QContext(q)
            for nu in (0.75, 1.5):
                for s in (0.3, 0.6):
                    for kind in BesselKind:
                        residual = diff_eq_residual(kind, BesselParams(nu, s, ctx))
                        msg = f'{kind.value} difference equation at q={q}, nu={nu}, s={s}'
                        self.assertLessEqual(residual, 1e-12, msg)

    def test_macdonald_domain(self):
        ctx = QContext(0.5)
        with self.assertRaises(IntegerOrderError):
            bessel_eval(BesselKind.K1, BesselParams(2.0, 0.5, ctx))
        with self.assertRaises(DomainError):
            bessel_eval(BesselKind.K2, BesselParams(0.75, -0.5, ctx))
        with self.assertRaises(DomainError):
            bessel_eval(BesselKind.I1, BesselParams(-0.5, 0.0, ctx))
        self.assertEqual(bessel_eval(BesselKind.I1, BesselParams(0.5, 0.0, ctx)), 0)

    def test_integer_order_extrapolation(self):
        ctx = QContext(0.5)
        params = BesselParams(1.0, 0.5, ctx)
        with self.assertLogs('qbmf.special.qbessel', level='WARNING'):
            value = k_integer_order(BesselKind.K1, params)
        close = 0.5 * (bessel_eval(BesselKind.K1, params.with_nu(1.0001)) +
                       bessel_eval(BesselKind.K1, params.with_nu(0.9999)))
        self.assertLessEqual(abs(value - close), 1e-6)
        with self.assertRaises(DomainError):
            k_integer_order(BesselKind.K1, params.with_nu(1.5))
        with self.assertRaises(DomainError):
            k_integer_order(BesselKind.I1, params)


class TestNormalization(unittest.TestCase):

    def test_product_formula_at_half_integers(self):
        for q, nu in ((0.5, 0.5), (0.3, 2.5), (0.8, 1.5)):
            lhs, rhs = a_nu_product(nu, QContext(q))
            self.assertLessEqual(abs(lhs / rhs - 1), 1e-12, f'a_nu product at q={q}, nu={nu}')
        lhs, rhs = a_nu_product(0.5001, QContext(0.5))
        self.assertGreater(abs(lhs / rhs - 1), 1e-6)
        with self.assertRaises(IntegerOrderError):
            a_nu_product(1.0, QContext(0.5))

    def test_asymptotic_form(self):
        for q in (0.5, 0.7):
            ctx = QContext(q)
            for nu in (1.5, 2.5):
                for s in (10.0, 20.0, 40.0):
                    params = BesselParams(nu, s, ctx)
                    for kind in (BesselKind.I2, BesselKind.K2):
                        value = asymptotic_eval(kind, params)
                        exact = bessel_eval(kind, params)
                        self.assertLessEqual(abs(value - exact), 1e-8 * abs(exact),
                                             f'{kind.value} at q={q}, nu={nu}, s={s}')
        ctx = QContext(0.5)
        values = asymptotic_eval(BesselKind.K2, BesselParams(1.5, np.array([10.0, 40.0]), ctx))
        self.assertEqual(values.shape, (2,))

    def test_asymptotic_domain(self):
        ctx = QContext(0.5)
        with self.assertRaises(DomainError):
            asymptotic_eval(BesselKind.I1, BesselParams(0.75, 10.0, ctx))
        with self.assertRaises(DomainError):
            asymptotic_eval(BesselKind.I2, BesselParams(0.75, ctx.q / ctx.lam, ctx))


class TestContinuation(unittest.TestCase):

    def test_near_branch(self):
        ctx = QContext(0.5)
        for x in (0.2, 1.0):
            expected = bessel_eval(BesselKind.J1, BesselParams(0.5, x, ctx)).real
            self.assertLessEqual(abs(j1_real_continuation(0.5, x, ctx) - expected), 1e-14)

    def test_far_branch(self):
        ctx = QContext(0.5)
        p, lam = ctx.q2, ctx.lam
        for x in (3 / lam, 10 / lam):
            second = bessel_eval(BesselKind.J2, BesselParams(0.5, x, ctx)).real
            expected = second / qpochhammer_inf(-(lam * x) ** 2 / 4, ctx, p).real
            value = j1_real_continuation(0.5, x, ctx)
            self.assertLessEqual(abs(value - expected), 1e-12 * (1 + abs(expected)))

    def test_parity(self):
        ctx = QContext(0.5)
        x = np.array([0.5, 4.0])
        self.assertLessEqual(
            np.max(np.abs(j1_real_continuation(1.0, -x, ctx) + j1_real_continuation(1.0, x, ctx))),
            1e-15)
        self.assertLessEqual(
            np.max(np.abs(j1_real_continuation(2.0, -x, ctx) - j1_real_continuation(2.0, x, ctx))),
            1e-15)
        with self.assertRaises(DomainError):
            j1_real_continuation(0.5, -1.0, ctx)
        with self.assertRaises(DomainError):
            j1_real_continuation(-0.5, 1.0, ctx)
        with self.assertRaises(DomainError):
            j1_real_continuation(0.5, 1.0j, ctx)


class TestClassicalOracle(unittest.TestCase):

    def test_half_integer_values(self):
        self.assertLessEqual(abs(classical_oracle('I', 0.5, 1.0) -
                                 math.sqrt(2 / math.pi) * math.sinh(1.0)), 1e-14)
        self.assertLessEqual(abs(classical_oracle('K', 0.5, 1.0) -
                                 math.sqrt(math.pi / 2) * math.exp(-1.0)), 1e-14)
        self.assertLessEqual(abs(classical_oracle('J', 0.5, 1.0) -
                                 math.sqrt(2 / math.pi) * math.sin(1.0)), 1e-14)
        values = classical_oracle('I', 1.5, np.array([0.5, 1.0]))
        self.assertEqual(values.shape, (2,))

    def test_invalid(self):
        with self.assertRaises(DomainError):
            classical_oracle('K', 0.5, 0.0)
        with self.assertRaises(DomainError):
            classical_oracle('I', 0.5, -1.0)
        with self.assertRaises(DomainError):
            classical_oracle('Y', 0.5, 1.0)
        with self.assertRaises(IntegerOrderError):
            classical_oracle('K', 1.0, 1.0)


if __name__ == '__main__':
    unittest.main()

# -*- coding: utf-8 -*-

"""
Unit tests for the q-series primitives in qbmf.special.qcore.


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

from qbmf.special.errors import DomainError, PoleError, TailNotConverged
from qbmf.special.qcore import CompensatedSum, Eq_exp, QContext, Tolerance, as_complex, eq_exp
from qbmf.special.qcore import phi01, phi03, phi21, qbeta, qgamma, qnumber, qpochhammer_inf
from qbmf.special.qcore import qpochhammer_n, qtrig, sum_by_ratio, terminating_index


def _partial_product(a, q, n=400):
    return np.prod([1 - a * q ** j for j in range(n)])


class TestContext(unittest.TestCase):

    def test_derived_quantities(self):
        for q in (0.3, 0.5, 0.9):
            ctx = QContext(q)
            self.assertEqual(ctx.q2, q * q)
            self.assertEqual(ctx.lam, 1 - q * q)

    def test_invalid_base(self):
        for q in (0, 1, 1.5, -0.5):
            with self.assertRaises(DomainError):
                QContext(q)
        with self.assertRaises(DomainError):
            QContext(0.5j)

    def test_tolerance(self):
        tol = Tolerance(eps_rel=1e-12, max_terms=100)
        self.assertEqual(tol.copy(), tol)
        self.assertEqual(tol.copy(max_terms=50).max_terms, 50)
        self.assertEqual(hash(tol.copy()), hash(tol))
        for kwargs in ({'eps_rel': 0}, {'eps_rel': 1.5}, {'max_terms': 0},
                       {'consecutive_small': 0}):
            with self.assertRaises(DomainError):
                Tolerance(**kwargs)

    def test_with_tolerance(self):
        ctx = QContext(0.5)
        other = ctx.with_tolerance(eps_rel=1e-10)
        self.assertEqual(other.q, 0.5)
        self.assertEqual(other.tol.eps_rel, 1e-10)
        self.assertNotEqual(ctx, other)
        self.assertEqual(ctx, QContext(0.5))


class TestHelpers(unittest.TestCase):

    def test_compensated_sum(self):
        acc = CompensatedSum()
        for value in (1e16, 1.0, -1e16):
            acc.add(value)
        self.assertEqual(complex(acc.value), 1.0)

    def test_as_complex(self):
        self.assertEqual(as_complex(2).dtype, complex)
        for value in (np.nan, np.inf, [1, np.nan]):
            with self.assertRaises(DomainError):
                as_complex(value)

    def test_qnumber(self):
        self.assertAlmostEqual(qnumber(2, 0.5), 1.5, places=15)
        self.assertAlmostEqual(qnumber(1, 0.3), 1.0, places=15)

    def test_terminating_index(self):
        self.assertEqual(terminating_index(0.25 ** -2, 0.25), 2)
        self.assertEqual(terminating_index(1.0, 0.25), 0)
        self.assertIsNone(terminating_index(0.3, 0.5))
        self.assertIsNone(terminating_index(-4.0, 0.5))

    def test_sum_by_ratio(self):
        total, terms = sum_by_ratio(1.0, lambda n: 0.5, Tolerance())
        self.assertLessEqual(abs(complex(total) - 2), 1e-13)
        self.assertGreater(terms, 40)
        with self.assertRaises(TailNotConverged):
            sum_by_ratio(1.0, lambda n: 1.0, Tolerance(max_terms=50))
        with self.assertRaises(TailNotConverged):
            sum_by_ratio(1.0, lambda n: 1e300, Tolerance(max_terms=50))


class TestPochhammerGamma(unittest.TestCase):

    def test_finite_pochhammer(self):
        self.assertEqual(qpochhammer_n(0.7 + 2j, 0.5, 0), 1)
        self.assertEqual(qpochhammer_n(1, 0.5, 3), 0)
        self.assertAlmostEqual(abs(qpochhammer_n(0.5, 0.5, 2) - 0.375), 0, places=15)
        with self.assertRaises(DomainError):
            qpochhammer_n(0.5, 0.5, -1)
        with self.assertRaises(DomainError):
            qpochhammer_n(0.5, 0.5, 1.5)

    def test_pochhammer_recurrence(self):
        for a in (0.3, -1.7, 0.2 + 0.9j):
            for n in range(8):
                lhs = qpochhammer_n(a, 0.6, n + 1)
                rhs = qpochhammer_n(a, 0.6, n) * (1 - a * 0.6 ** n)
                self.assertLessEqual(abs(lhs - rhs), 1e-14 * max(1, abs(rhs)))

    def test_infinite_pochhammer(self):
        ctx = QContext(0.5)
        self.assertEqual(qpochhammer_inf(0, ctx), 1)
        value = qpochhammer_inf(0.3, ctx)
        self.assertLessEqual(abs(value - _partial_product(0.3, 0.5)), 1e-14)
        peeled = qpochhammer_inf(0.5, ctx) / (1 - 0.5)
        self.assertLessEqual(abs(peeled - qpochhammer_inf(0.25, ctx)), 1e-14)
        values = qpochhammer_inf(np.array([0.1, 0.2, 0.3]), ctx)
        self.assertEqual(values.shape, (3,))
        self.assertLessEqual(abs(values[2] - value), 1e-15)

    def test_qgamma_values(self):
        for q in (0.3, 0.5, 0.9):
            ctx = QContext(q)
            self.assertLessEqual(abs(qgamma(1, ctx) - 1), 1e-14)
            self.assertLessEqual(abs(qgamma(2, ctx) - 1), 1e-13)
        close = qgamma(0.5, QContext(0.9))
        self.assertLessEqual(abs(close / math.sqrt(math.pi) - 1), 0.03)

    def test_qgamma_functional_equation(self):
        for q in (0.3, 0.5, 0.9):
            ctx = QContext(q)
            for nu in (0.3, 1.2, 2.7):
                lhs = qgamma(nu + 1, ctx)
                rhs = (1 - q ** nu) / (1 - q) * qgamma(nu, ctx)
                msg = f'Gamma_q functional equation violated at q={q}, nu={nu}'
                self.assertLessEqual(abs(lhs - rhs) / abs(rhs), 1e-12, msg)

    def test_qgamma_poles(self):
        ctx = QContext(0.5)
        for nu in (0, -1, -3):
            with self.assertRaises(PoleError):
                qgamma(nu, ctx)

    def test_qbeta(self):
        ctx = QContext(0.7)
        self.assertLessEqual(abs(qbeta(1, 1, ctx) - 1), 1e-13)
        self.assertLessEqual(abs(qbeta(1.5, 0.5, ctx) - qbeta(0.5, 1.5, ctx)), 1e-13)
        p = 0.81
        expected = qgamma(1.5, ctx, p) * qgamma(0.5, ctx, p) / qgamma(2, ctx, p)
        self.assertLessEqual(abs(qbeta(1.5, 0.5, ctx, p) - expected), 1e-13)


class TestExponentials(unittest.TestCase):

    def test_small_exponential(self):
        ctx = QContext(0.5)
        self.assertEqual(eq_exp(0, ctx), 1)
        self.assertLessEqual(abs(eq_exp(0.4, ctx) * _partial_product(0.4, 0.5) - 1), 1e-13)
        # product branch beyond the series switch
        self.assertLessEqual(abs(eq_exp(0.95, ctx) * _partial_product(0.95, 0.5) - 1), 1e-13)
        with self.assertRaises(PoleError):
            eq_exp(4.0, ctx)

    def test_inverse_pair(self):
        for q, u in ((0.6, 0.7j), (0.5, 0.3), (0.9, 2.5 + 1j), (0.3, -3.0)):
            ctx = QContext(q)
            product = eq_exp(u, ctx) * Eq_exp(-u, ctx)
            self.assertLessEqual(abs(product - 1), 1e-12, f'e_q E_q != 1 at q={q}, u={u}')

    def test_big_exponential(self):
        ctx = QContext(0.5)
        self.assertEqual(Eq_exp(0, ctx), 1)
        self.assertLessEqual(abs(Eq_exp(-1, ctx)), 1e-15)
        u = 0.8
        series = sum(0.5 ** (n * (n - 1) / 2) * u ** n / qpochhammer_n(0.5, 0.5, n).real
                     for n in range(60))
        self.assertLessEqual(abs(Eq_exp(u, ctx) - series), 1e-13)

    def test_euler_product(self):
        q = 0.5
        ctx = QContext(q)
        lhs = eq_exp(q, ctx) * Eq_exp(1 / q, ctx)
        series = sum(q ** (k * (k - 1) / 2) * q ** -k / qpochhammer_n(q, q, k).real
                     for k in range(80))
        rhs = series / _partial_product(q, q)
        self.assertLessEqual(abs(lhs - rhs) / abs(rhs), 1e-12)

    def test_trigonometric(self):
        ctx = QContext(0.5)
        self.assertEqual(qtrig(0.0, ctx), (1.0, 1.0, 0.0))
        u = 0.6
        cos_series = sum((-1) ** k * u ** (2 * k) / qpochhammer_n(0.5, 0.5, 2 * k).real
                         for k in range(40))
        cos_q, big_cos, big_sin = qtrig(u, ctx)
        self.assertLessEqual(abs(cos_q - cos_series), 1e-13)
        self.assertIsInstance(big_sin, float)
        with self.assertRaises(DomainError):
            qtrig(0.5j, ctx)


class TestHypergeometric(unittest.TestCase):

    def test_phi01(self):
        q = 0.7
        ctx = QContext(q)
        self.assertEqual(phi01(0, ctx), 1)
        u = 1e-8
        slope = (phi01(u, ctx) - 1) / u
        self.assertLessEqual(abs(slope - 1 / (1 - q)), 1e-6)
        u = 0.3
        series = sum(q ** (n * (n - 1)) * u ** n / qpochhammer_n(q, q, n).real for n in range(60))
        self.assertLessEqual(abs(phi01(u, ctx) - series), 1e-14)

    def test_phi03(self):
        q = 0.6
        ctx = QContext(q)
        p, lam, nu, x = q * q, 1 - q * q, 0.5, 0.2
        self.assertEqual(phi03(nu, 0, ctx), 1)
        value = phi03(nu, x * x, ctx)
        self.assertLess(value.real, 1)
        series = sum((-1) ** n * q ** (4 * n * (nu + n)) * lam ** (2 * n) * x ** (2 * n) /
                     (qpochhammer_n(p, p, n).real * qpochhammer_n(p ** (nu + 1), p, n).real *
                      4 ** n) for n in range(60))
        self.assertLessEqual(abs(value - series), 1e-15)

    def test_phi21_trivial(self):
        ctx = QContext(0.5)
        self.assertEqual(phi21(0.3, 0.4, 0.2, 0.5, 0, ctx), 1)
        self.assertEqual(phi21(1.0, 0.4, 0.2, 0.5, 0.7, ctx), 1)
        with self.assertRaises(DomainError):
            phi21(0.3, 0.4, 0.2, 0.5, 1.5, ctx)

    def test_phi21_terminating(self):
        ctx = QContext(0.5)
        base, b, c, u = 0.25, 0.5, 0.125, 1.0
        a = base ** -2
        expected = sum(qpochhammer_n(a, base, n) * qpochhammer_n(b, base, n) /
                       (qpochhammer_n(base, base, n) * qpochhammer_n(c, base, n)) * u ** n
                       for n in range(3))
        self.assertLessEqual(abs(phi21(a, b, c, base, u, ctx) - expected), 1e-13)

    def test_q_gauss_sum(self):
        q, a, b, c = 0.5, 0.2, 0.3, 0.05
        ctx = QContext(q)
        value = phi21(a, b, c, q, c / (a * b), ctx)
        expected = (_partial_product(c / a, q) * _partial_product(c / b, q) /
                    (_partial_product(c, q) * _partial_product(c / (a * b), q)))
        self.assertLessEqual(abs(value - expected) / abs(expected), 1e-12)

    def test_phi21_unit_argument_divergence(self):
        q, nu = 0.5, 0.75
        ctx = QContext(q)
        with self.assertRaises(TailNotConverged):
            phi21(q ** (1 - 2 * nu), q, q ** 3, q * q, 1.0, ctx)


if __name__ == '__main__':
    unittest.main()

# -*- coding: utf-8 -*-

"""
Unit tests for the integral representations of the q-Bessel and q-Bessel-Macdonald functions.


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

from qbmf.special.errors import DomainError, PoleError, QSeriesError, RadiusError
from qbmf.special.jackson import JacksonDomain
from qbmf.special.qbessel import BesselKind
from qbmf.special.qcore import QContext
from qbmf.special.representations import DEFAULT_THRESHOLD, RepresentationId, VerificationRecord
from qbmf.special.representations import check_constraint, classical_limit_check
from qbmf.special.representations import coefficient_verify, double_integral_constants
from qbmf.special.representations import kernel_diff_residual, kernel_weights, moment_constant
from qbmf.special.representations import reduction_proof, rhs_eval, satisfies_constraint
from qbmf.special.representations import swapped_order_residual, verify


class TestRepresentationId(unittest.TestCase):

    def test_catalogue(self):
        self.assertEqual(len(RepresentationId), 17)
        self.assertIs(RepresentationId.P4_1.target, BesselKind.I1)
        self.assertIs(RepresentationId.C4_1J2.target, BesselKind.J2)
        self.assertIs(RepresentationId.E8_9.target, BesselKind.K2)
        self.assertEqual(RepresentationId.P5_1.min_nu, 0.5)
        self.assertEqual(RepresentationId.P6_2.min_nu, 1.5)
        self.assertEqual(RepresentationId.E8_2.min_nu, 0.0)
        self.assertTrue(RepresentationId.C4_1J1.needs_radius)
        self.assertFalse(RepresentationId.P4_2.needs_radius)
        doubles = {rep for rep in RepresentationId if rep.is_double}
        self.assertSetEqual(doubles, {RepresentationId.P7_1, RepresentationId.E8_8,
                                      RepresentationId.E8_9})
        self.assertTrue(RepresentationId.P6_1.is_noncommutative)
        self.assertFalse(RepresentationId.E8_6.is_noncommutative)
        self.assertIsNone(RepresentationId.E8_4.reduction)
        self.assertEqual(RepresentationId.P6_1.reduction, 'J2_to_J1')

    def test_kernel_weights(self):
        ctx = QContext(0.5)
        for rep in RepresentationId:
            weights = kernel_weights(rep, 2.0, ctx)
            self.assertEqual(len(weights), 2 if rep.is_double else 1)
        outer, inner = kernel_weights(RepresentationId.P7_1, 2.0, ctx)
        self.assertIs(outer.domain, JacksonDomain.HalfLine)
        self.assertTrue(outer.z_factor)
        self.assertIs(inner.domain, JacksonDomain.SymmetricUnit)
        weight, = kernel_weights(RepresentationId.P5_1, 2.0, ctx)
        self.assertIs(weight.domain, JacksonDomain.RealLine)
        self.assertLessEqual(abs(weight.kernel.b + 0.5 ** (1 - 4.0)), 1e-12)


class TestConstraints(unittest.TestCase):

    def test_order_and_radius(self):
        ctx = QContext(0.5)
        radius = 1 / ctx.lam
        self.assertTrue(satisfies_constraint(RepresentationId.P4_1, 0.25, 0.5 * radius, ctx))
        self.assertFalse(satisfies_constraint(RepresentationId.P4_1, 0.25, radius, ctx))
        self.assertFalse(satisfies_constraint(RepresentationId.P4_1, 0.0, 0.5, ctx))
        self.assertTrue(satisfies_constraint(RepresentationId.P4_2, 0.25, 10 * radius, ctx))
        self.assertFalse(satisfies_constraint(RepresentationId.P5_1, 0.5, 1.0, ctx))
        self.assertTrue(satisfies_constraint(RepresentationId.P5_1, 0.75, 1.0, ctx))
        self.assertFalse(satisfies_constraint(RepresentationId.E8_7, 1.5, 1.0, ctx))
        self.assertFalse(satisfies_constraint(RepresentationId.P6_1, 1.5, -1.0, ctx))
        with self.assertRaises(RadiusError):
            check_constraint(RepresentationId.C4_1J1, 1.0, radius, ctx)
        with self.assertRaises(DomainError):
            rhs_eval(RepresentationId.P6_1, 0.25, 1.0, ctx)


class TestVerification(unittest.TestCase):

    def test_first_kind_representations(self):
        points = ((0.5, 0.75, 0.5), (0.7, 1.5, 1.0), (0.3, 0.25, 0.8))
        for rep in (RepresentationId.P4_1, RepresentationId.E8_2, RepresentationId.C4_1J1):
            for q, nu, s in points:
                record = verify(rep, nu, s, QContext(q))
                msg = f'{rep.value} at q={q}, nu={nu}, s={s}: {record!r}'
                self.assertTrue(record.passed, msg)
                self.assertLessEqual(record.rel_residual, 1e-12, msg)

    def test_shared_first_kind_integrals(self):
        for q, nu, s in ((0.5, 0.75, 0.5), (0.7, 1.5, 1.0)):
            ctx = QContext(q)
            reference = rhs_eval(RepresentationId.P4_1, nu, s, ctx)
            value = rhs_eval(RepresentationId.E8_2, nu, s, ctx)
            self.assertLessEqual(abs(value - reference), 1e-10 * abs(reference),
                                 f'E8_2 against P4_1 at q={q}, nu={nu}, s={s}')

    def test_macdonald_integral_sides_agree(self):
        for q, nu, s in ((0.5, 0.75, 0.5), (0.5, 1.5, 1.0), (0.7, 1.5, 1.0)):
            ctx = QContext(q)
            reference = rhs_eval(RepresentationId.P5_1, nu, s, ctx)
            for rep in (RepresentationId.P6_1, RepresentationId.E8_4):
                value = rhs_eval(rep, nu, s, ctx)
                self.assertLessEqual(abs(value - reference), 1e-10 * abs(reference),
                                     f'{rep.value} against P5_1 at q={q}, nu={nu}, s={s}')
        # the residual at a non half-integer order is carried by the series side
        ctx = QContext(0.5)
        first = verify(RepresentationId.P5_1, 0.75, 1.0, ctx)
        second = verify(RepresentationId.P6_1, 0.75, 1.0, ctx)
        self.assertGreater(first.rel_residual, 1e-2)
        self.assertLessEqual(abs(first.rel_residual - second.rel_residual),
                             1e-8 * first.rel_residual)

    def test_macdonald_half_line(self):
        record = verify(RepresentationId.P6_1, 1.5, 1.0, QContext(0.9))
        self.assertTrue(record.passed, repr(record))
        self.assertIn('J2_to_J1', record.notes)
        record = verify(RepresentationId.P6_1, 0.75, 1.0, QContext(0.5))
        self.assertFalse(record.passed)
        self.assertGreater(record.rel_residual, 1e-2)

    def test_unverifiable_representations(self):
        ctx = QContext(0.5)
        with self.assertRaises(PoleError):
            rhs_eval(RepresentationId.P7_1, 0.75, 1.0, ctx)
        with self.assertRaises(QSeriesError):
            rhs_eval(RepresentationId.P6_2, 2.0, 1.0, ctx)

    def test_double_integral_order(self):
        ctx = QContext(0.9)
        residual = swapped_order_residual(RepresentationId.E8_8, 1.5, 1.0, ctx)
        self.assertLessEqual(residual, 1e-9)
        with self.assertRaises(DomainError):
            swapped_order_residual(RepresentationId.P4_1, 1.5, 1.0, ctx)

    def test_record(self):
        record = VerificationRecord(RepresentationId.E8_2, 0.5, 0.75, 0.5, 1 + 0j, 1 + 2e-10j)
        self.assertEqual(record.threshold, DEFAULT_THRESHOLD)
        self.assertTrue(record.passed)
        data = record.as_dict()
        self.assertListEqual(list(data), list(VerificationRecord.FIELDS))
        self.assertEqual(data['rep'], 'E8_2')
        self.assertIs(data['pass'], True)
        restored = VerificationRecord.from_dict(data)
        self.assertEqual(restored.key, record.key)
        self.assertEqual(restored.rhs, record.rhs)
        strict = VerificationRecord.from_dict(data, threshold=1e-12)
        self.assertFalse(strict.passed)

        failed = VerificationRecord.failed(RepresentationId.P7_1, 0.5, 0.75, 1.0, 'PoleError')
        self.assertFalse(failed.passed)
        self.assertIsNone(failed.rel_residual)
        data = failed.as_dict()
        self.assertIsNone(data['lhs_re'])
        self.assertEqual(data['notes'], 'PoleError')
        self.assertIsNone(VerificationRecord.from_dict(data).lhs)


class TestKernelChecks(unittest.TestCase):

    def test_kernel_difference_equations(self):
        ctx = QContext(0.5)
        z = np.array([0.3, 0.5])
        for rep in RepresentationId:
            nu = 2.0 if rep.target.family == 'K' else 0.75
            self.assertLessEqual(kernel_diff_residual(rep, z, nu, ctx), 1e-12, rep.value)

    def test_moments(self):
        ctx = QContext(0.5)
        for rep in (RepresentationId.P4_1, RepresentationId.C4_1J1):
            for nu in (0.75, 1.5):
                value, closed = moment_constant(rep, nu, ctx)
                self.assertLessEqual(abs(value / closed - 1), 1e-10)
        value, closed = moment_constant(RepresentationId.P6_1, 1.0, ctx)
        self.assertLessEqual(abs(value / closed - 1), 1e-10)
        self.assertLessEqual(abs(closed + 0.5 / (1 - 4.0)), 1e-15)
        value, closed = moment_constant(RepresentationId.E8_6, 1.0, ctx)
        self.assertLessEqual(abs(value - 0.5), 1e-10)
        self.assertLessEqual(abs(closed - 0.5), 1e-15)
        with self.assertRaises(DomainError):
            moment_constant(RepresentationId.E8_8, 1.0, ctx)

    def test_coefficients(self):
        ctx = QContext(0.5)
        for rep in (RepresentationId.P4_1, RepresentationId.C4_1J1):
            self.assertLessEqual(coefficient_verify(rep, 0.75, ctx), 1e-10)
        with self.assertRaises(DomainError):
            coefficient_verify(RepresentationId.P5_1, 0.75, ctx)
        with self.assertRaises(DomainError):
            coefficient_verify(RepresentationId.P4_1, 0.0, ctx)

    def test_reduction_proof(self):
        residuals = reduction_proof(QContext(0.5))
        reductions = {rep.reduction for rep in RepresentationId if rep.reduction is not None}
        self.assertSetEqual(set(residuals), reductions)
        for name, residual in residuals.items():
            self.assertLessEqual(residual, 1e-12, name)

    def test_double_integral_constants(self):
        ctx = QContext(0.5)
        with self.assertLogs('qbmf.special.representations', level='WARNING'):
            gamma_sq, series = double_integral_constants(ctx)
        self.assertIsNone(series)
        self.assertGreater(gamma_sq, 0)


class TestClassicalLimit(unittest.TestCase):

    def test_first_kind_limit(self):
        errors = classical_limit_check(RepresentationId.P4_1, 0.75, 1.0, k_list=(3, 4, 5))
        self.assertEqual(len(errors), 3)
        self.assertListEqual([q for q, _ in errors], [0.875, 0.9375, 0.96875])
        values = [error for _, error in errors]
        self.assertTrue(values[0] > values[1] > values[2], values)

    def test_macdonald_limits(self):
        for rep in (RepresentationId.P5_1, RepresentationId.P6_1):
            errors = classical_limit_check(rep, 1.5, 1.0, k_list=(3, 4, 5))
            self.assertListEqual([q for q, _ in errors], [0.875, 0.9375, 0.96875])
            values = [error for _, error in errors]
            self.assertTrue(values[0] > values[1] > values[2], f'{rep.value}: {values}')
            self.assertLessEqual(values[-1], 0.1, rep.value)

    def test_unsupported(self):
        with self.assertRaises(DomainError):
            classical_limit_check(RepresentationId.E8_2, 0.75, 1.0, k_list=(3,))


if __name__ == '__main__':
    unittest.main()

# -*- coding: utf-8 -*-

"""
Exception types raised by the q-series evaluators.

All errors derive from QSeriesError and additionally from the closest builtin exception, so callers
catching ValueError, ZeroDivisionError or ArithmeticError keep working.

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

__all__ = ('DomainError', 'IntegerOrderError', 'PoleError', 'QSeriesError', 'RadiusError',
           'TailNotConverged')


class QSeriesError(Exception):
    """ Base class for all errors raised by qbmf.special """
    pass


class DomainError(QSeriesError, ValueError):
    """ An argument lies outside the domain of the requested operation """
    pass


class RadiusError(DomainError):
    """ Argument outside the convergence radius of a series that is never continued """
    pass


class IntegerOrderError(DomainError):
    """ Integer order passed to a function only defined for non-integer orders """
    pass


class PoleError(QSeriesError, ZeroDivisionError):
    """ Evaluation hit a pole (vanishing denominator factor) """
    pass


class TailNotConverged(QSeriesError, ArithmeticError):
    """ A series, product or lattice tail failed the termination criterion within its term budget,
    or its partial sums became non-finite.
    """
    pass

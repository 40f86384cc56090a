# -*- coding: utf-8 -*-

"""
Jackson q-integrals over the lattices {+-q^m}, the q-difference operator and residual checks of
the q-integration by parts formulas.

Integrands are called with 1-d numpy arrays of lattice nodes and must return an array whose first
axis runs over the nodes. Trailing axes are carried through, so a single call integrates a whole
batch of integrands (this is how double integrals are evaluated).

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

__all__ = ('JacksonDomain', 'LatticeTruncation', 'boundary_limit', 'dq_diff', 'ibp_residual',
           'jackson_integral')

import numpy as np
from enum import Enum
from typing import Any, Callable, Optional, Tuple

from qbmf.core.logger import get_logger
from qbmf.util.constraints import ScalarConstraint
from qbmf.special.errors import DomainError, TailNotConverged
from qbmf.special.qcore import CompensatedSum, QContext, as_complex

_log = get_logger(__name__)

# Number of lattice nodes evaluated per integrand call
_BLOCK = 64

_m_min_constraint = ScalarConstraint(default=1, bounds=(0, 2**31 - 1), enforce_int=True,
                                     name='m_min_abs')
_m_max_constraint = ScalarConstraint(default=2000, bounds=(1, 2**31 - 1), enforce_int=True,
                                     name='m_max_abs')


class JacksonDomain(Enum):
    """ The integration lattices. """
    SymmetricUnit = 'symmetric_unit'  # [-1, 1], nodes +-q^m, m >= 0
    HalfLine = 'half_line'  # [0, inf), nodes q^m, m in Z
    RealLine = 'real_line'  # (-inf, inf), nodes +-q^m, m in Z
    UnitInterval = 'unit_interval'  # [0, 1], nodes q^m, m >= 0

    @property
    def is_symmetric(self) -> bool:
        return self in (JacksonDomain.SymmetricUnit, JacksonDomain.RealLine)

    @property
    def is_improper(self) -> bool:
        return self in (JacksonDomain.HalfLine, JacksonDomain.RealLine)


class LatticeTruncation:
    """ Extent limits for lattice sums.

    The tail criterion of the context tolerance is not applied before m_min_abs nodes have been
    summed on a side. Reaching m_max_abs nodes on a side without meeting the criterion raises
    TailNotConverged.
    """

    def __init__(self, m_min_abs: Optional[int] = 1, m_max_abs: Optional[int] = 2000) -> None:
        try:
            _m_min_constraint.check(m_min_abs)
            _m_max_constraint.check(m_max_abs)
        except (TypeError, ValueError) as err:
            raise DomainError(f'Invalid lattice truncation: {err}') from None
        if m_min_abs > m_max_abs:
            raise DomainError(f'm_min_abs ({m_min_abs:d}) must not exceed m_max_abs '
                              f'({m_max_abs:d})')
        self._m_min_abs = int(m_min_abs)
        self._m_max_abs = int(m_max_abs)

    @property
    def m_min_abs(self) -> int:
        return self._m_min_abs

    @property
    def m_max_abs(self) -> int:
        return self._m_max_abs

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, LatticeTruncation):
            return NotImplemented
        return (self._m_min_abs, self._m_max_abs) == (other._m_min_abs, other._m_max_abs)

    def __hash__(self) -> int:
        return hash((self._m_min_abs, self._m_max_abs))

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(m_min_abs={self._m_min_abs!r}, ' \
               f'm_max_abs={self._m_max_abs!r})'


def _evaluate(f: Callable, nodes: np.ndarray) -> np.ndarray:
    values = np.asarray(f(nodes), dtype=complex)
    if values.ndim == 0 or values.shape[0] != nodes.shape[0]:
        values = np.broadcast_to(values, nodes.shape + values.shape[values.ndim > 0:])
    return values


def _one_sided_sum(f: Callable,
                   base: float,
                   step: int,
                   symmetric: bool,
                   ctx: QContext,
                   trunc: LatticeTruncation,
                   what: str) -> Tuple[np.ndarray, int]:
    """ Sums (1 - base) * x * [f(x) (+ f(-x))] over x = base^m, m = 0, step, 2*step, ... for
    step = 1 and m = -1, -2, ... for step = -1.
    """
    tol = ctx.tol
    acc = None
    small = 0
    count = 0
    first = 0 if step > 0 else -1
    while True:
        exponents = first + step * (count + np.arange(_BLOCK))
        with np.errstate(over='ignore', invalid='ignore', divide='ignore', under='ignore'):
            nodes = np.power(base, exponents.astype(float))
            values = _evaluate(f, nodes)
            if symmetric:
                values = values + _evaluate(f, -nodes)
            weights = ((1 - base) * nodes).reshape((-1,) + (1,) * (values.ndim - 1))
            terms = weights * values
        for term in terms:
            if acc is None:
                acc = CompensatedSum(np.zeros_like(term))
            if not np.all(np.isfinite(term)):
                raise TailNotConverged(f'{what}: non-finite lattice term after {count:d} nodes')
            acc.add(term)
            count += 1
            total = acc.value
            if count >= trunc.m_min_abs and np.all(
                    np.abs(term) < tol.eps_rel * (np.abs(total) + 1)):
                small += 1
                if small >= tol.consecutive_small:
                    return total, count
            else:
                small = 0
            if count >= trunc.m_max_abs:
                raise TailNotConverged(
                    f'{what}: lattice tail did not decay within {trunc.m_max_abs:d} nodes. The '
                    f'integrand is not absolutely q-integrable on this lattice.'
                )


def jackson_integral(f: Callable,
                     domain: JacksonDomain,
                     ctx: QContext,
                     trunc: Optional[LatticeTruncation] = None,
                     base: Optional[float] = None) -> Any:
    """ Jackson q-integral of f over the given lattice.

    @param callable f: vectorized integrand, called with 1-d arrays of lattice nodes
    @param JacksonDomain domain: integration lattice
    @param QContext ctx: deformation base and tail tolerance
    @param LatticeTruncation trunc: optional, lattice extent limits
    @param float base: optional, lattice base (defaults to ctx.q, e.g. ctx.q2 for d_{q^2}x)

    @return: complex for scalar integrands, complex array for batched integrands
    """
    if not isinstance(domain, JacksonDomain):
        raise DomainError(f'Unknown integration domain {domain!r}')
    trunc = LatticeTruncation() if trunc is None else trunc
    base = ctx.q if base is None else float(base)
    if not 0 < base < 1:
        raise DomainError(f'Lattice base must lie in (0, 1), received {base!r}')
    symmetric = domain.is_symmetric
    total, n_pos = _one_sided_sum(f, base, 1, symmetric, ctx, trunc, f'{domain.name} (m >= 0)')
    n_neg = 0
    if domain.is_improper:
        negative, n_neg = _one_sided_sum(f, base, -1, symmetric, ctx, trunc,
                                         f'{domain.name} (m < 0)')
        total = total + negative
    _log.debug(f'Jackson integral over {domain.name} used {n_pos:d} nodes with m >= 0 and '
               f'{n_neg:d} nodes with m < 0')
    if total.ndim == 0:
        return complex(total)
    return total


def dq_diff(f: Callable, x: Any, ctx: QContext, base: Optional[float] = None) -> Any:
    """ The q-difference operator (d_q f)(x) = [f(x) - f(base*x)] / ((1 - base) x).

    @param callable f: vectorized function
    @param x: nonzero scalar or array
    @param QContext ctx: deformation base
    @param float base: optional, defaults to ctx.q

    @return: complex scalar or array
    """
    base = ctx.q if base is None else float(base)
    arr = as_complex(x, 'x')
    if np.any(arr == 0):
        raise DomainError('The q-difference operator is undefined at x = 0')
    result = (np.asarray(f(arr), dtype=complex) - np.asarray(f(base * arr), dtype=complex)) / (
            (1 - base) * arr)
    if np.ndim(x) == 0 and not isinstance(x, np.ndarray):
        return complex(result)
    return result


def boundary_limit(g: Callable,
                   toward: str,
                   ctx: QContext,
                   trunc: Optional[LatticeTruncation] = None,
                   sign: Optional[int] = 1) -> complex:
    """ Limit of g along the lattice sign*q^(-m) (toward='infinity') or sign*q^m (toward='zero')
    for m -> infinity. Successive lattice values must settle within the context tolerance.
    """
    trunc = LatticeTruncation() if trunc is None else trunc
    if toward not in ('infinity', 'zero'):
        raise DomainError(f'toward must be "infinity" or "zero", received {toward!r}')
    step = -1 if toward == 'infinity' else 1
    tol = ctx.tol
    previous = None
    small = 0
    for m in range(trunc.m_max_abs):
        with np.errstate(over='ignore', invalid='ignore', divide='ignore', under='ignore'):
            node = sign * ctx.q ** (step * m)
            value = complex(np.asarray(g(np.array([node])), dtype=complex).ravel()[0])
        if not np.isfinite(value):
            break
        if previous is not None and abs(value - previous) < tol.eps_rel * (abs(value) + 1):
            small += 1
            if small >= tol.consecutive_small:
                return 0j if abs(value) < tol.eps_rel else value
        else:
            small = 0
        previous = value
    raise TailNotConverged(f'Boundary value toward {toward} (sign {sign:+d}) did not settle')


def ibp_residual(phi: Callable,
                 psi: Callable,
                 domain: JacksonDomain,
                 ctx: QContext,
                 trunc: Optional[LatticeTruncation] = None) -> float:
    """ Residual |LHS - RHS| of the q-integration by parts formula

        int phi(x) d_q psi(x) d_qx = [boundary terms] - int (d_q phi)(x) psi(qx) d_qx

    on [-1, 1] (boundary phi psi(1) - phi psi(-1)), on [0, inf) (lim phi psi(q^-m) - phi psi(q^m))
    and on the real line, where the negative half enters with a minus sign:
    lim phi psi(q^-m) - phi psi(-q^-m) + phi psi(-q^m) - phi psi(q^m).
    """
    if domain is JacksonDomain.UnitInterval:
        raise DomainError('Integration by parts is checked on SymmetricUnit, HalfLine and '
                          'RealLine only')
    trunc = LatticeTruncation() if trunc is None else trunc
    q = ctx.q

    def lhs_integrand(x):
        return np.asarray(phi(x), dtype=complex) * dq_diff(psi, x, ctx)

    def rhs_integrand(x):
        return dq_diff(phi, x, ctx) * np.asarray(psi(q * x), dtype=complex)

    def product(x):
        return np.asarray(phi(x), dtype=complex) * np.asarray(psi(x), dtype=complex)

    lhs = jackson_integral(lhs_integrand, domain, ctx, trunc)
    integral = jackson_integral(rhs_integrand, domain, ctx, trunc)
    if domain is JacksonDomain.SymmetricUnit:
        values = np.asarray(product(np.array([1.0, -1.0])), dtype=complex)
        boundary = values[0] - values[1]
    elif domain is JacksonDomain.HalfLine:
        boundary = boundary_limit(product, 'infinity', ctx, trunc) - \
                   boundary_limit(product, 'zero', ctx, trunc)
    else:
        boundary = boundary_limit(product, 'infinity', ctx, trunc) - \
                   boundary_limit(product, 'infinity', ctx, trunc, sign=-1) + \
                   boundary_limit(product, 'zero', ctx, trunc, sign=-1) - \
                   boundary_limit(product, 'zero', ctx, trunc)
    residual = abs(lhs - (boundary - integral))
    _log.debug(f'Integration by parts on {domain.name}: lhs={lhs!r}, boundary={boundary!r}, '
               f'residual={residual:.3e}')
    return float(residual)

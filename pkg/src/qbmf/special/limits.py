# -*- coding: utf-8 -*-

"""
q -> 1 limit studies along the sequence q_k = 1 - 2^(-k).

Each study produces a LimitTable of (k, q_k, value, target, error) rows, reports whether the error
sequence decreases strictly and fits the geometric convergence model error ~ C 2^(-rate k).


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

__all__ = ('LimitTable', 'function_limit_table', 'kernel_exponent_table', 'q_nu_limit_table',
           'q_sequence', 'representation_limit_table')

import math
import numpy as np
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from qbmf.core.logger import get_logger
from qbmf.special.errors import DomainError
from qbmf.special.qbessel import BesselKind, BesselParams, bessel_eval, classical_oracle
from qbmf.special.qbinomial import Q_nu, classical_exponent
from qbmf.special.qcore import QContext, Tolerance
from qbmf.special.representations import RepresentationId, classical_limit_check
from qbmf.special.representations import kernel_weights, limit_context
from qbmf.util.fit_models.convergence import GeometricConvergence

_log = get_logger(__name__)


def q_sequence(k_list: Iterable[int]) -> List[Tuple[int, float]]:
    """ Pairs (k, 1 - 2^-k) for every positive integer k in k_list """
    pairs = list()
    for k in k_list:
        if int(k) != k or k < 1:
            raise DomainError(f'Limit levels must be positive integers, received {k!r}')
        pairs.append((int(k), 1 - 2.0 ** (-int(k))))
    return pairs


class LimitTable:
    """ Error table of a single q -> 1 limit study """

    FIELDS = ('table', 'k', 'q', 'value', 'target', 'error')

    def __init__(self, name: str, rows: Sequence[Tuple[int, float, float, float, float]]) -> None:
        self._name = str(name)
        self._rows = tuple((int(k), float(q), float(value), float(target), float(error)) for
                           k, q, value, target, error in rows)
        self._fit = None

    @property
    def name(self) -> str:
        return self._name

    @property
    def rows(self) -> Tuple[Tuple[int, float, float, float, float], ...]:
        return self._rows

    @property
    def ks(self) -> np.ndarray:
        return np.array([row[0] for row in self._rows], dtype=float)

    @property
    def errors(self) -> np.ndarray:
        return np.array([row[4] for row in self._rows], dtype=float)

    @property
    def monotone(self) -> bool:
        """ True if the error decreases strictly from row to row """
        errors = self.errors
        return errors.size > 1 and bool(np.all(np.diff(errors) < 0))

    @property
    def final_error(self) -> float:
        return self._rows[-1][4] if self._rows else math.nan

    @property
    def final_relative_error(self) -> float:
        if not self._rows:
            return math.nan
        target = self._rows[-1][3]
        return self._rows[-1][4] / abs(target) if target != 0 else math.inf

    @property
    def rate(self) -> Optional[float]:
        """ Fitted convergence rate in powers of 2 per level, None if fewer than three positive
        errors are available.
        """
        result = self.fit()
        return None if result is None else float(result.params['rate'].value)

    def fit(self):
        """ Fits GeometricConvergence to the error sequence with relative weights.

        @return lmfit.model.ModelResult: fit result, None if fewer than three positive errors
        """
        if self._fit is None:
            ks, errors = self.ks, self.errors
            mask = np.isfinite(errors) & (errors > 0)
            if np.count_nonzero(mask) < 3:
                return None
            model = GeometricConvergence()
            params = model.estimators['Log-linear'](errors[mask], ks[mask])
            self._fit = model.fit(errors[mask], params, x=ks[mask], weights=1 / errors[mask])
            _log.debug(f'{self._name}: convergence rate {self._fit.params["rate"].value:.3f}')
        return self._fit

    def as_dicts(self) -> List[Dict[str, Any]]:
        return [dict(zip(self.FIELDS, (self._name,) + row)) for row in self._rows]

    def summary(self) -> Dict[str, Any]:
        return {'table': self._name,
                'monotone': self.monotone,
                'final_error': self.final_error,
                'final_relative_error': self.final_relative_error,
                'rate': self.rate}

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(name={self._name!r}, rows={len(self._rows):d}, ' \
               f'monotone={self.monotone!r})'


def q_nu_limit_table(nu: Optional[float] = 0.5,
                     k_list: Optional[Iterable[int]] = range(4, 11),
                     tol: Optional[Tolerance] = None) -> LimitTable:
    """ |Q_nu - pi/2| along q_k. """
    rows = list()
    for k, q in q_sequence(k_list):
        ctx, trunc = limit_context(q, tol)
        value = Q_nu(nu, ctx, trunc)
        rows.append((k, q, value, math.pi / 2, abs(value - math.pi / 2)))
    table = LimitTable(f'Q_nu(nu={nu!r})', rows)
    _log.info(f'{table.name}: final error {table.final_error:.3e}, monotone {table.monotone}')
    return table


def function_limit_table(kind: BesselKind,
                         nu: float,
                         s: float,
                         k_list: Optional[Iterable[int]] = range(3, 9),
                         tol: Optional[Tolerance] = None) -> LimitTable:
    """ Distance of I^(1) or K^(1) at q_k from the classical I_nu or K_nu at the same s """
    kind = BesselKind(kind)
    if kind not in (BesselKind.I1, BesselKind.K1):
        raise DomainError(f'Function limits are tabulated for I1 and K1, received {kind.name}')
    target = float(classical_oracle(kind.family, nu, s))
    rows = list()
    for k, q in q_sequence(k_list):
        ctx, _ = limit_context(q, tol)
        value = complex(bessel_eval(kind, BesselParams(nu, s, ctx)))
        rows.append((k, q, value.real, target, abs(value - target)))
    table = LimitTable(f'{kind.name}(nu={nu!r}, s={s!r})', rows)
    _log.info(f'{table.name}: final error {table.final_error:.3e}, monotone {table.monotone}')
    return table


def representation_limit_table(rep: RepresentationId,
                               nu: float,
                               s: float,
                               k_list: Optional[Iterable[int]] = range(3, 9),
                               tol: Optional[Tolerance] = None) -> LimitTable:
    """ classical_limit_check of rep as a LimitTable. Only distances are recorded, the value column
    holds target + error.
    """
    rep = RepresentationId(rep)
    pairs = q_sequence(k_list)
    target = float(classical_oracle(rep.target.family, nu, s))
    checked = classical_limit_check(rep, nu, s, [k for k, _ in pairs], tol)
    rows = [(k, q, target + error, target, error) for (k, _), (q, error) in zip(pairs, checked)]
    table = LimitTable(f'{rep.value}(nu={nu!r}, s={s!r})', rows)
    _log.info(f'{table.name}: final error {table.final_error:.3e}, monotone {table.monotone}')
    return table


def _kernel_exponents(rep: RepresentationId, nu: float) -> Tuple[float, float, int, float]:
    # exponents do not depend on q, read them off at a fixed reference base
    ctx = QContext(0.5)
    weight = kernel_weights(rep, nu, ctx)[0]
    a, b = weight.kernel.a.real, weight.kernel.b.real
    epsilon = 1 if a > 0 else -1
    two_log_q = 2 * math.log(ctx.q)
    alpha = math.log(abs(a)) / two_log_q
    beta = math.log(abs(b)) / two_log_q
    return alpha, beta, epsilon, weight.kernel.gamma


def kernel_exponent_table(rep: RepresentationId,
                          nu: float,
                          z_pair: Optional[Tuple[float, float]] = None,
                          k_list: Optional[Iterable[int]] = range(4, 11),
                          tol: Optional[Tolerance] = None) -> LimitTable:
    """ Ratio test estimate of the exponent e in R(z) ~ C z^gamma (1 - eps z^2)^e for the outer
    kernel of rep, compared with its classical value beta - alpha.

    z_pair defaults to (0.3, 0.6) on the symmetric unit interval and (0.5, 2.0) otherwise.
    """
    rep = RepresentationId(rep)
    alpha, beta, epsilon, gamma = _kernel_exponents(rep, nu)
    if z_pair is None:
        z_pair = (0.3, 0.6) if epsilon == 1 else (0.5, 2.0)
    target = beta - alpha
    rows = list()
    for k, q in q_sequence(k_list):
        ctx, _ = limit_context(q, tol)
        value = classical_exponent(alpha, beta, z_pair, ctx, epsilon, gamma)
        rows.append((k, q, value, target, abs(value - target)))
    table = LimitTable(f'{rep.value} kernel exponent(nu={nu!r})', rows)
    _log.info(f'{table.name}: final error {table.final_error:.3e}, monotone {table.monotone}')
    return table

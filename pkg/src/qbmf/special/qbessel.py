# -*- coding: utf-8 -*-

"""
The q-Bessel family J^(1), J^(2), I^(1), I^(2) and the q-Bessel-Macdonald functions K^(1), K^(2)
in base q^2.

All functions take the argument s with the scaling used throughout the package, i.e.
bessel_eval(BesselKind.I1, BesselParams(nu, s, ctx)) returns I_nu^(1)((1 - q^2) s; q^2):

    I_nu^(1) = (s/2)^nu / Gamma_(q^2)(nu + 1) * sum_n (lambda s / 2)^(2n)
               / ((q^2;q^2)_n (q^(2nu+2);q^2)_n)

with the extra factor q^(2n(nu+n)) in the n-th term for the second kind and alternating signs for
the J functions.

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

__all__ = ('INTEGER_ORDER_GUARD', 'BesselKind', 'BesselParams', 'a_nu', 'a_nu_product',
           'asymptotic_eval', 'bessel_eval', 'bessel_series_terms', 'bessel_term_count',
           'classical_oracle', 'diff_eq_residual', 'j1_real_continuation', 'k_integer_order')

import math
import numpy as np
from enum import Enum
from functools import lru_cache
from typing import Any, Optional, Tuple

from scipy import special as _sp

from qbmf.core.logger import get_logger
from qbmf.special.errors import DomainError, IntegerOrderError, PoleError, RadiusError
from qbmf.special.errors import TailNotConverged
from qbmf.special.qcore import CompensatedSum, Eq_exp, QContext, as_complex, eq_exp, phi21
from qbmf.special.qcore import qgamma, sum_by_ratio

_log = get_logger(__name__)

# K is rejected for |sin(nu pi)| below this value
INTEGER_ORDER_GUARD = 1e-8

# Offsets of the Richardson extrapolation towards integer orders
_RICHARDSON_STEPS = (1e-2, 5e-3)


class BesselKind(Enum):
    J1 = 'J1'
    J2 = 'J2'
    I1 = 'I1'
    I2 = 'I2'
    K1 = 'K1'
    K2 = 'K2'

    @property
    def family(self) -> str:
        """ 'J', 'I' or 'K' """
        return self.value[0]

    @property
    def index(self) -> int:
        """ 1 for the first kind, 2 for the second kind """
        return int(self.value[1])

    @property
    def entire(self) -> bool:
        return self.index == 2


class BesselParams:
    """ Order nu, argument s and deformation context of a single evaluation.

    s may be a scalar or a numpy array. Fractional powers (s/2)^nu use the principal branch,
    complex s is therefore only meaningful for the rotation I <-> J.
    """

    def __init__(self, nu: float, s: Any, ctx: QContext) -> None:
        if not isinstance(ctx, QContext):
            raise TypeError(f'ctx must be a QContext instance, received {type(ctx).__name__}')
        nu = float(nu)
        if not math.isfinite(nu):
            raise DomainError(f'Order nu must be finite, received {nu!r}')
        self._nu = nu
        self._s = s
        self._s_arr = as_complex(s, 's')
        self._ctx = ctx

    @property
    def nu(self) -> float:
        return self._nu

    @property
    def s(self) -> Any:
        return self._s

    @property
    def s_array(self) -> np.ndarray:
        return self._s_arr

    @property
    def ctx(self) -> QContext:
        return self._ctx

    @property
    def is_real_positive(self) -> bool:
        return bool(np.all(self._s_arr.imag == 0) and np.all(self._s_arr.real > 0))

    def with_nu(self, nu: float) -> 'BesselParams':
        return BesselParams(nu, self._s, self._ctx)

    def with_s(self, s: Any) -> 'BesselParams':
        return BesselParams(self._nu, s, self._ctx)

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(nu={self._nu!r}, s={self._s!r}, ctx={self._ctx!r})'


def _out(value: np.ndarray, like: Any) -> Any:
    if not np.all(np.isfinite(value)):
        raise TailNotConverged('Bessel evaluation produced non-finite values')
    if np.ndim(like) == 0 and not isinstance(like, np.ndarray):
        return complex(value)
    return value


def _half_power(arr: np.ndarray, nu: float) -> np.ndarray:
    half = arr / 2
    with np.errstate(divide='ignore', invalid='ignore'):
        if float(nu).is_integer():
            value = np.power(half, int(nu))
        elif np.all(half.imag == 0) and np.all(half.real >= 0):
            value = np.power(half.real, nu).astype(complex)
        else:
            value = np.power(half, nu)
    if not np.all(np.isfinite(value)):
        raise DomainError(f'(s/2)^nu is singular at s = 0 for nu={nu!r}')
    return value


def _check_radius(arr: np.ndarray, ctx: QContext) -> None:
    radius = 1 / ctx.lam
    if arr.size and np.max(np.abs(arr)) >= radius:
        raise RadiusError(f'First kind series converges for |s| < 1/(1-q^2) = {radius:.6g} only, '
                          f'received max |s| = {np.max(np.abs(arr)):.6g}')


def _ratio_function(index: int, sign: int, nu: float, arr: np.ndarray, ctx: QContext):
    q, p, lam = ctx.q, ctx.q2, ctx.lam
    x = sign * lam * lam * arr * arr / 4

    def ratio(n):
        denominator = (1 - p ** (n + 1)) * (1 - p ** (nu + n + 1))
        if denominator == 0:
            raise PoleError(f'Bessel series denominator vanishes for nu={nu!r}')
        value = x / denominator
        if index == 2:
            value = value * q ** (2 * (nu + 2 * n + 1))
        return value

    return ratio


def _power_series(index: int, sign: int, nu: float, arr: np.ndarray, ctx: QContext,
                  check_radius: Optional[bool] = True) -> Tuple[np.ndarray, int]:
    """ Order nu series of kind index with sign +1 (I) or -1 (J). Returns (value, term count). """
    if index == 1 and check_radius:
        _check_radius(arr, ctx)
    lead = _half_power(arr, nu) / qgamma(nu + 1, ctx, ctx.q2)
    total, n_terms = sum_by_ratio(np.ones_like(arr), _ratio_function(index, sign, nu, arr, ctx),
                                  ctx.tol, what=f'Bessel series (kind {index:d}, nu={nu:g})')
    return lead * total, n_terms


def _check_noninteger(nu: float) -> None:
    if abs(math.sin(nu * math.pi)) < INTEGER_ORDER_GUARD:
        raise IntegerOrderError(f'K_nu is defined for non-integer orders only, received '
                                f'nu={nu!r}. Use k_integer_order for an approximation.')


@lru_cache(maxsize=256)
def _a_nu_cached(nu: float, ctx: QContext) -> float:
    q, lam = ctx.q, ctx.lam
    i_two, _ = _power_series(2, 1, nu, np.array(2 / lam, dtype=complex), ctx)
    numerator = math.sqrt(2 / lam) * eq_exp(-1.0, ctx).real * complex(i_two).real
    denominator = phi21(q ** (nu + 0.5), q ** (0.5 - nu), -q, q, q, ctx).real
    if abs(denominator) < ctx.tol.eps_rel:
        raise PoleError(f'2Phi1 normalization of a_nu vanishes for nu={nu!r}')
    return numerator / denominator


def a_nu(nu: float, ctx: QContext) -> float:
    """ Normalization constant of the q-Bessel-Macdonald functions,

        a_nu = sqrt(2 / lambda) e_q(-1) I_nu^(2)(2; q^2) / 2Phi1(q^(nu+1/2), q^(-nu+1/2); -q; q, q)

    where I_nu^(2)(2; q^2) is the second kind function at s = 2 / lambda.

    @param float nu: order
    @param QContext ctx: deformation base and tolerance

    @return float: a_nu
    """
    return _a_nu_cached(float(nu), ctx)


def a_nu_product(nu: float, ctx: QContext) -> Tuple[float, float]:
    """ Both sides of the product formula
        a_nu a_-nu = q^(-nu + 1/2) / (2 Gamma_(q^2)(nu) Gamma_(q^2)(1 - nu) sin(nu pi)).

    The two sides agree in the limit q -> 1 only.

    @return tuple: (a_nu * a_-nu, right hand side)
    """
    _check_noninteger(nu)
    p = ctx.q2
    lhs = a_nu(nu, ctx) * a_nu(-nu, ctx)
    rhs = ctx.q ** (0.5 - nu) / (2 * qgamma(nu, ctx, p) * qgamma(1 - nu, ctx, p) *
                                 math.sin(nu * math.pi))
    return lhs, rhs


def _k_prefactor(nu: float, ctx: QContext) -> Tuple[float, float, float]:
    a_plus, a_minus = a_nu(nu, ctx), a_nu(-nu, ctx)
    product = a_plus * a_minus
    if product <= 0:
        raise DomainError(f'a_nu a_-nu = {product:.6g} is not positive for nu={nu!r}')
    prefactor = ctx.q ** (0.5 - nu * nu) / (4 * product ** 1.5 * math.sin(nu * math.pi))
    return prefactor, a_plus, a_minus


def _evaluate(kind: BesselKind, p: BesselParams) -> Tuple[np.ndarray, int]:
    kind = BesselKind(kind)
    arr, nu, ctx = p.s_array, p.nu, p.ctx
    if kind.family in ('J', 'I'):
        sign = -1 if kind.family == 'J' else 1
        return _power_series(kind.index, sign, nu, arr, ctx)
    _check_noninteger(nu)
    if not p.is_real_positive:
        raise DomainError('K_nu is evaluated for real s > 0 only')
    prefactor, a_plus, a_minus = _k_prefactor(nu, ctx)
    i_minus, n_minus = _power_series(kind.index, 1, -nu, arr, ctx)
    i_plus, n_plus = _power_series(kind.index, 1, nu, arr, ctx)
    return prefactor * (a_plus * i_minus - a_minus * i_plus), n_minus + n_plus


def bessel_eval(kind: BesselKind, p: BesselParams) -> Any:
    """ Evaluates one of the six functions at the argument (1 - q^2) s.

    @param BesselKind kind: function to evaluate
    @param BesselParams p: order, argument and context

    @return: complex scalar (or array for array s)
    """
    value, n_terms = _evaluate(kind, p)
    _log.debug(f'{BesselKind(kind).value}(nu={p.nu:g}) used {n_terms:d} series terms')
    return _out(value, p.s)


def bessel_term_count(kind: BesselKind, p: BesselParams) -> int:
    """ Number of series terms needed by bessel_eval (both orders for K) """
    return _evaluate(kind, p)[1]


def bessel_series_terms(kind: BesselKind, p: BesselParams, count: int) -> np.ndarray:
    """ The first count terms of the I or J series at scalar s, lead power included """
    kind = BesselKind(kind)
    if kind.family == 'K':
        raise DomainError('Series terms are only defined for the I and J functions')
    arr = p.s_array
    if arr.ndim != 0:
        raise DomainError('Series terms are listed for scalar s only')
    ratio = _ratio_function(kind.index, -1 if kind.family == 'J' else 1, p.nu, arr, p.ctx)
    terms = np.empty(int(count), dtype=complex)
    term = complex(_half_power(arr, p.nu)) / qgamma(p.nu + 1, p.ctx, p.ctx.q2)
    for n in range(int(count)):
        terms[n] = term
        term = term * complex(ratio(n))
    return terms


def diff_eq_residual(kind: BesselKind, p: BesselParams) -> float:
    """ Normalized residual of the second order q-difference equation of kind.

    First kind (I1, K1; J1 with the sign of the s^2 term flipped):
        [1 - (lambda/2)^2 q^-2 s^2] f(s/q) - (q^-nu + q^nu) f(s) + f(qs) = 0
    Second kind (I2, K2; J2 likewise):
        f(s/q) - (q^-nu + q^nu) f(s) + [1 - (lambda/2)^2 s^2] f(qs) = 0

    @return float: |sum of the three terms| / max |term|
    """
    kind = BesselKind(kind)
    ctx, nu = p.ctx, p.nu
    q, lam = ctx.q, ctx.lam
    arr = p.s_array
    sign = -1 if kind.family == 'J' else 1
    f_down = np.asarray(bessel_eval(kind, p.with_s(arr / q)), dtype=complex)
    f_mid = np.asarray(bessel_eval(kind, p.with_s(arr)), dtype=complex)
    f_up = np.asarray(bessel_eval(kind, p.with_s(q * arr)), dtype=complex)
    shift = sign * (lam / 2) ** 2 * arr * arr
    if kind.index == 1:
        t_down, t_up = (1 - shift / (q * q)) * f_down, f_up
    else:
        t_down, t_up = f_down, (1 - shift) * f_up
    t_mid = -(q ** (-nu) + q ** nu) * f_mid
    scale = np.maximum(np.maximum(np.abs(t_down), np.abs(t_mid)), np.abs(t_up))
    scale = np.where(scale > 0, scale, 1.0)
    return float(np.max(np.abs(t_down + t_mid + t_up) / scale))


def asymptotic_eval(kind: BesselKind, p: BesselParams) -> Any:
    """ Large argument forms of I^(2) and K^(2):

        I_nu^(2) = a_nu / sqrt(s) [E_q(lambda s / 2) Phi_nu(s)
                                   + i e^(i nu pi) E_q(-lambda s / 2) Phi_nu(-s)]
        K_nu^(2) = q^(-nu^2 + 1/2) / (2 sqrt(a_nu a_-nu s)) E_q(-lambda s / 2) Phi_nu(-s)

    with Phi_nu(s) = 2Phi1(q^(nu+1/2), q^(-nu+1/2); -q; q, 2q / (lambda s)). The K^(2) form is the
    combination of the two I^(2) forms of order +-nu. Both are exact at half-integer nu and
    approximate (relative mismatch 1e-4 to 1e-2) elsewhere.

    @return: complex scalar or array
    """
    kind = BesselKind(kind)
    if kind not in (BesselKind.I2, BesselKind.K2):
        raise DomainError(f'Asymptotic forms exist for I2 and K2 only, received {kind.value}')
    if not p.is_real_positive:
        raise DomainError('Asymptotic forms are evaluated for real s > 0 only')
    ctx, nu = p.ctx, p.nu
    q, lam = ctx.q, ctx.lam
    s = p.s_array.real
    u = 2 * q / (lam * s)
    if np.max(u) >= 1:
        raise DomainError(f'Asymptotic forms require 2q/((1-q^2) s) < 1, i.e. '
                          f's > {2 * q / lam:.6g}')
    phi_plus = np.asarray(phi21(q ** (nu + 0.5), q ** (0.5 - nu), -q, q, u, ctx), dtype=complex)
    phi_minus = np.asarray(phi21(q ** (nu + 0.5), q ** (0.5 - nu), -q, q, -u, ctx), dtype=complex)
    decaying = np.asarray(Eq_exp(-lam * s / 2, ctx), dtype=complex) * phi_minus
    if kind is BesselKind.I2:
        growing = np.asarray(Eq_exp(lam * s / 2, ctx), dtype=complex) * phi_plus
        value = a_nu(nu, ctx) / np.sqrt(s) * (growing + 1j * np.exp(1j * nu * np.pi) * decaying)
    else:
        _check_noninteger(nu)
        product = a_nu(nu, ctx) * a_nu(-nu, ctx)
        if product <= 0:
            raise DomainError(f'a_nu a_-nu = {product:.6g} is not positive for nu={nu!r}')
        value = q ** (0.5 - nu * nu) / (2 * np.sqrt(product * s)) * decaying
    return _out(np.asarray(value, dtype=complex), p.s)


def classical_oracle(family: str, nu: float, s: Any) -> Any:
    """ Classical Bessel functions I_nu, K_nu (and J_nu) from scipy.special, the q -> 1 targets.

    @param str family: 'I', 'K' or 'J'
    @param float nu: order (non-integer for 'K')
    @param s: real argument(s) > 0

    @return: float or numpy array
    """
    family = str(family).upper()[:1]
    arr = np.asarray(s, dtype=float)
    if np.any(arr < 0) or not np.all(np.isfinite(arr)):
        raise DomainError('Classical oracles take finite real s >= 0')
    if family == 'I':
        value = _sp.iv(nu, arr)
    elif family == 'J':
        value = _sp.jv(nu, arr)
    elif family == 'K':
        _check_noninteger(nu)
        if np.any(arr == 0):
            raise DomainError('K_nu is singular at s = 0')
        value = _sp.kv(nu, arr)
    else:
        raise DomainError(f'Unknown classical Bessel family {family!r}')
    if arr.ndim == 0:
        return float(value)
    return value


def _log_form(nu: float, y: np.ndarray, ctx: QContext) -> np.ndarray:
    """ J1 = J2 / (-y^2/4; q^2)_inf with the J2 terms summed in log form, y = lambda x > 0 """
    p, tol = ctx.q2, ctx.tol
    quarter = y * y / 4
    log_norm = np.zeros_like(y)
    v = quarter.copy()
    for _ in range(tol.max_terms):
        log_norm = log_norm + np.log1p(v)
        v = v * p
        if np.max(v) < tol.eps_rel * 1e-5:
            break
    else:
        raise TailNotConverged('Normalizing product of the J1 continuation did not converge')
    log_p = math.log(p)
    log_term = nu * np.log(y / 2) - math.log(qgamma(nu + 1, ctx, p))
    acc = CompensatedSum(np.exp(log_term - log_norm))
    sign = 1.0
    small = 0
    for n in range(1, tol.max_terms):
        log_term = log_term + np.log(quarter) + log_p * (2 * n - 1 + nu) - \
            math.log1p(-p ** n) - math.log1p(-p ** (nu + n))
        sign = -sign
        term = sign * np.exp(log_term - log_norm)
        acc.add(term)
        total = np.abs(acc.value)
        settled = (np.abs(term) < tol.eps_rel * (total + 1e-300)) & (log_term < log_norm)
        if n > 5 and np.all(settled):
            small += 1
            if small >= tol.consecutive_small:
                _log.debug(f'J1 continuation converged after {n + 1:d} terms')
                return acc.value.real
        else:
            small = 0
    raise TailNotConverged(f'J1 continuation did not converge within {tol.max_terms:d} terms')


def j1_real_continuation(nu: float, x: Any, ctx: QContext) -> Any:
    """ J_nu^(1)((1 - q^2) x; q^2) for real x of any size.

    Inside lambda |x| / 2 < 0.8 the power series is used, beyond that the quotient of the entire
    second kind function by (-(lambda x)^2 / 4; q^2)_inf. Negative x requires integer nu.

    @param float nu: order >= 0
    @param x: real scalar or array
    @param QContext ctx: deformation base and tolerance

    @return: float or numpy array
    """
    nu = float(nu)
    if nu < 0:
        raise DomainError(f'J1 continuation is implemented for nu >= 0, received {nu!r}')
    arr = as_complex(x, 'x')
    if np.any(arr.imag != 0):
        raise DomainError('J1 continuation is evaluated on the real axis only')
    real = np.atleast_1d(arr.real)
    if np.any(real < 0) and not nu.is_integer():
        raise DomainError('Negative arguments require an integer order')
    parity = np.where(real < 0, (-1.0) ** int(nu) if nu.is_integer() else 1.0, 1.0)
    ax = np.abs(real)
    y = ctx.lam * ax
    result = np.empty_like(ax)
    near = y / 2 < 0.8
    if np.any(near):
        value, _ = _power_series(1, -1, nu, ax[near].astype(complex), ctx, False)
        result[near] = value.real
    if np.any(~near):
        result[~near] = _log_form(nu, y[~near], ctx)
    result = parity * result
    if np.ndim(x) == 0 and not isinstance(x, np.ndarray):
        return float(result[0])
    return result.reshape(arr.shape)


def k_integer_order(kind: BesselKind, p: BesselParams) -> Any:
    """ Approximate K_n at integer order n by Richardson extrapolation of the symmetric mean
    [K_(n+e) + K_(n-e)] / 2 over e in (1e-2, 5e-3). The result is an approximation only.
    """
    kind = BesselKind(kind)
    if kind.family != 'K':
        raise DomainError(f'Integer order extrapolation applies to K1 and K2, received '
                          f'{kind.value}')
    n = round(p.nu)
    if abs(p.nu - n) > 1e-12:
        raise DomainError(f'Order {p.nu!r} is not an integer')
    means = list()
    for step in _RICHARDSON_STEPS:
        upper = np.asarray(bessel_eval(kind, p.with_nu(n + step)), dtype=complex)
        lower = np.asarray(bessel_eval(kind, p.with_nu(n - step)), dtype=complex)
        means.append(0.5 * (upper + lower))
    ratio = (_RICHARDSON_STEPS[0] / _RICHARDSON_STEPS[1]) ** 2
    value = (ratio * means[1] - means[0]) / (ratio - 1)
    _log.warning(f'{kind.value} at integer order {n:d} is a Richardson extrapolation')
    return _out(value, p.s)

# -*- coding: utf-8 -*-

"""
Truncated power series in two noncommuting variables z, s with zs = q sz, kept in normal order
(all powers of z to the left of all powers of s).

A series stores the coefficient of z^(z_grade + m) s^(s_grade + n) at index (m, n) for
m + n <= order_cap. The real grades carry overall fractional prefactors such as (zs/2)^nu, so the
indices stay integral. Monomials multiply as

    z^A s^B * z^C s^D = q^(-B C) z^(A + C) s^(B + D).

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

__all__ = ('DEFAULT_ORDER_CAP', 'DERIVATIVE_RELATIONS', 'GradedSeries', 'OrderedSeries',
           'bessel_series', 'coefficient_residual', 'expand_product', 'nc_mul', 'normal_order',
           'power_of_zs', 'qexp_series', 'scalar_reduce', 'verify_bessel_ordering',
           'verify_derivative_relations', 'verify_exponential_ordering')

import numpy as np
from typing import Any, Dict, Mapping, Optional, Sequence, Tuple, Union

from qbmf.core.logger import get_logger
from qbmf.special.errors import DomainError, TailNotConverged
from qbmf.special.qcore import QContext, qgamma, qnumber, qpochhammer_n

_log = get_logger(__name__)

DEFAULT_ORDER_CAP = 16

_CoeffInput = Union[np.ndarray, Mapping[Tuple[int, int], complex]]


class OrderedSeries:
    """ Immutable truncated normal ordered series sum_(m+n<=N) c_(m,n) z^m s^n """

    def __init__(self,
                 coeffs: _CoeffInput,
                 ctx: QContext,
                 order_cap: Optional[int] = DEFAULT_ORDER_CAP) -> None:
        if int(order_cap) != order_cap or order_cap < 0:
            raise DomainError(f'order_cap must be a nonnegative integer, received {order_cap!r}')
        order_cap = int(order_cap)
        size = order_cap + 1
        matrix = np.zeros((size, size), dtype=complex)
        if isinstance(coeffs, Mapping):
            for (m, n), value in coeffs.items():
                if m < 0 or n < 0:
                    raise DomainError(f'Negative coefficient index ({m}, {n})')
                if m + n <= order_cap:
                    matrix[m, n] = value
        else:
            given = np.asarray(coeffs, dtype=complex)
            if given.ndim != 2:
                raise DomainError('Coefficient array must be 2-dimensional')
            rows, cols = min(size, given.shape[0]), min(size, given.shape[1])
            matrix[:rows, :cols] = given[:rows, :cols]
        m_idx, n_idx = np.indices(matrix.shape)
        matrix[m_idx + n_idx > order_cap] = 0
        matrix.setflags(write=False)
        self._coeffs = matrix
        self._ctx = ctx
        self._order_cap = order_cap

    @classmethod
    def identity(cls, ctx: QContext, order_cap: Optional[int] = DEFAULT_ORDER_CAP):
        return cls({(0, 0): 1}, ctx, order_cap)

    @classmethod
    def monomial(cls,
                 m: int,
                 n: int,
                 ctx: QContext,
                 order_cap: Optional[int] = DEFAULT_ORDER_CAP,
                 coefficient: Optional[complex] = 1):
        return cls({(m, n): coefficient}, ctx, order_cap)

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def ctx(self) -> QContext:
        return self._ctx

    @property
    def order_cap(self) -> int:
        return self._order_cap

    @property
    def z_grade(self) -> float:
        return 0.0

    @property
    def s_grade(self) -> float:
        return 0.0

    def coefficient(self, m: int, n: int) -> complex:
        if m < 0 or n < 0 or m + n > self._order_cap:
            return 0j
        return complex(self._coeffs[m, n])

    def nonzero(self) -> Dict[Tuple[int, int], complex]:
        """ Nonzero coefficients by index """
        return {(int(m), int(n)): complex(self._coeffs[m, n])
                for m, n in zip(*np.nonzero(self._coeffs))}

    def _rebuild(self, coeffs: np.ndarray, z_grade: float, s_grade: float) -> 'OrderedSeries':
        if z_grade == 0 and s_grade == 0:
            return OrderedSeries(coeffs, self._ctx, self._order_cap)
        return GradedSeries(coeffs, self._ctx, self._order_cap, z_grade, s_grade)

    def shifted(self,
                z: Optional[float] = 0.0,
                s: Optional[float] = 0.0,
                factor: Optional[complex] = 1) -> 'OrderedSeries':
        """ factor * z^z * self * s^s (left multiplication by z and right multiplication by s
        commute with normal order)
        """
        return self._rebuild(self._coeffs * factor, self.z_grade + z, self.s_grade + s)

    def dz(self, scaled: Optional[bool] = False) -> 'OrderedSeries':
        """ q-difference in z acting from the left: z^A s^B -> [A]_q z^(A-1) s^B.
        scaled=True multiplies by 2 / (1 + q).
        """
        q = self._ctx.q
        exponents = self.z_grade + np.arange(self._order_cap + 1)
        factor = qnumber(exponents, q)[:, np.newaxis]
        if scaled:
            factor = factor * 2 / (1 + q)
        return self._rebuild(self._coeffs * factor, self.z_grade - 1, self.s_grade)

    def ds(self, scaled: Optional[bool] = False) -> 'OrderedSeries':
        """ q-difference in s with s^-1 acting from the left: z^A s^B -> q^A [B]_q z^A s^(B-1).
        scaled=True multiplies by 2 / (1 + q).
        """
        q = self._ctx.q
        size = self._order_cap + 1
        a_exp = self.z_grade + np.arange(size)
        b_exp = self.s_grade + np.arange(size)
        factor = np.multiply.outer(np.power(q, a_exp), qnumber(b_exp, q))
        if scaled:
            factor = factor * 2 / (1 + q)
        return self._rebuild(self._coeffs * factor, self.z_grade, self.s_grade - 1)

    def __add__(self, other: 'OrderedSeries') -> 'OrderedSeries':
        _check_compatible(self, other)
        if (self.z_grade, self.s_grade) != (other.z_grade, other.s_grade):
            raise DomainError('Only series with equal grades can be added')
        return self._rebuild(self._coeffs + other._coeffs, self.z_grade, self.s_grade)

    def __neg__(self) -> 'OrderedSeries':
        return self.shifted(factor=-1)

    def __sub__(self, other: 'OrderedSeries') -> 'OrderedSeries':
        return self + (-other)

    def __mul__(self, other: Any) -> 'OrderedSeries':
        if isinstance(other, OrderedSeries):
            return nc_mul(self, other)
        return self.shifted(factor=complex(other))

    def __rmul__(self, other: Any) -> 'OrderedSeries':
        return self.shifted(factor=complex(other))

    def __call__(self, z_val: Any, s_val: Any) -> complex:
        return scalar_reduce(self, z_val, s_val)

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(terms={len(self.nonzero()):d}, ' \
               f'order_cap={self._order_cap:d}, q={self._ctx.q!r}, ' \
               f'z_grade={self.z_grade!r}, s_grade={self.s_grade!r})'


class GradedSeries(OrderedSeries):
    """ Ordered series times z^z_grade on the left and s^s_grade on the right for real grades """

    def __init__(self,
                 coeffs: _CoeffInput,
                 ctx: QContext,
                 order_cap: Optional[int] = DEFAULT_ORDER_CAP,
                 z_grade: Optional[float] = 0.0,
                 s_grade: Optional[float] = 0.0) -> None:
        super().__init__(coeffs, ctx, order_cap)
        self._z_grade = float(z_grade)
        self._s_grade = float(s_grade)

    @property
    def z_grade(self) -> float:
        return self._z_grade

    @property
    def s_grade(self) -> float:
        return self._s_grade


def _check_compatible(x: OrderedSeries, y: OrderedSeries) -> None:
    if x.order_cap != y.order_cap:
        raise DomainError(f'Order caps differ ({x.order_cap:d} != {y.order_cap:d})')
    if x.ctx.q != y.ctx.q:
        raise DomainError(f'Series belong to different bases ({x.ctx.q!r} != {y.ctx.q!r})')


def nc_mul(x: OrderedSeries, y: OrderedSeries) -> OrderedSeries:
    """ Product x * y brought back to normal order, terms beyond the order cap dropped """
    _check_compatible(x, y)
    q = x.ctx.q
    cap = x.order_cap
    size = cap + 1
    out = np.zeros((size, size), dtype=complex)
    x_c, y_c = x.coeffs, y.coeffs
    for n in np.flatnonzero(np.any(x_c != 0, axis=0)):
        column = x_c[:, n]
        for c in np.flatnonzero(np.any(y_c != 0, axis=1)):
            if c + n > cap:
                continue
            factor = q ** (-(x.s_grade + n) * (y.z_grade + c))
            block = factor * np.outer(column, y_c[c, :])
            out[c:, n:] += block[:size - c, :size - n]
    z_grade, s_grade = x.z_grade + y.z_grade, x.s_grade + y.s_grade
    if z_grade == 0 and s_grade == 0:
        return OrderedSeries(out, x.ctx, cap)
    return GradedSeries(out, x.ctx, cap, z_grade, s_grade)


def normal_order(coeffs: Sequence[complex],
                 ctx: QContext,
                 order_cap: Optional[int] = DEFAULT_ORDER_CAP,
                 grade: Optional[float] = 0.0) -> OrderedSeries:
    """ The ordering map sum_r a_r (zs)^(grade + r) -> sum_r a_r z^(grade + r) s^(grade + r) """
    diagonal = {(r, r): value for r, value in enumerate(coeffs) if 2 * r <= order_cap}
    if grade == 0:
        return OrderedSeries(diagonal, ctx, order_cap)
    return GradedSeries(diagonal, ctx, order_cap, grade, grade)


def power_of_zs(rho: float,
                ctx: QContext,
                order_cap: Optional[int] = DEFAULT_ORDER_CAP) -> OrderedSeries:
    """ (zs)^rho = q^(-rho (rho - 1) / 2) z^rho s^rho for real rho """
    factor = ctx.q ** (-rho * (rho - 1) / 2)
    if float(rho).is_integer() and 0 <= 2 * rho <= order_cap:
        r = int(rho)
        return OrderedSeries({(r, r): factor}, ctx, order_cap)
    return GradedSeries({(0, 0): factor}, ctx, order_cap, rho, rho)


def expand_product(coeffs: Sequence[complex],
                   ctx: QContext,
                   order_cap: Optional[int] = DEFAULT_ORDER_CAP,
                   grade: Optional[float] = 0.0) -> OrderedSeries:
    """ Normal ordered form of sum_r a_r (zs)^(grade + r).

    Integral powers are multiplied out with nc_mul. A fractional grade uses the real power rule of
    power_of_zs for every term.
    """
    if grade == 0:
        zs = OrderedSeries.monomial(1, 1, ctx, order_cap)
        power = OrderedSeries.identity(ctx, order_cap)
        total = OrderedSeries({}, ctx, order_cap)
        for value in coeffs:
            if not power.coeffs.any():
                break
            total = total + power * value
            power = nc_mul(power, zs)
        return total
    q = ctx.q
    diagonal = dict()
    for r, value in enumerate(coeffs):
        if 2 * r > order_cap:
            break
        rho = grade + r
        diagonal[(r, r)] = value * q ** (-rho * (rho - 1) / 2)
    return GradedSeries(diagonal, ctx, order_cap, grade, grade)


def _grade_offset(x_grade: float, y_grade: float) -> int:
    offset = x_grade - y_grade
    if abs(offset - round(offset)) > 1e-12:
        raise DomainError(f'Grades {x_grade!r} and {y_grade!r} differ by a non-integer')
    return int(round(offset))


def coefficient_residual(x: OrderedSeries, y: OrderedSeries) -> float:
    """ Maximum coefficient mismatch of two series over all monomials up to the total degree both
    series represent completely. Grades must differ by integers.
    """
    _check_compatible(x, y)
    dz = _grade_offset(x.z_grade, y.z_grade)
    ds = _grade_offset(x.s_grade, y.s_grade)
    base_z, base_s = min(0, dz), min(0, ds)
    # exponents are measured relative to y's grades
    top = min(x.order_cap + dz + ds, y.order_cap)
    residual = 0.0
    size = x.order_cap + 1
    for i in range(base_z, size + max(0, dz)):
        for j in range(base_s, size + max(0, ds)):
            if i + j > top:
                continue
            value_x = x.coefficient(i - dz, j - ds)
            value_y = y.coefficient(i, j)
            residual = max(residual, abs(value_x - value_y))
    return residual


def scalar_reduce(x: OrderedSeries, z_val: Any, s_val: Any) -> complex:
    """ Evaluates the normal ordered series at commuting scalar values.

    Raises TailNotConverged if the highest three total degrees still contribute more than the
    context tolerance.
    """
    z_val, s_val = complex(z_val), complex(s_val)
    for grade, value, name in ((x.z_grade, z_val, 'z'), (x.s_grade, s_val, 's')):
        if not float(grade).is_integer() and (value.imag != 0 or value.real <= 0):
            raise DomainError(f'Fractional grade requires a real positive {name} value')
    size = x.order_cap + 1
    indices = np.arange(size)
    z_pow = _scalar_power(z_val, x.z_grade + indices)
    s_pow = _scalar_power(s_val, x.s_grade + indices)
    terms = x.coeffs * np.multiply.outer(z_pow, s_pow)
    total = complex(np.sum(terms))
    m_idx, n_idx = np.indices(terms.shape)
    tail = np.abs(terms[m_idx + n_idx >= max(1, x.order_cap - 2)])
    if tail.size and np.max(tail) > x.ctx.tol.eps_rel * (abs(total) + 1):
        raise TailNotConverged(f'Ordered series truncated at order {x.order_cap:d} has not '
                               f'converged at z={z_val!r}, s={s_val!r}')
    return total


def _scalar_power(value: complex, exponents: np.ndarray) -> np.ndarray:
    if value.imag == 0 and value.real > 0:
        return np.power(value.real, exponents).astype(complex)
    if value == 0:
        return np.where(exponents == 0, 1, 0).astype(complex)
    return np.power(value, exponents.astype(complex))


def qexp_series(ctx: QContext,
                scale: Optional[complex] = 1.0,
                order_cap: Optional[int] = DEFAULT_ORDER_CAP,
                entire: Optional[bool] = False) -> OrderedSeries:
    """ Ordered form of e_q(lambda scale zs / 2) (or E_q for entire=True) """
    q, lam = ctx.q, ctx.lam
    coeffs = list()
    for r in range(order_cap // 2 + 1):
        value = (lam * scale / 2) ** r / qpochhammer_n(q, q, r)
        if entire:
            value *= q ** (r * (r - 1) / 2)
        coeffs.append(value)
    return normal_order(coeffs, ctx, order_cap)


def bessel_series(kind: int,
                  nu: float,
                  ctx: QContext,
                  scale: Optional[float] = 1.0,
                  order_cap: Optional[int] = DEFAULT_ORDER_CAP) -> OrderedSeries:
    """ Ordered form of J_nu^(kind)(lambda scale zs; q^2), graded by nu:
    sum_n d_n scale^(nu + 2n) z^(nu + 2n) s^(nu + 2n).
    """
    if kind not in (1, 2):
        raise DomainError(f'Bessel kind must be 1 or 2, received {kind!r}')
    if scale <= 0:
        raise DomainError('Bessel series scale must be positive')
    q, p, lam = ctx.q, ctx.q2, ctx.lam
    gamma = qgamma(nu + 1, ctx, p)
    diagonal = dict()
    for n in range(order_cap // 4 + 1):
        value = (-1) ** n * lam ** (2 * n) / (gamma * qpochhammer_n(p, p, n).real
                                             * qpochhammer_n(p ** (nu + 1), p, n).real
                                             * 2 ** (nu + 2 * n))
        if kind == 2:
            value *= q ** (2 * n * (nu + n))
        diagonal[(2 * n, 2 * n)] = value * scale ** (nu + 2 * n)
    return GradedSeries(diagonal, ctx, order_cap, nu, nu)


def verify_exponential_ordering(ctx: QContext,
                                order_cap: Optional[int] = DEFAULT_ORDER_CAP
                                ) -> Tuple[float, float]:
    """ Residuals of the ordering identities
        0Phi1(-; 0; q, lambda zs / 2) = :E_q(lambda zs / 2):   and
        E_q(lambda zs / 2) = :e_q(lambda zs / 2):
    with the left hand sides multiplied out in the noncommuting variables.
    """
    q, lam = ctx.q, ctx.lam
    count = order_cap // 2 + 1
    phi_coeffs = [q ** (r * (r - 1)) * (lam / 2) ** r / qpochhammer_n(q, q, r)
                  for r in range(count)]
    big_coeffs = [q ** (r * (r - 1) / 2) * (lam / 2) ** r / qpochhammer_n(q, q, r)
                  for r in range(count)]
    first = coefficient_residual(expand_product(phi_coeffs, ctx, order_cap),
                                 qexp_series(ctx, 1.0, order_cap, entire=True))
    second = coefficient_residual(expand_product(big_coeffs, ctx, order_cap),
                                  qexp_series(ctx, 1.0, order_cap))
    _log.debug(f'Exponential ordering residuals at q={q!r}: {first:.3e}, {second:.3e}')
    return first, second


def verify_bessel_ordering(nu: float,
                           ctx: QContext,
                           order_cap: Optional[int] = DEFAULT_ORDER_CAP) -> Tuple[float, float]:
    """ Residuals of the two Bessel ordering identities

        (1 / Gamma_(q^2)(nu + 1)) (x / 2)^nu 0Phi3(-; 0, 0, q^(2nu+2); q^2, x^2) at x = q^(-1/2) zs
            = q^(-nu^2 / 2) :J_nu^(2)(lambda zs; q^2):
        J_nu^(2)(lambda q^(-1/2) zs; q^2) = q^(-nu^2 / 2) :J_nu^(1)(lambda zs; q^2):

    with the left hand sides expanded through the real power rule for (zs)^rho.
    """
    if nu < 0:
        raise DomainError(f'Bessel ordering identities need nu >= 0, received {nu!r}')
    q, p, lam = ctx.q, ctx.q2, ctx.lam
    gamma = qgamma(nu + 1, ctx, p)
    count = order_cap // 4 + 1
    shift = q ** -0.5
    phi03_coeffs = list()
    j2_coeffs = list()
    for n in range(count):
        base = (-1) ** n * lam ** (2 * n) / (gamma * qpochhammer_n(p, p, n).real
                                            * qpochhammer_n(p ** (nu + 1), p, n).real
                                            * 2 ** (nu + 2 * n))
        phi03_coeffs.extend((base * q ** (4 * n * (nu + n)) * shift ** (nu + 2 * n), 0))
        j2_coeffs.extend((base * q ** (2 * n * (nu + n)) * shift ** (nu + 2 * n), 0))
    prefactor = q ** (-nu * nu / 2)
    first = coefficient_residual(expand_product(phi03_coeffs, ctx, order_cap, grade=nu),
                                 bessel_series(2, nu, ctx, 1.0, order_cap) * prefactor)
    second = coefficient_residual(expand_product(j2_coeffs, ctx, order_cap, grade=nu),
                                  bessel_series(1, nu, ctx, 1.0, order_cap) * prefactor)
    _log.debug(f'Bessel ordering residuals at q={q!r}, nu={nu!r}: {first:.3e}, {second:.3e}')
    return first, second


DERIVATIVE_RELATIONS = ('z_e_q', 's_e_q', 'z_E_q', 's_E_q', 'z_J1_raise', 's_J1_raise',
                        'z_J1_lower', 'z_J2_raise', 's_J2_raise', 'z_J2_lower')


def verify_derivative_relations(nu: float,
                                a: float,
                                ctx: QContext,
                                order_cap: Optional[int] = DEFAULT_ORDER_CAP
                                ) -> Dict[str, float]:
    """ Coefficient residuals of the ten difference relations of the ordered q-exponentials and
    q-Bessel functions. D_z, D_s denote 2 / (1 + q) times the q-differences in z and s, :f(a):
    the ordered series of f(lambda a zs / 2) (exponentials) or f(lambda a zs) (Bessel):

        z_e_q       D_z :e_q(a):                 = a :e_q(a): s
        s_e_q       D_s :e_q(a):                 = a q z :e_q(aq):
        z_E_q       D_z :E_q(a):                 = a :E_q(aq): s
        s_E_q       D_s :E_q(a):                 = a q z :E_q(aq^2):
        z_J1_raise  D_z z^-nu :J1_nu(a):         = -a z^-nu :J1_(nu+1)(a): s
        s_J1_raise  D_s :J1_nu(a): s^-nu         = -a q z :J1_(nu+1)(aq): s^-nu
        z_J1_lower  D_z z^nu :J1_nu(a):          = a z^nu :J1_(nu-1)(a): s
        z_J2_raise  D_z z^-nu :J2_nu(a):         = -a q^(nu+1) z^-nu :J2_(nu+1)(aq): s
        s_J2_raise  D_s :J2_nu(a): s^-nu         = -a q^(nu+2) z :J2_(nu+1)(aq^2): s^-nu
        z_J2_lower  D_z z^nu :J2_nu(a):          = a q^(1-nu) z^nu :J2_(nu-1)(aq): s

    The Bessel series carry 2^(+-nu) so that the leading terms are free of powers of two.
    a = 0 makes every relation trivial.

    @return dict: relation name -> residual
    """
    if nu <= 0:
        raise DomainError(f'Derivative relations need nu > 0, received {nu!r}')
    if a < 0:
        raise DomainError(f'The scale a must be nonnegative, received {a!r}')
    q = ctx.q
    cap = order_cap
    residuals = dict()

    def e(scale):
        return qexp_series(ctx, scale, cap)

    def big_e(scale):
        return qexp_series(ctx, scale, cap, entire=True)

    def bessel(kind, order, scale):
        if scale == 0:
            return GradedSeries({}, ctx, cap, order, order)
        return bessel_series(kind, order, ctx, scale, cap)

    up, down = 2 ** nu, 2 ** -nu
    residuals['z_e_q'] = coefficient_residual(e(a).dz(True), e(a).shifted(s=1, factor=a))
    residuals['s_e_q'] = coefficient_residual(e(a).ds(True), e(a * q).shifted(z=1, factor=a * q))
    residuals['z_E_q'] = coefficient_residual(big_e(a).dz(True),
                                              big_e(a * q).shifted(s=1, factor=a))
    residuals['s_E_q'] = coefficient_residual(big_e(a).ds(True),
                                              big_e(a * q * q).shifted(z=1, factor=a * q))
    residuals['z_J1_raise'] = coefficient_residual(
        bessel(1, nu, a).shifted(z=-nu, factor=up).dz(True),
        bessel(1, nu + 1, a).shifted(z=-nu, s=1, factor=-a * up)
    )
    residuals['s_J1_raise'] = coefficient_residual(
        bessel(1, nu, a).shifted(s=-nu, factor=up).ds(True),
        bessel(1, nu + 1, a * q).shifted(z=1, s=-nu, factor=-a * q * up)
    )
    residuals['z_J1_lower'] = coefficient_residual(
        bessel(1, nu, a).shifted(z=nu, factor=down).dz(True),
        bessel(1, nu - 1, a).shifted(z=nu, s=1, factor=a * down)
    )
    residuals['z_J2_raise'] = coefficient_residual(
        bessel(2, nu, a).shifted(z=-nu, factor=up).dz(True),
        bessel(2, nu + 1, a * q).shifted(z=-nu, s=1, factor=-a * q ** (nu + 1) * up)
    )
    residuals['s_J2_raise'] = coefficient_residual(
        bessel(2, nu, a).shifted(s=-nu, factor=up).ds(True),
        bessel(2, nu + 1, a * q * q).shifted(z=1, s=-nu, factor=-a * q ** (nu + 2) * up)
    )
    residuals['z_J2_lower'] = coefficient_residual(
        bessel(2, nu, a).shifted(z=nu, factor=down).dz(True),
        bessel(2, nu - 1, a * q).shifted(z=nu, s=1, factor=a * q ** (1 - nu) * down)
    )
    _log.debug(f'Derivative relation residuals at q={q!r}, nu={nu!r}, a={a!r}: {residuals}')
    return residuals

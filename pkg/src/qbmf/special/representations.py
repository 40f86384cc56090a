# -*- coding: utf-8 -*-

"""
Jackson q-integral representations of the q-Bessel and q-Bessel-Macdonald functions and their
verification against the series definitions of qbmf.special.qbessel.

Representations stated in noncommuting variables zs = q sz are evaluated through their normal
ordered form at commuting scalar arguments. The ordering identities behind each replacement are
re-derived at run time by reduction_proof:

    E_q(x zs)                      -> e_q(x zs)
    0Phi1(-; 0; q, x zs)           -> E_q(x zs)
    J_0^(2)(lambda q^-1/2 zs)      -> J_0^(1)(lambda zs)
    0Phi3(...; -(lambda q^3/2 zs / 2)^2) -> J_0^(2)(lambda zs)

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

__all__ = ('DEFAULT_THRESHOLD', 'KernelWeight', 'RepresentationId', 'VerificationRecord',
           'check_constraint', 'classical_limit_check', 'coefficient_verify',
           'double_integral_constants', 'kernel_diff_residual', 'kernel_weights',
           'limit_context', 'moment_constant', 'reduction_proof', 'rhs_eval',
           'satisfies_constraint', 'swapped_order_residual', 'verify')

import math
import numpy as np
from enum import Enum
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Tuple

from qbmf.core.logger import get_logger
from qbmf.special.errors import DomainError, RadiusError, TailNotConverged
from qbmf.special.jackson import JacksonDomain, LatticeTruncation, jackson_integral
from qbmf.special.noncomm import verify_bessel_ordering, verify_exponential_ordering
from qbmf.special.qbessel import BesselKind, BesselParams, a_nu, bessel_eval, classical_oracle
from qbmf.special.qbessel import j1_real_continuation
from qbmf.special.qbinomial import QBinomialKernel, Q_nu, R_diff_residual, R_kernel
from qbmf.special.qcore import Eq_exp, QContext, Tolerance, eq_exp, phi21, qgamma
from qbmf.special.qcore import qpochhammer_n

_log = get_logger(__name__)

DEFAULT_THRESHOLD = 1e-9

# Relative size of an imaginary part that is still accepted for a nominally real value
_IMAG_TOLERANCE = 1e-10


class RepresentationId(Enum):
    P4_1 = 'P4_1'
    P4_2 = 'P4_2'
    C4_1J1 = 'C4_1J1'
    C4_1J2 = 'C4_1J2'
    P5_1 = 'P5_1'
    P5_2 = 'P5_2'
    P6_1 = 'P6_1'
    P6_2 = 'P6_2'
    P7_1 = 'P7_1'
    E8_2 = 'E8_2'
    E8_3 = 'E8_3'
    E8_4 = 'E8_4'
    E8_5 = 'E8_5'
    E8_6 = 'E8_6'
    E8_7 = 'E8_7'
    E8_8 = 'E8_8'
    E8_9 = 'E8_9'

    @property
    def target(self) -> BesselKind:
        """ The function represented by the integral """
        return _TARGETS[self]

    @property
    def min_nu(self) -> float:
        """ Exclusive lower bound of the order """
        kind = self.target
        if kind.family != 'K':
            return 0.0
        return 0.5 if kind.index == 1 else 1.5

    @property
    def needs_radius(self) -> bool:
        """ True if s must lie inside the first kind convergence radius """
        return self.target in (BesselKind.I1, BesselKind.J1)

    @property
    def is_double(self) -> bool:
        return self in (RepresentationId.P7_1, RepresentationId.E8_8, RepresentationId.E8_9)

    @property
    def is_noncommutative(self) -> bool:
        return not self.value.startswith('E')

    @property
    def reduction(self) -> Optional[str]:
        """ Name of the ordering identity (see reduction_proof) used to evaluate the
        noncommutative integrand at scalar arguments, None for commuting representations.
        """
        return _REDUCTIONS.get(self, None)


_TARGETS = {
    RepresentationId.P4_1: BesselKind.I1,
    RepresentationId.E8_2: BesselKind.I1,
    RepresentationId.P4_2: BesselKind.I2,
    RepresentationId.E8_3: BesselKind.I2,
    RepresentationId.C4_1J1: BesselKind.J1,
    RepresentationId.C4_1J2: BesselKind.J2,
    RepresentationId.P5_1: BesselKind.K1,
    RepresentationId.E8_4: BesselKind.K1,
    RepresentationId.P6_1: BesselKind.K1,
    RepresentationId.E8_6: BesselKind.K1,
    RepresentationId.P7_1: BesselKind.K1,
    RepresentationId.E8_8: BesselKind.K1,
    RepresentationId.P5_2: BesselKind.K2,
    RepresentationId.E8_5: BesselKind.K2,
    RepresentationId.P6_2: BesselKind.K2,
    RepresentationId.E8_7: BesselKind.K2,
    RepresentationId.E8_9: BesselKind.K2,
}

_REDUCTIONS = {
    RepresentationId.P4_1: 'Eq_to_eq',
    RepresentationId.C4_1J1: 'Eq_to_eq',
    RepresentationId.P5_1: 'Eq_to_eq',
    RepresentationId.P4_2: 'phi01_to_Eq',
    RepresentationId.C4_1J2: 'phi01_to_Eq',
    RepresentationId.P5_2: 'phi01_to_Eq',
    RepresentationId.P7_1: 'phi01_to_Eq',
    RepresentationId.P6_1: 'J2_to_J1',
    RepresentationId.P6_2: 'phi03_to_J2',
}


class KernelWeight:
    """ Integration weight z^gamma (a z^2; q^2)_inf / (b z^2; q^2)_inf on a Jackson lattice,
    gamma = 1 if z_factor is set.
    """

    def __init__(self, a: float, b: float, domain: JacksonDomain, ctx: QContext,
                 z_factor: Optional[bool] = False) -> None:
        self._kernel = QBinomialKernel(a, b, 1.0 if z_factor else 0.0, ctx.q2)
        self._domain = JacksonDomain(domain)
        self._z_factor = bool(z_factor)
        self._ctx = ctx

    @property
    def kernel(self) -> QBinomialKernel:
        return self._kernel

    @property
    def domain(self) -> JacksonDomain:
        return self._domain

    @property
    def z_factor(self) -> bool:
        return self._z_factor

    def __call__(self, z: Any) -> np.ndarray:
        return np.asarray(R_kernel(self._kernel, z, self._ctx), dtype=complex)

    def diff_residual(self, z: Any) -> float:
        """ Residual of the first order q-difference equation of the kernel at z """
        return R_diff_residual(self._kernel, z, self._ctx)

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(a={self._kernel.a!r}, b={self._kernel.b!r}, ' \
               f'domain={self._domain.name}, z_factor={self._z_factor!r})'


def kernel_weights(rep: RepresentationId, nu: float, ctx: QContext) -> Tuple[KernelWeight, ...]:
    """ The weights of a representation, outer (z) first and inner (zeta) second for double
    integrals.
    """
    rep = RepresentationId(rep)
    q, p = ctx.q, ctx.q2
    sym, half, real = JacksonDomain.SymmetricUnit, JacksonDomain.HalfLine, JacksonDomain.RealLine
    r = RepresentationId
    if rep in (r.P4_1, r.E8_2, r.C4_1J1):
        return KernelWeight(p, q ** (2 * nu + 1), sym, ctx),
    if rep in (r.P4_2, r.E8_3, r.C4_1J2):
        return KernelWeight(q ** (1 - 2 * nu), 1.0, sym, ctx),
    if rep in (r.P5_1, r.E8_4):
        return KernelWeight(-p, -q ** (1 - 2 * nu), real, ctx),
    if rep in (r.P5_2, r.E8_5):
        return KernelWeight(-q ** (2 * nu + 1), -1.0, real, ctx),
    if rep is r.P6_1:
        return KernelWeight(-p, -q ** (-2 * nu), half, ctx, True),
    if rep is r.E8_6:
        return KernelWeight(-p, -q ** (1 - 2 * nu), half, ctx, True),
    if rep in (r.P6_2, r.E8_7):
        return KernelWeight(-q ** (2 * nu + 2), -1.0, half, ctx, True),
    if rep is r.P7_1:
        return KernelWeight(-p, -q ** (-2 * nu), half, ctx, True), \
               KernelWeight(q, 1.0, sym, ctx)
    if rep is r.E8_8:
        return KernelWeight(-p, -q ** (-2 * nu), half, ctx, True), \
               KernelWeight(p, q, sym, ctx)
    return KernelWeight(-q ** (2 * nu + 2), -1.0, half, ctx, True), KernelWeight(q, 1.0, sym, ctx)


def _e_q(factor: complex) -> Callable:
    def oscillator(x: np.ndarray, s: float, ctx: QContext) -> np.ndarray:
        return np.asarray(eq_exp(factor * ctx.lam * x * s / 2, ctx), dtype=complex)
    return oscillator


def _big_e_q(factor: complex) -> Callable:
    def oscillator(x: np.ndarray, s: float, ctx: QContext) -> np.ndarray:
        return np.asarray(Eq_exp(factor * ctx.lam * x * s / 2, ctx), dtype=complex)
    return oscillator


def _j0_first(x: np.ndarray, s: float, ctx: QContext) -> np.ndarray:
    return np.asarray(j1_real_continuation(0.0, np.real(x) * s, ctx), dtype=complex)


def _j0_second(x: np.ndarray, s: float, ctx: QContext) -> np.ndarray:
    return np.asarray(bessel_eval(BesselKind.J2, BesselParams(0.0, np.real(x) * s, ctx)),
                      dtype=complex)


_OSCILLATORS = {
    RepresentationId.P4_1: _e_q(1),
    RepresentationId.E8_2: _e_q(1),
    RepresentationId.C4_1J1: _e_q(-1j),
    RepresentationId.P4_2: _big_e_q(1),
    RepresentationId.E8_3: _big_e_q(1),
    RepresentationId.C4_1J2: _big_e_q(-1j),
    RepresentationId.P5_1: _e_q(1j),
    RepresentationId.E8_4: _e_q(1j),
    RepresentationId.P5_2: _big_e_q(1j),
    RepresentationId.E8_5: _big_e_q(1j),
    RepresentationId.P6_1: _j0_first,
    RepresentationId.E8_6: _j0_first,
    RepresentationId.P6_2: _j0_second,
    RepresentationId.E8_7: _j0_second,
    RepresentationId.P7_1: _big_e_q(-1j),
    RepresentationId.E8_8: _e_q(-1j),
    RepresentationId.E8_9: _big_e_q(-1j),
}


def _sqrt_ratio(nu: float, ctx: QContext) -> float:
    ratio = a_nu(nu, ctx) / a_nu(-nu, ctx)
    if ratio <= 0:
        raise DomainError(f'a_nu / a_-nu = {ratio:.6g} is not positive for nu={nu!r}')
    return math.sqrt(ratio)


def _unit_phi21(a: float, ctx: QContext) -> float:
    """ 2Phi1(a, q; q^3; q^2, 1) """
    q = ctx.q
    return phi21(a, q, q ** 3, ctx.q2, 1.0, ctx).real


def _constant(rep: RepresentationId, nu: float, ctx: QContext,
              trunc: Optional[LatticeTruncation] = None) -> float:
    """ The s independent factor in front of the integral """
    q, p = ctx.q, ctx.q2
    r = RepresentationId
    if rep in (r.P4_1, r.E8_2, r.C4_1J1):
        return (1 + q) / (2 * qgamma(nu + 0.5, ctx, p) * qgamma(0.5, ctx, p))
    if rep in (r.P4_2, r.E8_3, r.C4_1J2):
        value = 1 / (2 * qgamma(nu + 1, ctx, p) * _unit_phi21(q ** (1 - 2 * nu), ctx))
        return (1 + q) * value if rep is r.C4_1J2 else value
    ratio = _sqrt_ratio(nu, ctx)
    if rep in (r.P5_1, r.E8_4):
        return q ** (0.5 - nu * nu) * qgamma(nu + 0.5, ctx, p) * qgamma(0.5, ctx, p) / (
                4 * Q_nu(nu, ctx, trunc)) * ratio
    if rep in (r.P5_2, r.E8_5):
        return q ** (nu - nu * nu) * qgamma(nu + 0.5, ctx, p) * qgamma(0.5, ctx, p) / (
                4 * Q_nu(0.5, ctx, trunc)) * ratio
    if rep in (r.P6_1, r.E8_6):
        return 0.5 * q ** (-nu * nu - nu) * (1 + q) * qgamma(nu + 1, ctx, p) * ratio
    if rep in (r.P6_2, r.E8_7):
        return 0.5 * q ** (nu - nu * nu) * (1 + q) * qgamma(nu + 1, ctx, p) * ratio
    if rep is r.E8_8:
        return q ** (-nu * nu - nu) * (1 + q) ** 2 * qgamma(nu + 1, ctx, p) / (
                4 * qgamma(0.5, ctx, p) ** 2) * ratio
    exponent = -nu * nu - nu if rep is r.P7_1 else nu - nu * nu
    return q ** exponent * (1 + q) ** 2 * qgamma(nu + 1, ctx, p) / (
            4 * _unit_phi21(q, ctx)) * ratio


def satisfies_constraint(rep: RepresentationId, nu: float, s: float, ctx: QContext) -> bool:
    try:
        check_constraint(rep, nu, s, ctx)
    except DomainError:
        return False
    return True


def check_constraint(rep: RepresentationId, nu: float, s: float, ctx: QContext) -> None:
    """ Raises DomainError (RadiusError for the radius condition) if (nu, s) violates the
    validity range of the representation.
    """
    rep = RepresentationId(rep)
    if not nu > rep.min_nu:
        raise DomainError(f'{rep.value} requires nu > {rep.min_nu:g}, received nu={nu!r}')
    if not (np.isreal(s) and float(np.real(s)) > 0):
        raise DomainError(f'{rep.value} is evaluated for real s > 0, received s={s!r}')
    if rep.needs_radius and float(np.real(s)) >= 1 / ctx.lam:
        raise RadiusError(f'{rep.value} requires s < 1/(1-q^2) = {1 / ctx.lam:.6g}, received '
                          f's={s!r}')


def _integral(rep: RepresentationId, nu: float, s: float, ctx: QContext,
              trunc: Optional[LatticeTruncation], swap: Optional[bool] = False) -> complex:
    weights = kernel_weights(rep, nu, ctx)
    oscillator = _OSCILLATORS[rep]
    if not rep.is_double:
        weight = weights[0]
        return jackson_integral(lambda z: weight(z) * oscillator(z, s, ctx), weight.domain, ctx,
                                trunc)
    outer, inner = weights
    if swap:
        def swapped(x):
            def over_z(z):
                return (outer(z)[:, np.newaxis] *
                        oscillator(np.multiply.outer(z, x), s, ctx))
            return inner(x) * jackson_integral(over_z, outer.domain, ctx, trunc)
        return jackson_integral(swapped, inner.domain, ctx, trunc)

    def iterated(z):
        def over_x(x):
            return inner(x)[:, np.newaxis] * oscillator(np.multiply.outer(x, z), s, ctx)
        return outer(z) * jackson_integral(over_x, inner.domain, ctx, trunc)
    return jackson_integral(iterated, outer.domain, ctx, trunc)


def rhs_eval(rep: RepresentationId,
             nu: float,
             s: float,
             ctx: QContext,
             trunc: Optional[LatticeTruncation] = None) -> complex:
    """ Evaluates the integral side of a representation.

    @param RepresentationId rep: the representation
    @param float nu: order inside the validity range of rep
    @param float s: real argument > 0
    @param QContext ctx: deformation base and tolerance
    @param LatticeTruncation trunc: optional, lattice extent limits

    @return complex: constant * (s/2)^(+-nu) * Jackson integral
    """
    rep = RepresentationId(rep)
    nu, s = float(nu), float(np.real(s))
    check_constraint(rep, nu, s, ctx)
    integral = _integral(rep, nu, s, ctx, trunc)
    sign = 1 if rep.target.family != 'K' else -1
    value = _constant(rep, nu, ctx, trunc) * (s / 2) ** (sign * nu) * integral
    _log.debug(f'{rep.value} rhs at q={ctx.q!r}, nu={nu!r}, s={s!r}: {value!r}')
    return complex(value)


def swapped_order_residual(rep: RepresentationId,
                           nu: float,
                           s: float,
                           ctx: QContext,
                           trunc: Optional[LatticeTruncation] = None) -> float:
    """ Relative difference of a double integral summed in the two possible orders """
    rep = RepresentationId(rep)
    if not rep.is_double:
        raise DomainError(f'{rep.value} is not a double integral')
    check_constraint(rep, nu, s, ctx)
    first = _integral(rep, float(nu), float(s), ctx, trunc)
    second = _integral(rep, float(nu), float(s), ctx, trunc, swap=True)
    return abs(first - second) / max(abs(first), abs(second), 1e-300)


class VerificationRecord:
    """ Outcome of a single representation check.

    lhs, rhs and rel_residual are None for records of evaluations that raised, the error message
    is kept in notes then.
    """

    FIELDS = ('rep', 'q', 'nu', 's', 'lhs_re', 'lhs_im', 'rhs_re', 'rhs_im', 'rel_residual',
              'pass', 'notes')

    def __init__(self,
                 rep: RepresentationId,
                 q: float,
                 nu: float,
                 s: float,
                 lhs: Optional[complex],
                 rhs: Optional[complex],
                 threshold: Optional[float] = DEFAULT_THRESHOLD,
                 notes: Optional[str] = '') -> None:
        self._rep = RepresentationId(rep)
        self._q = float(q)
        self._nu = float(nu)
        self._s = float(s)
        self._lhs = None if lhs is None else complex(lhs)
        self._rhs = None if rhs is None else complex(rhs)
        self._threshold = float(threshold)
        self._notes = str(notes)
        if self._lhs is None or self._rhs is None:
            self._rel_residual = None
        else:
            scale = max(abs(self._lhs), abs(self._rhs), 1e-300)
            self._rel_residual = abs(self._lhs - self._rhs) / scale

    @classmethod
    def failed(cls,
               rep: RepresentationId,
               q: float,
               nu: float,
               s: float,
               notes: str,
               threshold: Optional[float] = DEFAULT_THRESHOLD) -> 'VerificationRecord':
        return cls(rep, q, nu, s, None, None, threshold, notes)

    @property
    def rep(self) -> RepresentationId:
        return self._rep

    @property
    def q(self) -> float:
        return self._q

    @property
    def nu(self) -> float:
        return self._nu

    @property
    def s(self) -> float:
        return self._s

    @property
    def lhs(self) -> Optional[complex]:
        return self._lhs

    @property
    def rhs(self) -> Optional[complex]:
        return self._rhs

    @property
    def threshold(self) -> float:
        return self._threshold

    @property
    def rel_residual(self) -> Optional[float]:
        return self._rel_residual

    @property
    def passed(self) -> bool:
        return self._rel_residual is not None and self._rel_residual < self._threshold

    @property
    def notes(self) -> str:
        return self._notes

    @property
    def key(self) -> Tuple[str, float, float, float]:
        return self._rep.value, self._q, self._nu, self._s

    def as_dict(self) -> Dict[str, Any]:
        def part(value, attr):
            return None if value is None else getattr(value, attr)

        return {'rep': self._rep.value,
                'q': self._q,
                'nu': self._nu,
                's': self._s,
                'lhs_re': part(self._lhs, 'real'),
                'lhs_im': part(self._lhs, 'imag'),
                'rhs_re': part(self._rhs, 'real'),
                'rhs_im': part(self._rhs, 'imag'),
                'rel_residual': self._rel_residual,
                'pass': self.passed,
                'notes': self._notes}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any],
                  threshold: Optional[float] = DEFAULT_THRESHOLD) -> 'VerificationRecord':
        def join(re, im):
            if data.get(re) is None:
                return None
            return complex(float(data[re]), float(data.get(im) or 0))

        return cls(data['rep'], data['q'], data['nu'], data['s'], join('lhs_re', 'lhs_im'),
                   join('rhs_re', 'rhs_im'), threshold, data.get('notes') or '')

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(rep={self._rep.value}, q={self._q!r}, ' \
               f'nu={self._nu!r}, s={self._s!r}, rel_residual={self._rel_residual!r}, ' \
               f'pass={self.passed!r})'


def _imaginary_note(name: str, value: complex) -> Optional[str]:
    if abs(value.imag) > _IMAG_TOLERANCE * abs(value):
        return f'{name} imaginary part {value.imag:.3e} exceeds {_IMAG_TOLERANCE:g} relative'
    return None


def verify(rep: RepresentationId,
           nu: float,
           s: float,
           ctx: QContext,
           threshold: Optional[float] = DEFAULT_THRESHOLD,
           trunc: Optional[LatticeTruncation] = None) -> VerificationRecord:
    """ Compares the integral side of rep with the series definition of its target function.

    @return VerificationRecord: filled record, pass flag set against threshold
    """
    rep = RepresentationId(rep)
    check_constraint(rep, nu, s, ctx)
    lhs = complex(bessel_eval(rep.target, BesselParams(nu, s, ctx)))
    rhs = rhs_eval(rep, nu, s, ctx, trunc)
    notes = [note for note in (_imaginary_note('lhs', lhs), _imaginary_note('rhs', rhs)) if note]
    if rep.reduction is not None:
        notes.append(f'scalar reduction {rep.reduction}')
    record = VerificationRecord(rep, ctx.q, nu, s, lhs, rhs, threshold, '; '.join(notes))
    if record.passed:
        _log.debug(f'{record!r}')
    else:
        _log.warning(f'Representation check failed: {record!r}')
    return record


def coefficient_verify(rep: RepresentationId,
                       nu: float,
                       ctx: QContext,
                       order: Optional[int] = 8,
                       trunc: Optional[LatticeTruncation] = None) -> float:
    """ Moment check of the [-1, 1] representations: the coefficient of (s/2)^(nu + 2n) of the
    integral side is constant * c^(2n) * e_(2n) * M_(2n), with M_m the kernel moments and e_m the
    Taylor coefficients of the exponential in the integrand. Each is compared with the series
    coefficient of the target function for n = 0..order. Odd moments must vanish.

    @return float: maximum relative mismatch
    """
    rep = RepresentationId(rep)
    r = RepresentationId
    if rep not in (r.P4_1, r.P4_2, r.C4_1J1, r.C4_1J2):
        raise DomainError(f'Moment verification covers P4_1, P4_2, C4_1J1 and C4_1J2, received '
                          f'{rep.value}')
    if nu <= 0:
        raise DomainError(f'Moment verification needs nu > 0, received {nu!r}')
    q, p, lam = ctx.q, ctx.q2, ctx.lam
    weight = kernel_weights(rep, nu, ctx)[0]
    powers = np.arange(2 * int(order) + 2)
    moments = np.asarray(jackson_integral(
        lambda x: weight(x)[:, np.newaxis] * np.power.outer(x, powers).astype(complex),
        weight.domain, ctx, trunc))
    constant = _constant(rep, nu, ctx, trunc)
    target = rep.target
    entire_exp = rep in (r.P4_2, r.C4_1J2)
    sign = -1 if target.family == 'J' else 1
    gamma = qgamma(nu + 1, ctx, p)
    mismatch = 0.0
    for n in range(int(order) + 1):
        m = 2 * n
        taylor = 1 / qpochhammer_n(q, q, m).real
        if entire_exp:
            taylor *= q ** (m * (m - 1) / 2)
        rhs = constant * sign ** n * lam ** m * taylor * moments[m]
        lhs = sign ** n * lam ** m / (gamma * qpochhammer_n(p, p, n).real *
                                      qpochhammer_n(p ** (nu + 1), p, n).real)
        if target.index == 2:
            lhs *= q ** (2 * n * (nu + n))
        mismatch = max(mismatch, abs(rhs - lhs) / abs(lhs))
        mismatch = max(mismatch, abs(moments[m + 1]) / max(abs(moments[m]), 1e-300))
    _log.debug(f'{rep.value} moment mismatch up to order {order:d}: {mismatch:.3e}')
    return float(mismatch)


def moment_constant(rep: RepresentationId,
                    nu: float,
                    ctx: QContext,
                    trunc: Optional[LatticeTruncation] = None) -> Tuple[float, Optional[float]]:
    """ The s -> 0 constant of a single integral representation: the zeroth kernel moment,
    paired with its closed form where one is known.

    For P4_1, E8_2 and C4_1J1 the moment times Gamma_(q^2)(nu + 1) is returned together with
    2 / (1 + q) Gamma_(q^2)(nu + 1/2) Gamma_(q^2)(1/2). For the half line Bessel representations
    P6_1 and E8_6 the moment is paired with -(1 - q) / (1 - q^(2 beta)), b = -q^(2 beta) being
    the denominator parameter of the kernel.

    @return tuple: (numerical value, closed form or None)
    """
    rep = RepresentationId(rep)
    if rep.is_double:
        raise DomainError(f'{rep.value} is a double integral')
    q, p = ctx.q, ctx.q2
    weight = kernel_weights(rep, nu, ctx)[0]
    moment = jackson_integral(weight, weight.domain, ctx, trunc).real
    r = RepresentationId
    if rep in (r.P4_1, r.E8_2, r.C4_1J1):
        value = moment * qgamma(nu + 1, ctx, p)
        return value, 2 / (1 + q) * qgamma(nu + 0.5, ctx, p) * qgamma(0.5, ctx, p)
    if rep in (r.P6_1, r.E8_6):
        return moment, -(1 - q) / (1 - abs(weight.kernel.b))
    return moment, None


def kernel_diff_residual(rep: RepresentationId, z: Any, nu: float, ctx: QContext) -> float:
    """ Residual of the first order q-difference equation satisfied by the kernel(s) of rep,
    maximum over outer and inner kernel for double integrals.
    """
    return max(weight.diff_residual(z) for weight in kernel_weights(rep, nu, ctx))


def reduction_proof(ctx: QContext, order_cap: Optional[int] = 12) -> Dict[str, float]:
    """ Coefficient residuals of the ordering identities that justify the scalar evaluation of
    the noncommutative representations.

    @return dict: identity name -> residual (keys as RepresentationId.reduction)
    """
    phi01_to_big, big_to_small = verify_exponential_ordering(ctx, order_cap)
    phi03_to_j2, j2_to_j1 = verify_bessel_ordering(0.0, ctx, order_cap)
    return {'phi01_to_Eq': phi01_to_big,
            'Eq_to_eq': big_to_small,
            'phi03_to_J2': phi03_to_j2,
            'J2_to_J1': j2_to_j1}


def double_integral_constants(ctx: QContext) -> Tuple[float, Optional[float]]:
    """ The two normalizations used for the K1 double integrals: Gamma_(q^2)(1/2)^2 and
    2Phi1(q, q; q^3; q^2, 1). The second one is None if its series does not converge.
    """
    gamma_sq = qgamma(0.5, ctx, ctx.q2) ** 2
    try:
        series = _unit_phi21(ctx.q, ctx)
    except TailNotConverged:
        _log.warning(f'2Phi1(q, q; q^3; q^2, 1) does not converge at q={ctx.q!r}')
        series = None
    return gamma_sq, series


def limit_context(q: float,
                  tol: Optional[Tolerance] = None) -> Tuple[QContext, LatticeTruncation]:
    """ Context and lattice truncation with term budgets scaled by 1 / (1 - q), as needed when q
    approaches 1.
    """
    tol = Tolerance() if tol is None else tol
    budget = int(64 / (1 - q))
    ctx = QContext(q, tol.copy(max_terms=max(tol.max_terms, budget)))
    return ctx, LatticeTruncation(1, max(2000, budget))


def classical_limit_check(rep: RepresentationId,
                          nu: float,
                          s: float,
                          k_list: Optional[Iterable[int]] = range(3, 9),
                          tol: Optional[Tolerance] = None) -> List[Tuple[float, float]]:
    """ Distance of the integral side of rep at q_k = 1 - 2^-k from the classical Bessel function
    it tends to (I_nu for P4_1, K_nu for the q-Bessel-Macdonald representations).

    @return list: (q_k, |rhs - classical|) per k
    """
    rep = RepresentationId(rep)
    r = RepresentationId
    if rep not in (r.P4_1, r.P5_1, r.P6_1, r.P7_1):
        raise DomainError(f'Classical limits are checked for P4_1, P5_1, P6_1 and P7_1, received '
                          f'{rep.value}')
    oracle = classical_oracle(rep.target.family, nu, s)
    errors = list()
    for k in k_list:
        q = 1 - 2.0 ** (-int(k))
        ctx, trunc = limit_context(q, tol)
        value = rhs_eval(rep, nu, s, ctx, trunc)
        errors.append((q, abs(value - oracle)))
        _log.debug(f'{rep.value} classical limit at q={q!r}: error {errors[-1][1]:.3e}')
    return errors

# -*- coding: utf-8 -*-

"""
q-binomial kernels r(a, b, z) = (az; q)_inf / (bz; q)_inf and
R(a, b, gamma, z) = z^gamma (a z^2; q^2)_inf / (b z^2; q^2)_inf, their first order q-difference
equations, partial fraction expansions, bound checks and the elliptic constant Q_nu.

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

__all__ = ('BoundCheck', 'BoundGrid', 'PartialFractionForm', 'QBinomialKernel', 'Q_nu',
           'Q_nu_elliptic', 'R_diff_residual', 'R_kernel', 'R_partial_fractions', 'R_taylor',
           'agm', 'bound_suite', 'classical_exponent', 'elliptic_moduli', 'majorant_constant',
           'r_diff_residual', 'r_kernel', 'r_partial_fractions', 'r_residue')

import math
import numpy as np
from enum import Enum
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from scipy.special import ellipj

from qbmf.core.logger import get_logger
from qbmf.special.errors import DomainError, PoleError, RadiusError, TailNotConverged
from qbmf.special.jackson import JacksonDomain, LatticeTruncation, jackson_integral
from qbmf.special.qcore import CompensatedSum, Eq_exp, QContext, as_complex, eq_exp
from qbmf.special.qcore import qpochhammer_inf, qpochhammer_n, qtrig, sum_by_ratio
from qbmf.special.qcore import terminating_index

_log = get_logger(__name__)


class QBinomialKernel:
    """ Parameters (a, b, gamma, base) of the q-binomial kernels r and R.

    base=None selects the natural base at evaluation time: q for r and q^2 for R.
    """

    def __init__(self,
                 a: complex,
                 b: complex,
                 gamma: Optional[float] = 0.0,
                 base: Optional[float] = None) -> None:
        self._a = complex(as_complex(a, 'a'))
        self._b = complex(as_complex(b, 'b'))
        self._gamma = float(gamma)
        if base is not None and not 0 < base < 1:
            raise DomainError(f'Kernel base must lie in (0, 1), received {base!r}')
        self._base = None if base is None else float(base)

    @classmethod
    def from_exponents(cls,
                       alpha: float,
                       beta: float,
                       ctx: QContext,
                       epsilon: Optional[int] = 1,
                       gamma: Optional[float] = 0.0) -> 'QBinomialKernel':
        """ The R kernel with a = epsilon q^(2 alpha), b = epsilon q^(2 beta) in base q^2 """
        if epsilon not in (1, -1):
            raise DomainError(f'epsilon must be +1 or -1, received {epsilon!r}')
        return cls(epsilon * ctx.q ** (2 * alpha), epsilon * ctx.q ** (2 * beta), gamma, ctx.q2)

    @property
    def a(self) -> complex:
        return self._a

    @property
    def b(self) -> complex:
        return self._b

    @property
    def gamma(self) -> float:
        return self._gamma

    @property
    def base(self) -> Optional[float]:
        return self._base

    def finite_length(self, base: float) -> Optional[int]:
        """ Returns j if b == a * base^j for a nonnegative integer j. The kernel then reduces to
        the finite product (az; base)_j.
        """
        if self._a == 0:
            return 0 if self._b == 0 else None
        if self._b == 0:
            return None
        ratio = self._a / self._b
        if abs(ratio.imag) > 1e-14 * abs(ratio):
            return None
        return terminating_index(ratio.real, base)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, QBinomialKernel):
            return NotImplemented
        return (self._a, self._b, self._gamma, self._base) == \
               (other._a, other._b, other._gamma, other._base)

    def __hash__(self) -> int:
        return hash((self._a, self._b, self._gamma, self._base))

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(a={self._a!r}, b={self._b!r}, gamma={self._gamma!r}, ' \
               f'base={self._base!r})'


def _scalar_out(value: np.ndarray, like: Any) -> Any:
    if np.ndim(like) == 0 and not isinstance(like, np.ndarray):
        return complex(value)
    return value


def _product_ratio(a: complex, b: complex, arr: np.ndarray, base: float,
                   ctx: QContext) -> np.ndarray:
    tol = ctx.tol
    num = a * arr
    den = b * arr
    result = np.ones_like(arr)
    bound = float(np.max(np.abs(num) + np.abs(den), initial=0.0))
    small = 0
    for _ in range(tol.max_terms):
        denominator = 1 - den
        if np.any(np.abs(denominator) < tol.eps_rel):
            raise PoleError('q-binomial kernel evaluated at a pole b z base^k = 1')
        result = result * ((1 - num) / denominator)
        if bound < tol.eps_rel:
            small += 1
            if small >= tol.consecutive_small:
                return result
        else:
            small = 0
        num = num * base
        den = den * base
        bound *= base
    raise TailNotConverged(f'q-binomial kernel product did not converge within '
                           f'{tol.max_terms:d} factors')


def r_kernel(k: QBinomialKernel, z: Any, ctx: QContext) -> Any:
    """ r(a, b, z) = (az; base)_inf / (bz; base)_inf with base = k.base or q.

    Kernels with b = a base^j reduce to the finite product (az; base)_j, so the removable poles of
    the quotient never raise.
    """
    base = ctx.q if k.base is None else k.base
    arr = as_complex(z, 'z')
    length = k.finite_length(base)
    if length is not None:
        return _scalar_out(np.asarray(qpochhammer_n(k.a * arr, base, length), dtype=complex), z)
    return _scalar_out(_product_ratio(k.a, k.b, arr, base, ctx), z)


def _power(arr: np.ndarray, gamma: float) -> np.ndarray:
    if float(gamma).is_integer():
        with np.errstate(divide='ignore', invalid='ignore'):
            return np.power(arr, int(gamma))
    if np.any(arr.imag != 0) or np.any(arr.real <= 0):
        raise DomainError('Non-integer powers z^gamma are only taken for real z > 0')
    return np.power(arr.real, gamma).astype(complex)


def R_kernel(k: QBinomialKernel, z: Any, ctx: QContext) -> Any:
    """ R(a, b, gamma, z) = z^gamma (a z^2; base)_inf / (b z^2; base)_inf, base = k.base or q^2 """
    base = ctx.q2 if k.base is None else k.base
    arr = as_complex(z, 'z')
    squared = QBinomialKernel(k.a, k.b, 0.0, base)
    value = np.asarray(r_kernel(squared, arr * arr, ctx), dtype=complex) * _power(arr, k.gamma)
    return _scalar_out(value, z)


def r_diff_residual(k: QBinomialKernel, z: Any, ctx: QContext) -> float:
    """ Residual of z [b r(z) - a r(base z)] = r(z) - r(base z), normalized by 1 + max |r|.
    """
    base = ctx.q if k.base is None else k.base
    arr = as_complex(z, 'z')
    r_z = np.asarray(r_kernel(k, arr, ctx))
    r_qz = np.asarray(r_kernel(k, base * arr, ctx))
    lhs = arr * (k.b * r_z - k.a * r_qz)
    rhs = r_z - r_qz
    scale = 1 + np.maximum(np.abs(r_z), np.abs(r_qz))
    return float(np.max(np.abs(lhs - rhs) / scale))


def R_diff_residual(k: QBinomialKernel, z: Any, ctx: QContext) -> float:
    """ Residual of z^2 [b t^gamma R(z) - a R(t z)] = t^gamma R(z) - R(t z) with t = sqrt(base),
    normalized by 1 + max |R|.
    """
    base = ctx.q2 if k.base is None else k.base
    shift = math.sqrt(base)
    arr = as_complex(z, 'z')
    r_z = np.asarray(R_kernel(k, arr, ctx))
    r_qz = np.asarray(R_kernel(k, shift * arr, ctx))
    factor = shift ** k.gamma
    lhs = arr * arr * (k.b * factor * r_z - k.a * r_qz)
    rhs = factor * r_z - r_qz
    scale = 1 + np.maximum(np.abs(r_z), np.abs(r_qz))
    return float(np.max(np.abs(lhs - rhs) / scale))


class PartialFractionForm(Enum):
    """ Arrangements of the partial fraction expansion of r(a, b, z) over the poles
    z = b^-1 base^-k.
    """
    Residue = 'residue'  # (-1)^k base^(k(k+1)/2) (a/b base^-k; base)_inf / (base;base)_k
    Ratio = 'ratio'  # (a/b; base)_inf factored out, coefficients (base b/a; base)_k (a/b)^k
    Reciprocal = 'reciprocal'  # a = 0, expansion of 1 / (bz; base)_inf


def r_residue(k: QBinomialKernel, index: int, ctx: QContext) -> complex:
    """ Residue coefficient lim (1 - z b base^index) r(a, b, z) at z -> b^-1 base^-index """
    base = ctx.q if k.base is None else k.base
    if index < 0:
        raise DomainError(f'Pole index must be nonnegative, received {index!r}')
    rho = k.a / k.b
    value = (-1) ** index * base ** (index * (index + 1) / 2)
    value *= qpochhammer_inf(rho * base ** (-index), ctx, base)
    value /= qpochhammer_n(base, base, index) * qpochhammer_inf(base, ctx, base)
    return complex(value)


def r_partial_fractions(k: QBinomialKernel,
                        z: Any,
                        ctx: QContext,
                        terms: Optional[int] = None,
                        form: Optional[PartialFractionForm] = PartialFractionForm.Residue) -> Any:
    """ Partial fraction expansion of r(a, b, z) for |a| < |b|.

    @param QBinomialKernel k: kernel parameters (gamma ignored)
    @param z: scalar or array off the poles b^-1 base^-k
    @param QContext ctx: deformation base and tolerance
    @param int terms: optional, fixed number of terms (default: sum until the tail criterion)
    @param PartialFractionForm form: optional, arrangement of the coefficients

    @return: complex scalar or array
    """
    base = ctx.q if k.base is None else k.base
    form = PartialFractionForm(form)
    if k.b == 0 or abs(k.a) >= abs(k.b):
        raise DomainError(f'Partial fraction expansion requires |a| < |b|, received {k!r}')
    if form is PartialFractionForm.Reciprocal and k.a != 0:
        raise DomainError('The reciprocal expansion requires a = 0')
    if form is PartialFractionForm.Ratio and k.a == 0:
        raise DomainError('The ratio arrangement requires a != 0')
    arr = as_complex(z, 'z')
    tol = ctx.tol
    rho = k.a / k.b
    q_inf = complex(qpochhammer_inf(base, ctx, base))
    if form is PartialFractionForm.Ratio:
        prefactor = complex(qpochhammer_inf(rho, ctx, base)) / q_inf
        coefficient = 1 + 0j
    else:
        prefactor = 1 / q_inf
        coefficient = complex(qpochhammer_inf(rho, ctx, base))

    acc = CompensatedSum(np.zeros_like(arr))
    small = 0
    limit = tol.max_terms if terms is None else int(terms)
    for n in range(limit):
        denominator = 1 - arr * k.b * base ** n
        if np.any(np.abs(denominator) < tol.eps_rel):
            raise PoleError(f'Partial fraction expansion evaluated at the pole of index {n:d}')
        term = coefficient / denominator
        acc.add(term)
        if terms is None:
            if np.all(np.abs(term) < tol.eps_rel * (np.abs(acc.value) + 1)):
                small += 1
                if small >= tol.consecutive_small:
                    break
            else:
                small = 0
        if form is PartialFractionForm.Ratio:
            coefficient *= (1 - base ** (n + 1) / rho) * rho / (1 - base ** (n + 1))
        else:
            coefficient *= (rho - base ** (n + 1)) / (1 - base ** (n + 1))
    else:
        if terms is None:
            raise TailNotConverged(f'Partial fraction expansion did not converge within '
                                   f'{limit:d} terms')
    return _scalar_out(prefactor * acc.value, z)


def R_partial_fractions(alpha: float,
                        beta: float,
                        z: Any,
                        ctx: QContext,
                        epsilon: Optional[int] = 1,
                        gamma: Optional[float] = 0.0) -> Any:
    """ z^gamma (eps q^(2 alpha) z^2; q^2)_inf / (eps q^(2 beta) z^2; q^2)_inf resummed over its
    poles z^2 = eps q^(-2(beta + k)), valid for alpha > beta and any z off the poles.
    """
    if alpha <= beta:
        raise DomainError(f'Resummation requires alpha > beta, received alpha={alpha!r}, '
                          f'beta={beta!r}')
    k = QBinomialKernel.from_exponents(alpha, beta, ctx, epsilon)
    arr = as_complex(z, 'z')
    value = np.asarray(r_partial_fractions(k, arr * arr, ctx, form=PartialFractionForm.Ratio))
    return _scalar_out(value * _power(arr, gamma), z)


def R_taylor(alpha: float,
             beta: float,
             z: Any,
             ctx: QContext,
             epsilon: Optional[int] = 1,
             gamma: Optional[float] = 0.0) -> Any:
    """ Taylor form sum_k eps^k q^(2 beta k) (q^(2(alpha - beta)); q^2)_k / (q^2;q^2)_k z^(2k)
    (times z^gamma), convergent for |z| < q^-beta.
    """
    arr = as_complex(z, 'z')
    q, p = ctx.q, ctx.q2
    if arr.size and np.max(np.abs(arr)) >= q ** (-beta):
        raise RadiusError(f'Taylor form converges for |z| < q^-beta = {q ** (-beta):.6g} only')
    rho = p ** (alpha - beta)
    x = epsilon * p ** beta * arr * arr
    value, _ = sum_by_ratio(np.ones_like(arr),
                            lambda n: x * (1 - rho * p ** n) / (1 - p ** (n + 1)),
                            ctx.tol,
                            what='kernel Taylor series')
    return _scalar_out(value * _power(arr, gamma), z)


def classical_exponent(alpha: float,
                       beta: float,
                       z_pair: Tuple[float, float],
                       ctx: QContext,
                       epsilon: Optional[int] = 1,
                       gamma: Optional[float] = 0.0) -> float:
    """ Exponent e in R(z) ~ C z^gamma (1 - eps z^2)^e estimated from the ratio of R at two points.
    Tends to beta - alpha as q -> 1.
    """
    z1, z2 = (float(z) for z in z_pair)
    base1, base2 = 1 - epsilon * z1 * z1, 1 - epsilon * z2 * z2
    if min(z1, z2) <= 0 or min(base1, base2) <= 0 or z1 == z2:
        raise DomainError(f'Invalid point pair {z_pair!r} for the exponent estimate')
    k = QBinomialKernel.from_exponents(alpha, beta, ctx, epsilon, gamma)
    r1 = R_kernel(k, z1, ctx).real / z1 ** gamma
    r2 = R_kernel(k, z2, ctx).real / z2 ** gamma
    return math.log(r1 / r2) / math.log(base1 / base2)


def Q_nu(nu: float, ctx: QContext, trunc: Optional[LatticeTruncation] = None) -> float:
    """ Q_nu = (1 - q) sum_(m in Z) 1 / (q^(m - nu + 1/2) + q^(-m + nu - 1/2)).

    Evaluated as the half line q-integral of 1 / (q^(nu - 1/2) + q^(1/2 - nu) x^2).
    Without an explicit truncation the lattice extent scales with 1 / (1 - q).
    """
    q = ctx.q
    if trunc is None:
        trunc = LatticeTruncation(1, max(2000, int(64 / (1 - q))))
    c_low, c_high = q ** (nu - 0.5), q ** (0.5 - nu)
    value = jackson_integral(lambda x: 1 / (c_low + c_high * x * x), JacksonDomain.HalfLine, ctx,
                             trunc)
    return float(value.real)


def agm(a: float, b: float, eps: Optional[float] = 1e-16) -> float:
    """ Arithmetic-geometric mean of two nonnegative numbers """
    a, b = float(a), float(b)
    for _ in range(200):
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        if abs(a - b) <= eps * a:
            return a
    raise TailNotConverged('AGM iteration did not converge')


def elliptic_moduli(ctx: QContext) -> Tuple[float, float]:
    """ Modulus k and complementary modulus k' belonging to the nome q, from the theta constants
    k = theta_2^2 / theta_3^2 and k' = theta_4^2 / theta_3^2 in product form.
    """
    q, p = ctx.q, ctx.q2
    p_inf = qpochhammer_inf(p, ctx, p).real
    theta2 = 2 * q ** 0.25 * p_inf * qpochhammer_inf(-p, ctx, p).real ** 2
    theta3 = p_inf * qpochhammer_inf(-q, ctx, p).real ** 2
    theta4 = p_inf * qpochhammer_inf(q, ctx, p).real ** 2
    return (theta2 / theta3) ** 2, (theta4 / theta3) ** 2


def Q_nu_elliptic(nu: float, ctx: QContext) -> float:
    """ Closed form Q_nu = (1 - q) K(k) / pi * dn(2 K'(k) (nu - 1/2), k') with the moduli of the
    nome q. The complete integrals come from the AGM, dn from scipy.special.ellipj.
    """
    k, kp = elliptic_moduli(ctx)
    if kp <= 0 or k <= 0:
        raise TailNotConverged(f'Elliptic moduli underflow for q={ctx.q!r}')
    big_k = math.pi / (2 * agm(1.0, kp))
    big_kp = math.pi / (2 * agm(1.0, k))
    _, _, dn, _ = ellipj(2 * big_kp * (nu - 0.5), kp * kp)
    return float((1 - ctx.q) * big_k / math.pi * dn)


def majorant_constant(alpha: float, beta: float, ctx: QContext) -> float:
    """ Constant C with (-q^(2 alpha) z^2; q^2)_inf / (-q^(2 beta) z^2; q^2)_inf
    <= C / (1 + z^2 q^(2 beta)) for real z and alpha > beta + 1.
    """
    if alpha <= beta + 1:
        raise DomainError(f'The majorant requires alpha > beta + 1, received alpha={alpha!r}, '
                          f'beta={beta!r}')
    p = ctx.q2
    x = p ** (beta - alpha + 1)
    step = p ** (alpha - beta - 1)
    series, _ = sum_by_ratio(1.0, lambda n: abs(1 - x * p ** n) * step / (1 - p ** (n + 1)),
                             ctx.tol, what='majorant series')
    prefactor = qpochhammer_inf(p ** (alpha - beta), ctx, p).real / qpochhammer_inf(p, ctx, p).real
    return float(prefactor * series.real)


def _decay_constant(alpha: float, beta: float, ctx: QContext) -> float:
    p = ctx.q2
    x = p ** (beta - alpha + 1)
    step = ctx.q ** (2 * (alpha - beta - 0.5))
    series, _ = sum_by_ratio(1.0, lambda n: abs(1 - x * p ** n) * step / (1 - p ** (n + 1)),
                             ctx.tol, what='decay majorant series')
    prefactor = qpochhammer_inf(p ** (alpha - beta), ctx, p).real / qpochhammer_inf(p, ctx, p).real
    return float(prefactor * series.real)


class BoundGrid:
    """ Sample points for bound_suite """

    def __init__(self,
                 m_values: Optional[Iterable[int]] = range(-10, 11),
                 decay_m: Optional[Iterable[int]] = range(1, 41),
                 s_values: Optional[Iterable[float]] = (0.1, 1.0, 10.0),
                 exponent_pairs: Optional[Iterable[Tuple[float, float]]] = ((2.5, 1.0),
                                                                           (3.0, 0.5)),
                 z_values: Optional[Iterable[float]] = (0.1, 0.5, 1.0, 2.0, 5.0, 10.0)) -> None:
        self._m_values = tuple(int(m) for m in m_values)
        self._decay_m = tuple(int(m) for m in decay_m)
        self._s_values = tuple(float(s) for s in s_values)
        self._exponent_pairs = tuple((float(a), float(b)) for a, b in exponent_pairs)
        self._z_values = tuple(float(z) for z in z_values)
        if not (self._m_values and self._decay_m and self._s_values and self._z_values):
            raise DomainError('Bound grid axes must not be empty')
        if any(s == 0 for s in self._s_values):
            raise DomainError('Bound grid s values must be nonzero')

    @property
    def m_values(self) -> Tuple[int, ...]:
        return self._m_values

    @property
    def decay_m(self) -> Tuple[int, ...]:
        return self._decay_m

    @property
    def s_values(self) -> Tuple[float, ...]:
        return self._s_values

    @property
    def exponent_pairs(self) -> Tuple[Tuple[float, float], ...]:
        return self._exponent_pairs

    @property
    def z_values(self) -> Tuple[float, ...]:
        return self._z_values


class BoundCheck:
    """ Outcome of one bound check.

    worst_margin is the minimum of (bound - value) / bound over the grid, so the bound holds iff
    worst_margin >= 0. monotone is None for pure bounds and tells for decay statements whether the
    values decrease strictly along m.
    """

    def __init__(self, name: str, worst_margin: float, monotone: Optional[bool] = None) -> None:
        self._name = name
        self._worst_margin = float(worst_margin)
        self._monotone = monotone

    @property
    def name(self) -> str:
        return self._name

    @property
    def worst_margin(self) -> float:
        return self._worst_margin

    @property
    def monotone(self) -> Optional[bool]:
        return self._monotone

    @property
    def holds(self) -> bool:
        return self._worst_margin >= 0 and self._monotone is not False

    def __iter__(self):
        return iter((self._name, self._worst_margin))

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(name={self._name!r}, ' \
               f'worst_margin={self._worst_margin!r}, monotone={self._monotone!r})'


def _margin(bound: np.ndarray, value: np.ndarray) -> float:
    bound = np.asarray(bound, dtype=float)
    value = np.asarray(value, dtype=float)
    return float(np.min((bound - value) / bound))


def _strictly_decreasing(values: Sequence[float]) -> bool:
    values = np.asarray(values, dtype=float)
    # values that underflowed to zero count as decayed
    underflow = (values[1:] == 0) & (values[:-1] == 0)
    return bool(np.all((np.diff(values) < 0) | underflow))


def bound_suite(ctx: QContext, grid: Optional[BoundGrid] = None) -> List[BoundCheck]:
    """ Checks the bounds and decay statements for the q-exponentials, the q-trigonometric
    functions and the kernels (-q^(2 alpha) z^2; q^2)_inf / (-q^(2 beta) z^2; q^2)_inf.

    @return list: BoundCheck per statement in the order eq_imaginary_decay, cos_q_bound,
                  eq_negative_decay, Cos_q_bound, Sin_q_bound, kernel_majorant, kernel_decay
    """
    grid = BoundGrid() if grid is None else grid
    q, lam = ctx.q, ctx.lam
    s = np.asarray(grid.s_values, dtype=float)
    all_m = np.asarray(sorted(set(grid.m_values) | set(grid.decay_m)), dtype=float)
    decay_m = np.asarray(grid.decay_m, dtype=float)
    pm_bound = (Eq_exp(1 / q, ctx) * eq_exp(q, ctx)).real
    one_bound = (Eq_exp(1.0, ctx) * eq_exp(q, ctx)).real
    checks = list()

    # |e_q(i y)| <= (1 + y^2)^(-1/2) E_q(1/q) e_q(q), y = lam q^-m s / 2, decaying in m
    y = lam / 2 * np.multiply.outer(q ** (-all_m), np.abs(s))
    value = np.abs(eq_exp(1j * y, ctx))
    margin = _margin(pm_bound / np.sqrt(1 + y * y), value)
    y_decay = lam / 2 * np.multiply.outer(q ** (-decay_m), np.abs(s))
    decay = np.abs(eq_exp(1j * y_decay, ctx))
    checks.append(BoundCheck('eq_imaginary_decay', margin,
                             all(_strictly_decreasing(col) for col in decay.T)))

    # |cos_q(y)| <= E_q(1/q) e_q(q) / (1 + y^2)
    m_arr = np.asarray(grid.m_values, dtype=float)
    y = lam / 2 * np.multiply.outer(q ** (-m_arr), s)
    cos_q, big_cos, big_sin = qtrig(y, ctx)
    checks.append(BoundCheck('cos_q_bound', _margin(pm_bound / (1 + y * y), np.abs(cos_q))))

    # e_q(-y) <= E_q(1) e_q(q) / |1 + y| for s > 0, decaying in m
    positive = np.abs(s)
    y = lam / 2 * np.multiply.outer(q ** (-all_m), positive)
    value = np.real(eq_exp(-y, ctx))
    margin = _margin(one_bound / np.abs(1 + y), value)
    decay = np.real(eq_exp(-lam / 2 * np.multiply.outer(q ** (-decay_m), positive), ctx))
    checks.append(BoundCheck('eq_negative_decay', margin,
                             all(_strictly_decreasing(col) for col in decay.T)))

    # |Cos_q(y)| <= 1 and |Sin_q(y)| <= q^-m (1 + q) |s| / 2
    checks.append(BoundCheck('Cos_q_bound', _margin(np.ones_like(big_cos), np.abs(big_cos))))
    sin_bound = 0.5 * (1 + q) * np.multiply.outer(q ** (-m_arr), np.abs(s))
    checks.append(BoundCheck('Sin_q_bound', _margin(sin_bound, np.abs(big_sin))))

    # kernel majorant C / (1 + z^2 q^(2 beta)) for alpha > beta + 1
    z = np.asarray(grid.z_values, dtype=float)
    margins = list()
    for alpha, beta in grid.exponent_pairs:
        if alpha <= beta + 1:
            continue
        k = QBinomialKernel.from_exponents(alpha, beta, ctx, epsilon=-1)
        value = np.real(R_kernel(k, z, ctx))
        const = majorant_constant(alpha, beta, ctx)
        margins.append(_margin(const / (1 + z * z * ctx.q2 ** beta), value))
    if margins:
        checks.append(BoundCheck('kernel_majorant', min(margins)))

    # (-q^(2(alpha - m)); q^2)_inf / (-q^(2(beta - m)); q^2)_inf -> 0 for alpha > beta + 1/2
    margins = list()
    monotone = True
    for alpha, beta in grid.exponent_pairs:
        if alpha <= beta + 0.5:
            continue
        k = QBinomialKernel(-ctx.q2 ** alpha, -ctx.q2 ** beta, 0.0, ctx.q2)
        value = np.real(r_kernel(k, q ** (-2 * decay_m), ctx))
        const = _decay_constant(alpha, beta, ctx)
        margins.append(_margin(const * q ** (decay_m - beta) / 2, value))
        monotone = monotone and _strictly_decreasing(value)
    if margins:
        checks.append(BoundCheck('kernel_decay', min(margins), monotone))

    for check in checks:
        _log.debug(f'Bound {check.name}: worst margin {check.worst_margin:.3e}, '
                   f'monotone {check.monotone}')
    return checks

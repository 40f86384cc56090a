# -*- coding: utf-8 -*-

"""
Scalar q-series primitives: q-Pochhammer symbols, q-gamma and q-beta functions, the two
q-exponentials, q-trigonometric functions and the basic hypergeometric series 0Phi1, 0Phi3 and
2Phi1.

All primitives accept python scalars or numpy arrays. Scalar input gives a python scalar, array
input an array of the same shape. Arguments of the q-exponentials are passed already scaled, i.e.
e_q(u) with u = (1 - q^2) x / 2.

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

__all__ = ('CompensatedSum', 'Eq_exp', 'QContext', 'Tolerance', 'as_complex', 'eq_exp',
           'phi01', 'phi03', 'phi21', 'qbeta', 'qgamma', 'qnumber', 'qpochhammer_inf',
           'qpochhammer_n', 'qtrig', 'sum_by_ratio', 'terminating_index')

import math
import numpy as np
from typing import Any, Callable, Optional, Tuple, Union

from qbmf.core.logger import get_logger
from qbmf.util.constraints import ScalarConstraint
from qbmf.util.helpers import is_integer, is_real
from qbmf.special.errors import DomainError, PoleError, TailNotConverged

ComplexLike = Union[complex, float, int, np.ndarray]

_log = get_logger(__name__)

_q_constraint = ScalarConstraint(default=0.5, bounds=(0, 1), exclusive=True, name='q')
_eps_constraint = ScalarConstraint(default=1e-13, bounds=(0, 1), exclusive=True, name='eps_rel')
_max_terms_constraint = ScalarConstraint(default=5000, bounds=(1, 2**31 - 1), enforce_int=True,
                                         name='max_terms')
_small_constraint = ScalarConstraint(default=3, bounds=(1, 1000), enforce_int=True,
                                     name='consecutive_small')


def _checked(constraint: ScalarConstraint, value: Any, name: str) -> Any:
    try:
        constraint.check(value)
    except (TypeError, ValueError) as err:
        raise DomainError(f'Invalid {name}: {err}') from None
    return value


class Tolerance:
    """ Series truncation policy.

    A series (or product, or lattice tail) is considered converged once consecutive_small
    successive contributions are each below eps_rel relative to the running result (plus one).
    """

    def __init__(self,
                 eps_rel: Optional[float] = 1e-13,
                 max_terms: Optional[int] = 5000,
                 consecutive_small: Optional[int] = 3) -> None:
        self._eps_rel = float(_checked(_eps_constraint, eps_rel, 'eps_rel'))
        self._max_terms = int(_checked(_max_terms_constraint, max_terms, 'max_terms'))
        self._consecutive_small = int(
            _checked(_small_constraint, consecutive_small, 'consecutive_small')
        )

    @property
    def eps_rel(self) -> float:
        return self._eps_rel

    @property
    def max_terms(self) -> int:
        return self._max_terms

    @property
    def consecutive_small(self) -> int:
        return self._consecutive_small

    def copy(self, **overrides) -> 'Tolerance':
        kwargs = {'eps_rel': self._eps_rel,
                  'max_terms': self._max_terms,
                  'consecutive_small': self._consecutive_small}
        kwargs.update(overrides)
        return Tolerance(**kwargs)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Tolerance):
            return NotImplemented
        return (self._eps_rel, self._max_terms, self._consecutive_small) == \
               (other._eps_rel, other._max_terms, other._consecutive_small)

    def __hash__(self) -> int:
        return hash((self._eps_rel, self._max_terms, self._consecutive_small))

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(eps_rel={self._eps_rel!r}, ' \
               f'max_terms={self._max_terms!r}, consecutive_small={self._consecutive_small!r})'


class QContext:
    """ The deformation base q in (0, 1) together with the cached derived quantities q^2 and
    lambda = 1 - q^2 and the truncation policy shared by all evaluators.
    """

    def __init__(self, q: float, tol: Optional[Tolerance] = None) -> None:
        if not is_real(q):
            raise DomainError(f'Deformation base q must be a real number, received {q!r}')
        q = float(_checked(_q_constraint, float(q), 'deformation base q'))
        self._q = q
        self._q2 = q * q
        self._lam = 1 - self._q2
        self._tol = Tolerance() if tol is None else tol

    @property
    def q(self) -> float:
        return self._q

    @property
    def q2(self) -> float:
        return self._q2

    @property
    def lam(self) -> float:
        return self._lam

    @property
    def tol(self) -> Tolerance:
        return self._tol

    def with_tolerance(self, tol: Optional[Tolerance] = None, **overrides) -> 'QContext':
        """ Returns a new context for the same q with a replaced (or modified) truncation policy.
        """
        if tol is None:
            tol = self._tol.copy(**overrides)
        return QContext(self._q, tol)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, QContext):
            return NotImplemented
        return self._q == other._q and self._tol == other._tol

    def __hash__(self) -> int:
        return hash((self._q, self._tol))

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(q={self._q!r}, tol={self._tol!r})'


class CompensatedSum:
    """ Running compensated (Neumaier) sum working element-wise on numpy arrays.

    Each addition uses the error-free two-sum transformation and keeps the rounding error in a
    separate correction term that is folded in when the value is read.
    """

    def __init__(self, initial: ComplexLike = 0) -> None:
        self._sum = np.array(initial, dtype=complex)
        self._correction = np.zeros_like(self._sum)

    def add(self, value: ComplexLike) -> None:
        value = np.asarray(value, dtype=complex)
        total = self._sum + value
        partial = total - value
        self._correction = self._correction + ((self._sum - partial) + (value - (total - partial)))
        self._sum = total

    @property
    def value(self) -> np.ndarray:
        return self._sum + self._correction


def as_complex(value: ComplexLike, name: Optional[str] = 'argument') -> np.ndarray:
    """ Converts value to a complex numpy array and rejects NaN or infinite entries.

    @param value: scalar or array-like
    @param str name: optional, argument name used in the error message

    @return numpy.ndarray: complex array (0-d for scalar input)
    """
    arr = np.asarray(value, dtype=complex)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f'Non-finite {name} encountered: {value!r}')
    return arr


def _output(value: np.ndarray, like: Any) -> ComplexLike:
    if not np.all(np.isfinite(value)):
        raise TailNotConverged('Evaluation produced non-finite values')
    if np.ndim(like) == 0 and not isinstance(like, np.ndarray):
        return complex(value)
    return value


def qnumber(x: ComplexLike, q: float) -> ComplexLike:
    """ The q-number [x]_q = (1 - q^x) / (1 - q) """
    return (1 - np.power(q, x)) / (1 - q)


def terminating_index(a: float, base: float) -> Optional[int]:
    """ Returns k if a == base^(-k) for a nonnegative integer k (within 1e-10 in the exponent),
    otherwise None. A Pochhammer symbol (a; base)_n vanishes for all n > k in that case.
    """
    if not np.isreal(a) or np.real(a) <= 0:
        return None
    exponent = -math.log(float(np.real(a))) / math.log(base)
    k = round(exponent)
    if k >= 0 and abs(exponent - k) < 1e-10:
        return int(k)
    return None


def sum_by_ratio(first: ComplexLike,
                 ratio: Callable[[int], ComplexLike],
                 tol: Tolerance,
                 what: Optional[str] = 'series') -> Tuple[np.ndarray, int]:
    """ Sums a series given by its first term and the ratio term_(n+1) / term_n.

    Stops after tol.consecutive_small successive terms each satisfy
    |term| < eps_rel * (|partial sum| + 1) for all array elements.

    @param first: the n = 0 term (scalar or array)
    @param callable ratio: ratio(n) -> term_(n+1) / term_n (scalar or array)
    @param Tolerance tol: truncation policy
    @param str what: optional, series name used in log and error messages

    @return tuple: (sum as complex numpy array, number of terms used)
    """
    term = np.array(first, dtype=complex)
    acc = CompensatedSum(term)
    small = 0
    for n in range(tol.max_terms):
        term = term * ratio(n)
        acc.add(term)
        total = acc.value
        if not np.all(np.isfinite(total)):
            raise TailNotConverged(f'{what} partial sums became non-finite after {n + 2:d} terms')
        if np.all(np.abs(term) < tol.eps_rel * (np.abs(total) + 1)):
            small += 1
            if small >= tol.consecutive_small:
                _log.debug(f'{what} converged after {n + 2:d} terms')
                return total, n + 2
        else:
            small = 0
    raise TailNotConverged(f'{what} did not converge within {tol.max_terms:d} terms')


def _infinite_product(x0: np.ndarray,
                      base: float,
                      tol: Tolerance,
                      factor: Callable[[np.ndarray], np.ndarray],
                      scale: Optional[float] = 1.0,
                      what: Optional[str] = 'infinite product') -> np.ndarray:
    """ Multiplies factor(x0 * base^n) for n = 0, 1, ... until scale * |x0 * base^n| drops below
    eps_rel for consecutive_small successive n (for all array elements).
    """
    x = np.array(x0, dtype=complex)
    result = np.ones_like(x)
    bound = scale * float(np.max(np.abs(x), initial=0.0))
    small = 0
    for n in range(tol.max_terms):
        result = result * factor(x)
        if bound < tol.eps_rel:
            small += 1
            if small >= tol.consecutive_small:
                return result
        else:
            small = 0
        x = x * base
        bound *= base
    raise TailNotConverged(f'{what} did not converge within {tol.max_terms:d} factors')


def qpochhammer_n(a: ComplexLike, q: float, n: int) -> ComplexLike:
    """ Finite q-Pochhammer symbol (a; q)_n = prod_(j=0)^(n-1) (1 - a q^j).

    @param a: scalar or array
    @param float q: base
    @param int n: number of factors, must be >= 0

    @return: the product (1 for n == 0)
    """
    if not is_integer(n) or n < 0:
        raise DomainError(f'Pochhammer length must be a nonnegative integer, received {n!r}')
    arr = as_complex(a)
    powers = np.power(float(q), np.arange(n, dtype=float))
    result = np.prod(1 - np.multiply.outer(arr, powers), axis=-1) if n > 0 else np.ones_like(arr)
    return _output(result, a)


def qpochhammer_inf(a: ComplexLike, ctx: QContext, base: Optional[float] = None) -> ComplexLike:
    """ Infinite q-Pochhammer symbol (a; base)_inf, base defaults to ctx.q """
    base = ctx.q if base is None else base
    arr = as_complex(a)
    result = _infinite_product(arr, base, ctx.tol, lambda x: 1 - x, what='(a;q)_inf')
    return _output(result, a)


def _check_gamma_argument(nu: float) -> None:
    if nu <= 0 and float(nu).is_integer():
        raise PoleError(f'q-gamma function has a pole at nonpositive integer {nu!r}')


def qgamma(nu: float, ctx: QContext, base: Optional[float] = None) -> float:
    """ q-gamma function Gamma_b(nu) = (b;b)_inf / (b^nu;b)_inf * (1-b)^(1-nu), b = base (ctx.q by
    default).
    """
    base = ctx.q if base is None else base
    nu = float(nu)
    _check_gamma_argument(nu)
    numerator = qpochhammer_inf(base, ctx, base)
    denominator = qpochhammer_inf(base ** nu, ctx, base)
    if abs(denominator) < ctx.tol.eps_rel:
        raise PoleError(f'q-gamma function pole at nu={nu!r}')
    return float((numerator / denominator).real * (1 - base) ** (1 - nu))


def qbeta(nu: float, mu: float, ctx: QContext, base: Optional[float] = None) -> float:
    """ q-beta function B_b(nu; mu) = Gamma_b(nu) Gamma_b(mu) / Gamma_b(nu + mu) """
    return qgamma(nu, ctx, base) * qgamma(mu, ctx, base) / qgamma(nu + mu, ctx, base)


def eq_exp(u: ComplexLike, ctx: QContext) -> ComplexLike:
    """ The q-exponential e_q(u) = sum u^n / (q;q)_n = 1 / (u;q)_inf.

    Uses the power series for |u| <= 0.9 and the reciprocal product (the meromorphic continuation)
    elsewhere. Raises PoleError if u hits q^(-k).
    """
    arr = as_complex(u)
    q = ctx.q
    if arr.size and np.max(np.abs(arr)) <= 0.9:
        result, _ = sum_by_ratio(np.ones_like(arr), lambda n: arr / (1 - q ** (n + 1)), ctx.tol,
                                 what='e_q series')
        return _output(result, u)

    def reciprocal(x):
        denominator = 1 - x
        if np.any(np.abs(denominator) < ctx.tol.eps_rel):
            raise PoleError('e_q evaluated at a pole u = q^(-k)')
        return 1 / denominator

    result = _infinite_product(arr, q, ctx.tol, reciprocal, what='e_q product')
    return _output(result, u)


def Eq_exp(u: ComplexLike, ctx: QContext) -> ComplexLike:
    """ The entire q-exponential E_q(u) = sum q^(n(n-1)/2) u^n / (q;q)_n = (-u;q)_inf """
    arr = as_complex(u)
    result = _infinite_product(-arr, ctx.q, ctx.tol, lambda x: 1 - x, what='E_q product')
    return _output(result, u)


def qtrig(u: ComplexLike, ctx: QContext) -> Tuple[Any, Any, Any]:
    """ The q-trigonometric functions of real argument.

    @return tuple: (cos_q u, Cos_q u, Sin_q u) with
                   cos_q u = [e_q(iu) + e_q(-iu)] / 2,
                   Cos_q u = [E_q(iu) + E_q(-iu)] / 2,
                   Sin_q u = [E_q(iu) - E_q(-iu)] / 2i
    """
    arr = as_complex(u)
    if np.any(arr.imag != 0):
        raise DomainError('q-trigonometric functions are evaluated for real arguments only')
    e_plus, e_minus = eq_exp(1j * arr, ctx), eq_exp(-1j * arr, ctx)
    big_plus, big_minus = Eq_exp(1j * arr, ctx), Eq_exp(-1j * arr, ctx)
    cos_q = np.real(0.5 * (np.asarray(e_plus) + np.asarray(e_minus)))
    big_cos = np.real(0.5 * (np.asarray(big_plus) + np.asarray(big_minus)))
    big_sin = np.real((np.asarray(big_plus) - np.asarray(big_minus)) / 2j)
    if np.ndim(u) == 0 and not isinstance(u, np.ndarray):
        return float(cos_q), float(big_cos), float(big_sin)
    return cos_q, big_cos, big_sin


def phi01(u: ComplexLike, ctx: QContext) -> ComplexLike:
    """ Basic hypergeometric series 0Phi1(-; 0; q, u) = sum q^(n(n-1)) u^n / (q;q)_n """
    arr = as_complex(u)
    q = ctx.q
    result, _ = sum_by_ratio(np.ones_like(arr),
                             lambda n: q ** (2 * n) * arr / (1 - q ** (n + 1)),
                             ctx.tol,
                             what='0Phi1')
    return _output(result, u)


def phi03(nu: float, u2: ComplexLike, ctx: QContext) -> ComplexLike:
    """ Basic hypergeometric series 0Phi3(-; 0, 0, q^(2nu+2); q^2, .) in the squared variable
    u2 = x^2:

        sum_n (-1)^n q^(4n(nu+n)) lambda^(2n) x^(2n) / ((q^2;q^2)_n (q^(2nu+2);q^2)_n 2^(2n))
    """
    arr = as_complex(u2)
    q, p, lam = ctx.q, ctx.q2, ctx.lam
    nu = float(nu)
    if (nu + 1) <= 0 and float(nu + 1).is_integer():
        raise PoleError(f'0Phi3 denominator (q^(2nu+2);q^2)_n vanishes for nu={nu!r}')
    scaled = -lam * lam * arr / 4

    def ratio(n):
        return q ** (4 * (nu + 2 * n + 1)) * scaled / ((1 - p ** (n + 1)) * (1 - p ** (nu + n + 1)))

    result, _ = sum_by_ratio(np.ones_like(arr), ratio, ctx.tol, what='0Phi3')
    return _output(result, u2)


def phi21(a: float,
          b: float,
          c: float,
          base: float,
          u: ComplexLike,
          ctx: QContext) -> ComplexLike:
    """ Basic hypergeometric series
        2Phi1(a, b; c; base, u) = sum (a;base)_n (b;base)_n / ((base;base)_n (c;base)_n) u^n
    for |u| <= 1. Terminating series (a or b equal to base^(-k)) are summed exactly up to n = k.
    """
    arr = as_complex(u)
    if arr.size and np.max(np.abs(arr)) > 1 + 1e-15:
        raise DomainError('2Phi1 is only evaluated inside the closed unit disk |u| <= 1')
    stops = [k for k in (terminating_index(a, base), terminating_index(b, base)) if k is not None]

    def ratio(n):
        den_c = 1 - c * base ** n
        if abs(den_c) < ctx.tol.eps_rel:
            raise PoleError(f'2Phi1 denominator (c;base)_n vanishes at n={n + 1:d}')
        return (1 - a * base ** n) * (1 - b * base ** n) / ((1 - base ** (n + 1)) * den_c) * arr

    if stops:
        last = min(stops)
        term = np.ones_like(arr)
        acc = CompensatedSum(term)
        for n in range(last):
            term = term * ratio(n)
            acc.add(term)
        return _output(acc.value, u)
    result, _ = sum_by_ratio(np.ones_like(arr), ratio, ctx.tol, what='2Phi1')
    return _output(result, u)

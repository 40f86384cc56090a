# -*- coding: utf-8 -*-

"""
Scalar parameter constraints used to validate q, tolerances, truncation limits and grid values.

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

__all__ = ['ScalarConstraint']

from typing import Union, Optional, Tuple, Callable, Any
from qbmf.util.helpers import is_float, is_integer

_Real = Union[int, float]


class ScalarConstraint:
    """ Range (and optional custom) constraint for a single real parameter.

    Bounds are inclusive unless exclusive=True. The custom checker is a callable returning a bool
    valid-flag for a single value.
    """
    def __init__(self,
                 default: _Real,
                 bounds: Tuple[_Real, _Real],
                 enforce_int: Optional[bool] = False,
                 checker: Optional[Callable[[_Real], bool]] = None,
                 exclusive: Optional[bool] = False,
                 name: Optional[str] = 'value'
                 ) -> None:
        self._enforce_int = bool(enforce_int)
        self._exclusive = bool(exclusive)
        self._name = str(name)
        self.check_value_type(default)
        for value in bounds:
            self.check_value_type(value)
        if checker is not None and not callable(checker):
            raise TypeError('checker must be either None or a callable accepting a single scalar '
                            'and returning a valid-flag bool')
        self._default = default
        self._minimum, self._maximum = sorted(bounds)
        self._checker = checker

        if not self.is_valid(self._default):
            raise ValueError(f'invalid default {self._name} ({self._default}) encountered')

    @property
    def bounds(self) -> Tuple[_Real, _Real]:
        return self._minimum, self._maximum

    @property
    def minimum(self) -> _Real:
        return self._minimum

    @property
    def maximum(self) -> _Real:
        return self._maximum

    @property
    def default(self) -> _Real:
        return self._default

    @property
    def enforce_int(self) -> bool:
        return self._enforce_int

    @property
    def exclusive(self) -> bool:
        return self._exclusive

    @property
    def name(self) -> str:
        return self._name

    def check(self, value: _Real) -> None:
        self.check_value_type(value)
        self.check_value_range(value)
        self.check_custom(value)

    def is_valid(self, value: _Real) -> bool:
        try:
            self.check(value)
        except (ValueError, TypeError):
            return False
        return True

    def check_custom(self, value: Any) -> None:
        if (self._checker is not None) and (not self._checker(value)):
            raise ValueError(f'Custom checker failed to validate {self._name} "{value}"')

    def check_value_range(self, value: _Real) -> None:
        if self._exclusive:
            valid = self._minimum < value < self._maximum
            interval = f'({self._minimum}, {self._maximum})'
        else:
            valid = self._minimum <= value <= self._maximum
            interval = f'[{self._minimum}, {self._maximum}]'
        if not valid:
            raise ValueError(f'{self._name} "{value}" is out of bounds {interval}')

    def check_value_type(self, value: Any) -> None:
        if isinstance(value, bool):
            raise TypeError(f'{self._name} must be a number, not bool (received {value})')
        if self._enforce_int:
            if not is_integer(value):
                raise TypeError(f'{self._name} must be int type (received {value})')
        else:
            if not (is_integer(value) or is_float(value)):
                raise TypeError(f'{self._name} must be int or float type (received {value})')

    def __repr__(self) -> str:
        cls = self.__class__.__name__
        module = self.__class__.__module__
        return f'{module}.{cls}(' \
               f'default={self.default}, ' \
               f'bounds={self.bounds}, ' \
               f'enforce_int={self.enforce_int}, ' \
               f'checker={self._checker}, ' \
               f'exclusive={self._exclusive}, ' \
               f'name={self._name!r})'

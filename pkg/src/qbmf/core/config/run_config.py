# -*- coding: utf-8 -*-

"""
RunConfig, the validated and immutable set of parameters of a single command run.


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

__all__ = ['RunConfig']

import copy
from typing import Any, Dict, Mapping, Optional, Tuple

from qbmf.special.jackson import LatticeTruncation
from qbmf.special.qbessel import BesselKind
from qbmf.special.qcore import Tolerance
from qbmf.special.representations import RepresentationId, DEFAULT_THRESHOLD

from .file_handler import FileHandler
from .validator import validate_run_config


class RunConfig:
    """ Validated run configuration.

    Built from a raw mapping (see run_config_schema). Missing entries are filled with their
    defaults on construction, invalid ones raise jsonschema.ValidationError.
    """

    def __init__(self, config: Mapping[str, Any]) -> None:
        raw = copy.deepcopy(dict(config))
        validate_run_config(raw)
        self._config = raw
        self._tolerance = Tolerance(**raw['tolerance'])
        self._truncation = LatticeTruncation(**raw['truncation'])

    @classmethod
    def from_file(cls,
                  path: str,
                  overrides: Optional[Mapping[str, Any]] = None) -> 'RunConfig':
        """ Loads a configuration file and applies overrides (e.g. command line values) on top.
        Nested "tolerance" and "truncation" mappings are merged key by key.
        """
        raw = FileHandler.load(path, validate=False)
        return cls(_merge(raw, overrides))

    def dump(self, path: str) -> None:
        FileHandler.dump(path, self.config_map)

    def with_overrides(self, overrides: Mapping[str, Any]) -> 'RunConfig':
        return RunConfig(_merge(self._config, overrides))

    @property
    def config_map(self) -> Dict[str, Any]:
        """ Deepcopy of the raw config dict, defaults included """
        return copy.deepcopy(self._config)

    @property
    def command(self) -> str:
        return self._config['command']

    @property
    def funcs(self) -> Optional[Tuple[BesselKind, ...]]:
        """ Selected function kinds, None if not given """
        names = self._config['func']
        return None if names is None else tuple(BesselKind[name] for name in names)

    @property
    def reps(self) -> Tuple[RepresentationId, ...]:
        """ Selected representations in declaration order, all of them if not given """
        selected = self._config['rep']
        if selected is None:
            return tuple(RepresentationId)
        return tuple(rep for rep in RepresentationId if rep.value in selected)

    @property
    def reps_requested(self) -> bool:
        """ True if the representation selection was given explicitly """
        return self._config['rep'] is not None

    @property
    def q_list(self) -> Tuple[float, ...]:
        return tuple(sorted(float(q) for q in self._config['q']))

    @property
    def nu_list(self) -> Tuple[float, ...]:
        return tuple(sorted(float(nu) for nu in self._config['nu']))

    @property
    def s_list(self) -> Optional[Tuple[float, ...]]:
        """ Sorted argument list, None for the command specific default grid """
        s = self._config['s']
        return None if s is None else tuple(sorted(float(x) for x in s))

    @property
    def k_list(self) -> Tuple[int, ...]:
        return tuple(sorted(set(int(k) for k in self._config['k'])))

    @property
    def output_format(self) -> str:
        return self._config['format']

    @property
    def tolerance(self) -> Tolerance:
        return self._tolerance

    @property
    def truncation(self) -> LatticeTruncation:
        return self._truncation

    @property
    def threshold(self) -> float:
        return float(self._config.get('threshold', DEFAULT_THRESHOLD))

    @property
    def workers(self) -> int:
        return int(self._config['workers'])

    @property
    def out(self) -> Optional[str]:
        return self._config['out']

    @property
    def report(self) -> Optional[str]:
        """ YAML report file (rows plus summary), None if not requested """
        return self._config['report']

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, RunConfig):
            return NotImplemented
        return self._config == other._config

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}({self._config!r})'


def _merge(base: Mapping[str, Any], overrides: Optional[Mapping[str, Any]]) -> Dict[str, Any]:
    merged = copy.deepcopy(dict(base))
    for key, value in (overrides or dict()).items():
        if value is None:
            continue
        if key in ('tolerance', 'truncation') and isinstance(merged.get(key), Mapping):
            nested = dict(merged[key])
            nested.update({k: v for k, v in value.items() if v is not None})
            merged[key] = nested
        else:
            merged[key] = value
    return merged

# -*- coding: utf-8 -*-

"""
JSON schema (draft v7) of a qbmf run configuration.


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

__all__ = ['COMMANDS', 'run_config_schema']

from typing import Dict, Any

from qbmf.special.qbessel import BesselKind
from qbmf.special.representations import RepresentationId

COMMANDS = ('eval', 'table', 'verify', 'limits')


def _number_list(default, exclusive_min=None, exclusive_max=None) -> Dict[str, Any]:
    items = {'type': 'number'}
    if exclusive_min is not None:
        items['exclusiveMinimum'] = exclusive_min
    if exclusive_max is not None:
        items['exclusiveMaximum'] = exclusive_max
    schema = {'type': 'array', 'minItems': 1, 'items': items}
    if default is None:
        schema['type'] = ['null', 'array']
    schema['default'] = default
    return schema


def run_config_schema() -> Dict[str, Any]:
    """ Creates and returns the JSON schema for a qbmf run configuration.

    "func", "rep" and "s" default to None, meaning the command specific default selection.
    """
    return {
        'type': 'object',
        'additionalProperties': False,
        'required': ['command'],
        'properties': {
            'command': {
                'type': 'string',
                'enum': list(COMMANDS)
            },
            'func': {
                'type': ['null', 'array'],
                'minItems': 1,
                'uniqueItems': True,
                'items': {
                    'type': 'string',
                    'enum': [kind.name for kind in BesselKind]
                },
                'default': None
            },
            'rep': {
                'type': ['null', 'array'],
                'minItems': 1,
                'uniqueItems': True,
                'items': {
                    'type': 'string',
                    'enum': [rep.value for rep in RepresentationId]
                },
                'default': None
            },
            'q': _number_list([0.3, 0.5, 0.7, 0.9], exclusive_min=0, exclusive_max=1),
            'nu': _number_list([0.25, 0.75, 1.5, 2.5]),
            's': _number_list(None),
            'k': {
                'type': 'array',
                'minItems': 1,
                'items': {
                    'type': 'integer',
                    'minimum': 1,
                    'maximum': 40
                },
                'default': [3, 4, 5, 6, 7, 8]
            },
            'format': {
                'type': 'string',
                'enum': ['csv', 'json'],
                'default': 'csv'
            },
            'tolerance': {
                'type': 'object',
                'additionalProperties': False,
                'default': dict(),
                'properties': {
                    'eps_rel': {
                        'type': 'number',
                        'exclusiveMinimum': 0,
                        'exclusiveMaximum': 1,
                        'default': 1e-13
                    },
                    'max_terms': {
                        'type': 'integer',
                        'minimum': 1,
                        'default': 5000
                    },
                    'consecutive_small': {
                        'type': 'integer',
                        'minimum': 1,
                        'default': 3
                    }
                }
            },
            'truncation': {
                'type': 'object',
                'additionalProperties': False,
                'default': dict(),
                'properties': {
                    'm_min_abs': {
                        'type': 'integer',
                        'minimum': 0,
                        'default': 1
                    },
                    'm_max_abs': {
                        'type': 'integer',
                        'minimum': 1,
                        'default': 2000
                    }
                }
            },
            'threshold': {
                'type': 'number',
                'exclusiveMinimum': 0,
                'default': 1e-9
            },
            'workers': {
                'type': 'integer',
                'minimum': 1,
                'default': 1
            },
            'out': {
                'type': ['null', 'string'],
                'default': None
            },
            'report': {
                'type': ['null', 'string'],
                'default': None
            }
        }
    }

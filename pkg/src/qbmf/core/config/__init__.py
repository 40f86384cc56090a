# -*- coding: utf-8 -*-

"""
Run configuration handling: JSON schema, default inserting validator, YAML file handler and the
RunConfig object consumed by the commands.


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

__all__ = ['DuplicateKeyError', 'FileHandler', 'ParserError', 'RunConfig', 'ValidationError',
           'YAMLError', 'run_config_schema', 'validate_run_config']

from .schema import run_config_schema
from .validator import ValidationError, validate_run_config
from .file_handler import FileHandler, ParserError, YAMLError, DuplicateKeyError
from .run_config import RunConfig

# -*- coding: utf-8 -*-

"""
Loading and dumping of run configuration files (YAML, ".cfg", ".yml" or ".yaml").


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

__all__ = ['CONFIG_EXTENSIONS', 'DuplicateKeyError', 'FileHandler', 'FileHandlerBase',
           'ParserError', 'ValidationError', 'YAMLError']

import os
from typing import Any, Dict, Mapping

from qbmf.util.yaml import yaml_dump, yaml_load, ParserError, YAMLError, DuplicateKeyError

from .validator import validate_run_config, ValidationError

CONFIG_EXTENSIONS = ('.cfg', '.yml', '.yaml')


class FileHandlerBase:
    """ File handler base class providing class methods for handling raw configuration files.
    """

    @classmethod
    def _load(cls, path: str) -> Dict[str, Any]:
        return yaml_load(cls._relative_to_absolute_path(path))

    @classmethod
    def _dump(cls, path: str, config: Mapping[str, Any]) -> None:
        if not path.endswith(CONFIG_EXTENSIONS):
            raise ValueError(f'Configuration file must have one of the file extensions '
                             f'{CONFIG_EXTENSIONS}.')
        yaml_dump(os.path.abspath(path), dict(config))

    @staticmethod
    def _relative_to_absolute_path(path: str) -> str:
        """ Converts the given path to an existing absolute path, relative paths are resolved
        against the current working directory.

        Raises FileNotFoundError if the file does not exist.
        """
        abs_path = os.path.abspath(os.path.expanduser(path))
        if not os.path.isfile(abs_path):
            raise FileNotFoundError(f'Configuration file "{path}" does not exist.')
        return abs_path


class FileHandler(FileHandlerBase):
    """ File handler class for run configuration files. Applies schema validation and default
    value insertion upon loading/dumping.
    """

    @classmethod
    def load(cls, path: str, validate: bool = True) -> Dict[str, Any]:
        """ Load and validate a run configuration file from disk.
        Raises jsonschema.ValidationError if validation fails.

        @param str path: file to load
        @param bool validate: optional, skip validation if False (partial configs to be merged)
        """
        config = cls._load(path)
        if validate:
            validate_run_config(config)
        return config

    @classmethod
    def dump(cls, path: str, config: Dict[str, Any]) -> None:
        """ Validate and dump a run configuration file to disk.
        Raises jsonschema.ValidationError if validation fails.
        """
        config = dict(config)
        validate_run_config(config)
        cls._dump(path, config)

# -*- coding: utf-8 -*-

"""
Application layer of qbmf: logging, run configuration and the command line commands.


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

__all__ = ['get_logger', '__version__']

from importlib import metadata
try:
    __version__ = metadata.version('qbmf')
except metadata.PackageNotFoundError:
    __version__ = 'unknown'

from qbmf.core.logger import get_logger

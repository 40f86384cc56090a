# -*- coding: utf-8 -*-

"""
Writers for row oriented reports (verification records, function tables, limit tables) in CSV and
JSON format. Rows are mappings, the column order is fixed by the storage's field tuple. CSV tables
are passed through numpy (savetxt/loadtxt).


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

__all__ = ['CsvReportStorage', 'JsonReportStorage', 'ReportFormat', 'ReportStorageBase',
           'create_dir_for_file', 'format_column_headers', 'get_report_storage', 'save_yaml_report']

import os
import json
import math
import numpy as np
from abc import ABCMeta, abstractmethod
from enum import Enum
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, TextIO

from qbmf.util.helpers import str_to_number
from qbmf.util.yaml import yaml_dump


class ReportFormat(Enum):
    CSV = 'csv'
    JSON = 'json'


def format_column_headers(column_headers: Sequence[str], delimiter: Optional[str] = ',') -> str:
    if isinstance(column_headers, str):
        return column_headers
    if any(not isinstance(header, str) for header in column_headers):
        raise TypeError('column_headers must be iterable of str.')
    if any(delimiter in header for header in column_headers):
        raise ValueError(f'Column headers must not contain the delimiter {delimiter!r}')
    return delimiter.join(column_headers)


def create_dir_for_file(file_path: str) -> None:
    """ Helper method to create the directory (recursively) for a given file path.
    Will NOT raise an error if the directory already exists.

    @param str file_path: File path to create the directory for
    """
    directory = os.path.dirname(file_path)
    if directory:
        os.makedirs(directory, exist_ok=True)


class ReportStorageBase(metaclass=ABCMeta):
    """ Base class for report writers/readers with a fixed column order.
    """

    file_extension = ''

    def __init__(self, fields: Sequence[str]) -> None:
        if not fields:
            raise ValueError('Report storage needs at least one field name')
        self._fields = tuple(str(field) for field in fields)

    @property
    def fields(self) -> tuple:
        return self._fields

    def _ordered(self, row: Mapping[str, Any]) -> Dict[str, Any]:
        return {field: row.get(field, None) for field in self._fields}

    @abstractmethod
    def write(self, rows: Iterable[Mapping[str, Any]], stream: TextIO) -> None:
        """ Writes all rows to an open text stream """
        raise NotImplementedError

    @abstractmethod
    def read(self, stream: TextIO) -> List[Dict[str, Any]]:
        """ Parses rows written by write() back into dicts """
        raise NotImplementedError

    def save(self, rows: Iterable[Mapping[str, Any]], file_path: str) -> str:
        """ Writes all rows into file_path, appending the default file extension if missing.

        @return str: the file path actually written
        """
        if self.file_extension and not file_path.endswith(self.file_extension):
            file_path += self.file_extension
        create_dir_for_file(file_path)
        with open(file_path, 'w', newline='') as file:
            self.write(rows, file)
        return file_path

    def load(self, file_path: str) -> List[Dict[str, Any]]:
        with open(file_path, 'r', newline='') as file:
            return self.read(file)


class CsvReportStorage(ReportStorageBase):
    """ Comma separated values with a single header line, written with numpy.savetxt and read
    back with numpy.loadtxt. None is written as empty cell, floats with repr() so they parse back
    exactly. Cells containing the delimiter or a quote are quoted.
    """

    file_extension = '.csv'
    delimiter = ','
    quotechar = '"'

    @classmethod
    def _format_value(cls, value: Any) -> str:
        if value is None:
            return ''
        if isinstance(value, np.generic):
            value = value.item()
        if isinstance(value, bool):
            return 'true' if value else 'false'
        if isinstance(value, Enum):
            value = value.value
        text = repr(value) if isinstance(value, float) else str(value)
        text = ' '.join(text.splitlines())
        if cls.delimiter in text or cls.quotechar in text:
            doubled = text.replace(cls.quotechar, 2 * cls.quotechar)
            return f'{cls.quotechar}{doubled}{cls.quotechar}'
        return text

    @staticmethod
    def _parse_value(value: str) -> Any:
        if value == '':
            return None
        if value in ('true', 'false'):
            return value == 'true'
        try:
            return str_to_number(value)
        except (TypeError, ValueError):
            return value

    def _table(self, rows: Iterable[Mapping[str, Any]]) -> np.ndarray:
        cells = [[self._format_value(v) for v in self._ordered(row).values()] for row in rows]
        return np.array(cells, dtype=object).reshape(-1, len(self._fields))

    def write(self, rows: Iterable[Mapping[str, Any]], stream: TextIO) -> None:
        np.savetxt(stream,
                   self._table(rows),
                   fmt='%s',
                   delimiter=self.delimiter,
                   header=format_column_headers(self._fields, self.delimiter),
                   comments='')

    def read(self, stream: TextIO) -> List[Dict[str, Any]]:
        header = stream.readline().strip()
        if not header:
            return list()
        names = header.split(self.delimiter)
        lines = [line for line in stream.read().splitlines() if line]
        if not lines:
            return list()
        data = np.loadtxt(lines,
                          dtype=str,
                          delimiter=self.delimiter,
                          quotechar=self.quotechar,
                          comments=None,
                          ndmin=2)
        if data.shape[1] != len(names):
            raise ValueError(f'CSV report has {data.shape[1]:d} columns but {len(names):d} '
                             f'header fields')
        return [{name: self._parse_value(str(cell)) for name, cell in zip(names, row)}
                for row in data]


class JsonReportStorage(ReportStorageBase):
    """ JSON list of objects carrying the fields as keys. Non-finite floats are stored as null.
    """

    file_extension = '.json'

    def __init__(self, fields: Sequence[str], indent: Optional[int] = 2) -> None:
        super().__init__(fields)
        self._indent = indent

    @staticmethod
    def _format_value(value: Any) -> Any:
        if isinstance(value, np.generic):
            value = value.item()
        if isinstance(value, Enum):
            return value.value
        if isinstance(value, float) and not math.isfinite(value):
            return None
        return value

    def write(self, rows: Iterable[Mapping[str, Any]], stream: TextIO) -> None:
        data = [{k: self._format_value(v) for k, v in self._ordered(row).items()} for row in rows]
        json.dump(data, stream, indent=self._indent, allow_nan=False)
        stream.write('\n')

    def read(self, stream: TextIO) -> List[Dict[str, Any]]:
        data = json.load(stream)
        if not isinstance(data, list):
            raise ValueError('JSON report must contain a list of objects')
        return [self._ordered(row) for row in data]


def get_report_storage(fmt: Any, fields: Sequence[str]) -> ReportStorageBase:
    """ Storage instance for a ReportFormat member or its value string """
    fmt = ReportFormat(fmt)
    if fmt is ReportFormat.JSON:
        return JsonReportStorage(fields)
    return CsvReportStorage(fields)


def save_yaml_report(file_path: str,
                     rows: Iterable[Mapping[str, Any]],
                     summary: Mapping[str, Any],
                     config: Optional[Mapping[str, Any]] = None) -> None:
    """ Dumps a full report (run configuration, summary and rows) into a YAML file """
    report = dict()
    if config is not None:
        report['config'] = dict(config)
    report['summary'] = dict(summary)
    report['rows'] = [dict(row) for row in rows]
    yaml_dump(file_path, report)

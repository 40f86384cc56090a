# -*- coding: utf-8 -*-

"""
Command line front end, run with "python -m qbmf.core" or the "qbmf" console script.

Examples:
    qbmf eval --func I2 --q 0.5 --nu 0.75 --s 1.0 --format json
    qbmf verify --rep P4_1,E8_2 --q 0.5,0.9
    qbmf limits --nu 0.75 --k 3,4,5,6,7,8


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

__all__ = ('create_parser', 'main')

import argparse
import logging
import sys
from typing import Any, Dict, Optional, Sequence

from jsonschema import ValidationError

from qbmf.core.commands import ExitCode, UsageError, run
from qbmf.core.config import RunConfig, YAMLError
from qbmf.core.config.schema import COMMANDS
from qbmf.core.logger import get_logger, get_stderr_handler, init_rotating_file_handler
from qbmf.core.logger import set_log_level
from qbmf.util.helpers import csv_2_list

_log = get_logger(__name__)


def _float_list(value: str):
    return [float(x) for x in csv_2_list(value)]


def _int_list(value: str):
    return [int(x) for x in csv_2_list(value)]


def _str_list(value: str):
    return csv_2_list(value, str)


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='qbmf',
        description='Evaluate q-Bessel and q-Bessel-Macdonald functions and verify their integral '
                    'representations.'
    )
    parser.add_argument('command', choices=COMMANDS, help='Command to run.')
    parser.add_argument('--func', type=_str_list, default=None,
                        help='Comma separated function kinds (I1, I2, J1, J2, K1, K2).')
    parser.add_argument('--rep', type=_str_list, default=None,
                        help='Comma separated representation ids, e.g. P4_1,E8_2.')
    parser.add_argument('--q', type=_float_list, default=None,
                        help='Comma separated values of q in (0, 1).')
    parser.add_argument('--nu', type=_float_list, default=None,
                        help='Comma separated orders.')
    parser.add_argument('--s', type=_float_list, default=None,
                        help='Comma separated arguments.')
    parser.add_argument('--k', type=_int_list, default=None,
                        help='Comma separated levels k of the limit sequence q = 1 - 2^-k.')
    parser.add_argument('--format', choices=('csv', 'json'), default=None,
                        help='Output format (default: csv).')
    parser.add_argument('--tol', type=float, default=None,
                        help='Relative truncation tolerance of series, products and lattice sums.')
    parser.add_argument('--max-terms', type=int, default=None,
                        help='Maximum number of terms of a single series or product.')
    parser.add_argument('--threshold', type=float, default=None,
                        help='Relative residual below which a representation check passes.')
    parser.add_argument('--workers', type=int, default=None,
                        help='Number of worker threads evaluating grid points.')
    parser.add_argument('--out', default=None,
                        help='Write the table to this file instead of stdout.')
    parser.add_argument('--report', default=None,
                        help='Additionally dump a YAML report (config, summary, rows).')
    parser.add_argument('-c', '--config', default=None,
                        help='Path to a YAML run configuration file. Flags override its values.')
    parser.add_argument('-d', '--debug', action='store_true',
                        help='Log debug messages. Can affect performance.')
    parser.add_argument('-l', '--logdir', default='',
                        help='Directory for a rotating log file (disabled if not given).')
    return parser


def config_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    """ Raw configuration entries given on the command line """
    overrides = {'command': args.command,
                 'func': args.func,
                 'rep': args.rep,
                 'q': args.q,
                 'nu': args.nu,
                 's': args.s,
                 'k': args.k,
                 'format': args.format,
                 'threshold': args.threshold,
                 'workers': args.workers,
                 'out': args.out,
                 'report': args.report}
    tolerance = {'eps_rel': args.tol, 'max_terms': args.max_terms}
    if any(value is not None for value in tolerance.values()):
        overrides['tolerance'] = tolerance
    return overrides


def _setup_logging(debug: bool, logdir: str) -> None:
    level = logging.DEBUG if debug else logging.INFO
    if logdir:
        init_rotating_file_handler(path=logdir)
    set_log_level(level)
    get_stderr_handler().setLevel(level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """ Entry point of the command line tool.

    @return int: exit code, 0 on success, 1 for failed checks, 2 for invalid input
    """
    args = create_parser().parse_args(argv)
    _setup_logging(args.debug, args.logdir)
    overrides = config_overrides(args)
    try:
        if args.config is None:
            cfg = RunConfig({k: v for k, v in overrides.items() if v is not None})
        else:
            cfg = RunConfig.from_file(args.config, overrides)
    except (ValidationError, YAMLError, OSError, ValueError, TypeError) as err:
        _log.error(f'Invalid run configuration: {err}')
        return int(ExitCode.USAGE)
    try:
        return run(cfg)
    except (UsageError, ValidationError, ValueError) as err:
        _log.error(f'{cfg.command} aborted: {err}')
        return int(ExitCode.USAGE)


if __name__ == '__main__':
    sys.exit(main())

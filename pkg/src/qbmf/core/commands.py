# -*- coding: utf-8 -*-

"""
The four commands of the qbmf command line tool: point evaluation (eval), function tables
(table), representation verification (verify) and q -> 1 limit studies (limits).

Every command takes a RunConfig and an optional text stream and returns the process exit code.
Grid points are evaluated on a thread pool, the output order only depends on the configuration.


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

__all__ = ('DEFAULT_K_GRID', 'DEFAULT_S_FRACTIONS', 'EVAL_FIELDS', 'LIMIT_FIELDS', 'ExitCode',
           'UsageError', 'default_s_grid', 'limit_studies', 'run', 'run_eval', 'run_limits',
           'run_table', 'run_verify', 'summarize_records', 'verification_grid')

import sys
from concurrent.futures import ThreadPoolExecutor
from enum import IntEnum
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, TextIO, Tuple

from qbmf.core.config import RunConfig
from qbmf.core.logger import get_logger
from qbmf.special.errors import QSeriesError
from qbmf.special.limits import LimitTable, function_limit_table, kernel_exponent_table
from qbmf.special.limits import q_nu_limit_table, representation_limit_table
from qbmf.special.qbessel import BesselKind, BesselParams, bessel_eval, bessel_term_count
from qbmf.special.qcore import QContext
from qbmf.special.representations import RepresentationId, VerificationRecord
from qbmf.special.representations import satisfies_constraint, verify
from qbmf.util.datastorage import get_report_storage, save_yaml_report

_log = get_logger(__name__)

EVAL_FIELDS = ('func', 'q', 'nu', 's', 'value_re', 'value_im', 'terms', 'error')
LIMIT_FIELDS = ('table', 'k', 'q', 'value', 'target', 'error', 'monotone', 'rate', 'failure')

DEFAULT_K_GRID = (0.5, 1.0, 2.0, 5.0)
DEFAULT_S_FRACTIONS = (0.2, 0.5, 0.8)
DEFAULT_LIMIT_S = (1.0,)

_CLASSICAL_REPS = (RepresentationId.P4_1, RepresentationId.P5_1, RepresentationId.P6_1,
                   RepresentationId.P7_1)


class ExitCode(IntEnum):
    SUCCESS = 0
    FAILURE = 1
    USAGE = 2


class UsageError(ValueError):
    """ Raised for requests that can not be turned into a single grid point """
    pass


def _error_text(err: BaseException) -> str:
    return f'{type(err).__name__}: {err}'


def _map_ordered(func: Callable, tasks: Sequence, workers: int) -> List:
    """ func applied to every task, results in task order """
    if workers <= 1 or len(tasks) <= 1:
        return [func(task) for task in tasks]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, tasks))


def _emit(cfg: RunConfig,
          fields: Sequence[str],
          rows: List[Mapping[str, Any]],
          summary: Mapping[str, Any],
          stream: Optional[TextIO]) -> None:
    storage = get_report_storage(cfg.output_format, fields)
    if cfg.out:
        path = storage.save(rows, cfg.out)
        _log.info(f'Wrote {len(rows):d} rows to "{path}"')
    else:
        storage.write(rows, sys.stdout if stream is None else stream)
    if cfg.report:
        save_yaml_report(cfg.report, rows, summary, cfg.config_map)
        _log.info(f'Wrote YAML report to "{cfg.report}"')


def default_s_grid(rep: RepresentationId, ctx: QContext) -> Tuple[float, ...]:
    """ Arguments checked by default: fixed values for the q-Bessel-Macdonald representations and
    fractions of the first kind radius 1 / (1 - q^2) for the I and J ones.
    """
    if rep.target.family == 'K':
        return DEFAULT_K_GRID
    return tuple(fraction / ctx.lam for fraction in DEFAULT_S_FRACTIONS)


# eval / table

def _bessel_row(task: Tuple[BesselKind, float, float, float, RunConfig]) -> Dict[str, Any]:
    kind, q, nu, s, cfg = task
    row = {'func': kind.name, 'q': q, 'nu': nu, 's': s}
    try:
        params = BesselParams(nu, s, QContext(q, cfg.tolerance))
        value = complex(bessel_eval(kind, params))
        row.update(value_re=value.real,
                   value_im=value.imag,
                   terms=bessel_term_count(kind, params),
                   error=None)
    except (QSeriesError, OverflowError) as err:
        _log.debug(f'{kind.name}(q={q!r}, nu={nu!r}, s={s!r}) failed: {err}')
        row.update(value_re=None, value_im=None, terms=None, error=_error_text(err))
    return row


def _run_bessel_grid(cfg: RunConfig,
                     funcs: Sequence[BesselKind],
                     s_list: Sequence[float],
                     stream: Optional[TextIO]) -> int:
    tasks = [(kind, q, nu, s, cfg) for kind in funcs for q in cfg.q_list for nu in cfg.nu_list
             for s in s_list]
    rows = _map_ordered(_bessel_row, tasks, cfg.workers)
    failed = sum(1 for row in rows if row['error'] is not None)
    summary = {'rows': len(rows), 'errors': failed}
    _log.info(f'{cfg.command}: {len(rows):d} rows, {failed:d} with evaluation errors')
    _emit(cfg, EVAL_FIELDS, rows, summary, stream)
    return ExitCode.SUCCESS


def run_eval(cfg: RunConfig, stream: Optional[TextIO] = None) -> int:
    """ Point evaluation of the selected functions. Needs func and s; domain errors of single
    points are reported in the row's error field.
    """
    if cfg.funcs is None:
        raise UsageError('eval needs at least one function kind (func)')
    if cfg.s_list is None:
        raise UsageError('eval needs at least one argument (s)')
    return _run_bessel_grid(cfg, cfg.funcs, cfg.s_list, stream)


def run_table(cfg: RunConfig, stream: Optional[TextIO] = None) -> int:
    """ Like run_eval with all six functions and the default argument grid unless given """
    funcs = tuple(BesselKind) if cfg.funcs is None else cfg.funcs
    s_list = DEFAULT_K_GRID if cfg.s_list is None else cfg.s_list
    return _run_bessel_grid(cfg, funcs, s_list, stream)


# verify

def verification_grid(cfg: RunConfig) -> List[Tuple[RepresentationId, float, float, float]]:
    """ All (rep, q, nu, s) points of the configuration that satisfy the representation
    constraints, ordered by (rep, q, nu, s).

    Raises UsageError if an explicitly requested representation keeps no point.
    """
    grid = list()
    for rep in cfg.reps:
        count = 0
        for q in cfg.q_list:
            ctx = QContext(q, cfg.tolerance)
            s_list = default_s_grid(rep, ctx) if cfg.s_list is None else cfg.s_list
            for nu in cfg.nu_list:
                for s in s_list:
                    if satisfies_constraint(rep, nu, s, ctx):
                        grid.append((rep, q, nu, s))
                        count += 1
                    else:
                        _log.debug(f'{rep.value}: skipping q={q!r}, nu={nu!r}, s={s!r}')
        if count == 0:
            if cfg.reps_requested:
                raise UsageError(f'No grid point satisfies the constraints of {rep.value}')
            _log.warning(f'No grid point satisfies the constraints of {rep.value}')
    if not grid:
        raise UsageError('Verification grid is empty')
    return grid


def _verify_point(task: Tuple[RepresentationId, float, float, float, RunConfig]
                  ) -> VerificationRecord:
    rep, q, nu, s, cfg = task
    try:
        return verify(rep, nu, s, QContext(q, cfg.tolerance), cfg.threshold, cfg.truncation)
    except (QSeriesError, OverflowError) as err:
        _log.warning(f'{rep.value}(q={q!r}, nu={nu!r}, s={s!r}) failed: {_error_text(err)}')
        return VerificationRecord.failed(rep, q, nu, s, _error_text(err), cfg.threshold)


def summarize_records(records: Iterable[VerificationRecord]) -> Dict[str, Dict[str, Any]]:
    """ Per representation: record count, passed count, number of raised evaluations and the
    maximum relative residual (None if no record has one).
    """
    summary = dict()
    for record in records:
        entry = summary.setdefault(record.rep.value, {'records': 0,
                                                      'passed': 0,
                                                      'raised': 0,
                                                      'max_rel_residual': None})
        entry['records'] += 1
        entry['passed'] += int(record.passed)
        if record.rel_residual is None:
            entry['raised'] += 1
        elif entry['max_rel_residual'] is None or record.rel_residual > entry['max_rel_residual']:
            entry['max_rel_residual'] = record.rel_residual
    return summary


def run_verify(cfg: RunConfig, stream: Optional[TextIO] = None) -> int:
    """ Verifies the selected representations on the configured grid.

    @return int: 0 if every record passes, 1 otherwise
    """
    grid = verification_grid(cfg)
    records = _map_ordered(_verify_point, [point + (cfg,) for point in grid], cfg.workers)
    summary = summarize_records(records)
    for rep, entry in summary.items():
        residual = entry['max_rel_residual']
        residual = 'n/a' if residual is None else f'{residual:.3e}'
        _log.info(f'{rep}: {entry["passed"]:d}/{entry["records"]:d} passed, '
                  f'{entry["raised"]:d} raised, max rel residual {residual}')
    all_passed = all(record.passed for record in records)
    _emit(cfg, VerificationRecord.FIELDS, [record.as_dict() for record in records], summary,
          stream)
    return ExitCode.SUCCESS if all_passed else ExitCode.FAILURE


# limits

def limit_studies(cfg: RunConfig) -> List[Tuple[str, Callable[[], LimitTable]]]:
    """ (name, study) pairs of the limit run in output order. Studies are callables returning a
    LimitTable.
    """
    reps = [rep for rep in cfg.reps if rep in _CLASSICAL_REPS]
    if not reps and cfg.reps_requested:
        raise UsageError(f'Limit studies are available for '
                         f'{", ".join(rep.value for rep in _CLASSICAL_REPS)}')
    s_list = DEFAULT_LIMIT_S if cfg.s_list is None else cfg.s_list
    k_list, tol = cfg.k_list, cfg.tolerance
    studies = list()
    for nu in cfg.nu_list:
        studies.append((f'Q_nu(nu={nu!r})', lambda nu=nu: q_nu_limit_table(nu, k_list, tol)))
        for s in s_list:
            for kind in (BesselKind.I1, BesselKind.K1):
                studies.append((f'{kind.name}(nu={nu!r}, s={s!r})',
                                lambda kind=kind, nu=nu, s=s: function_limit_table(kind, nu, s,
                                                                                   k_list, tol)))
            for rep in reps:
                if nu <= rep.min_nu:
                    continue
                studies.append((f'{rep.value}(nu={nu!r}, s={s!r})',
                                lambda rep=rep, nu=nu, s=s: representation_limit_table(
                                    rep, nu, s, k_list, tol)))
        for rep in reps:
            studies.append((f'{rep.value} kernel exponent(nu={nu!r})',
                            lambda rep=rep, nu=nu: kernel_exponent_table(rep, nu, None, k_list,
                                                                         tol)))
    return studies


def _run_study(study: Tuple[str, Callable[[], LimitTable]]) -> Tuple[str, Any]:
    name, func = study
    try:
        return name, func()
    except (QSeriesError, OverflowError) as err:
        _log.warning(f'Limit study {name} failed: {_error_text(err)}')
        return name, err


def run_limits(cfg: RunConfig, stream: Optional[TextIO] = None) -> int:
    """ Runs all limit studies of the configuration.

    @return int: 0 if every study finished with a strictly decreasing error, 1 otherwise
    """
    results = _map_ordered(_run_study, limit_studies(cfg), cfg.workers)
    rows = list()
    summary = dict()
    for name, result in results:
        if isinstance(result, LimitTable):
            verdict = result.summary()
            summary[name] = verdict
            for row in result.as_dicts():
                row.update(monotone=verdict['monotone'], rate=verdict['rate'], failure=None)
                rows.append(row)
            log = _log.info if verdict['monotone'] else _log.warning
            log(f'{name}: final error {verdict["final_error"]:.3e}, '
                f'monotone {verdict["monotone"]}')
        else:
            summary[name] = {'table': name, 'failure': _error_text(result)}
            rows.append({'table': name, 'failure': _error_text(result)})
    passed = all(isinstance(result, LimitTable) and result.monotone for _, result in results)
    _emit(cfg, LIMIT_FIELDS, rows, summary, stream)
    return ExitCode.SUCCESS if passed else ExitCode.FAILURE


_COMMANDS = {'eval': run_eval,
             'table': run_table,
             'verify': run_verify,
             'limits': run_limits}


def run(cfg: RunConfig, stream: Optional[TextIO] = None) -> int:
    """ Dispatches cfg to the command named by cfg.command """
    return int(_COMMANDS[cfg.command](cfg, stream))

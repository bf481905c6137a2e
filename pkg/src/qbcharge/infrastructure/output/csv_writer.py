"""CSV tables and JSON metadata sidecars."""

import csv
import json
import logging
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any

from qbcharge.application.dto import (
    SWEEP_COLUMNS,
    TRAJECTORY_COLUMNS,
    CriticalDTO,
    ReportDTO,
    SweepDTO,
    TrajectoryDTO,
)
from qbcharge.domain.exceptions import OutputError
from qbcharge.domain.models.report import UNDEFINED_TOKEN

logger = logging.getLogger(__name__)

CRITICAL_COLUMNS = ("axis", "value", "lower", "upper", "tolerance", "predicate")

Result = TrajectoryDTO | SweepDTO | ReportDTO | CriticalDTO


def _number(value: float) -> str:
    return f"{value:.12g}"


def _report_cells(report: ReportDTO | None, flags: str) -> list[str]:
    if report is None:
        return [UNDEFINED_TOKEN] * 6 + ["", flags]
    return [
        _number(report.t_bar),
        _number(report.E_bar),
        _number(report.E_i_bar),
        _number(report.E_c_bar),
        report.P_eff,
        report.Pcal_eff,
        "" if report.which_maximum is None else str(report.which_maximum),
        flags,
    ]


def _table(result: Result) -> tuple[Sequence[str], Iterable[Sequence[str]]]:
    match result:
        case TrajectoryDTO(rows=rows):
            body = (
                [
                    _number(row.lambda_t),
                    _number(row.E_batt),
                    _number(row.E_i_batt),
                    _number(row.E_c_batt),
                    _number(row.meanE_batt),
                    _number(row.erg_charger),
                    _number(row.meanE_charger),
                    _number(row.n_pseudomode),
                ]
                for row in rows
            )
            return TRAJECTORY_COLUMNS, body
        case SweepDTO(axis=axis, rows=rows):
            header = (axis, *SWEEP_COLUMNS)
            body = ([_number(row.value), *_report_cells(row.report, row.flags)] for row in rows)
            return header, body
        case ReportDTO():
            return SWEEP_COLUMNS, [_report_cells(result, result.flags)]
        case CriticalDTO():
            return CRITICAL_COLUMNS, [
                [
                    result.axis,
                    _number(result.value),
                    _number(result.lower),
                    _number(result.upper),
                    _number(result.tolerance),
                    result.predicate,
                ]
            ]


def emit_csv(result: Result, path: Path) -> Path:
    """
    Write a header row and one row per record.

    Numbers carry 12 significant digits; undefined efficiencies are written as
    the literal token "undefined".

    Raises:
        OutputError: If the file or its directory cannot be written.
    """
    header, body = _table(result)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(body)
    except OSError as exc:
        raise OutputError(str(path), exc.strerror or str(exc)) from exc
    logger.info("Wrote %s", path)
    return path


def family_path(path: Path, axis: str, value: float) -> Path:
    """Per-curve file name for a family of trajectories, e.g. fig2_c1=0.4.csv."""
    return path.with_name(f"{path.stem}_{axis}={value:g}{path.suffix}")


def metadata_path(path: Path) -> Path:
    return path.with_name(f"{path.stem}.meta.json")


def write_metadata(path: Path, document: dict[str, Any]) -> Path:
    """Write the sidecar next to `path` with sorted keys."""
    target = metadata_path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(json.dumps(document, indent=2, sort_keys=True) + "\n")
    except OSError as exc:
        raise OutputError(str(target), exc.strerror or str(exc)) from exc
    return target

"""Tests for CSV tables and metadata sidecars."""

import json
from pathlib import Path

import pytest

from qbcharge.application.dto import (
    SWEEP_COLUMNS,
    TRAJECTORY_COLUMNS,
    CriticalDTO,
    ReportDTO,
    SweepDTO,
    SweepRowDTO,
    trajectory_to_dto,
)
from qbcharge.config import metadata, parse_config
from qbcharge.domain.exceptions import OutputError
from qbcharge.domain.models import IntegratorConfig, ModelSpec, ScenarioI
from qbcharge.domain.services.dynamics import evolve
from qbcharge.infrastructure.output import emit_csv, family_path, write_metadata

REPORT = ReportDTO(
    t_bar=0.157,
    E_bar=0.9,
    E_i_bar=0.4,
    E_c_bar=0.5,
    P_eff="0.95",
    Pcal_eff="undefined",
    which_maximum=1,
    flags="ok",
    initial_ergotropy=0.0,
    charger_first_minimum=None,
)


def read_lines(path: Path) -> list[str]:
    return path.read_text().splitlines()


class TestTrajectoryTable:
    def test_header_and_one_row_per_record(self, tmp_path: Path) -> None:
        spec = ModelSpec.from_ratio(1, 1, 5.0)
        traj = evolve(spec, ScenarioI(), IntegratorConfig(dt=4e-4, t_max=0.2, record_stride=50))
        path = emit_csv(trajectory_to_dto(traj), tmp_path / "out" / "curve.csv")
        lines = read_lines(path)
        assert lines[0] == ",".join(TRAJECTORY_COLUMNS)
        assert len(lines) == len(traj) + 1
        assert lines[1].startswith("0,0,0,0,0,1,1,0")


class TestSweepTable:
    def test_failed_points_keep_their_row(self, tmp_path: Path) -> None:
        result = SweepDTO(
            axis="R",
            rows=(
                SweepRowDTO(value=10.0, report=REPORT, flags="ok"),
                SweepRowDTO(value=20.0, report=None, flags="error:STEP_SIZE"),
            ),
        )
        lines = read_lines(emit_csv(result, tmp_path / "sweep.csv"))
        assert lines[0] == ",".join(("R", *SWEEP_COLUMNS))
        assert lines[1] == "10,0.157,0.9,0.4,0.5,0.95,undefined,1,ok"
        assert lines[2] == "20,undefined,undefined,undefined,undefined,undefined,undefined,,error:STEP_SIZE"

    def test_report_is_a_single_row(self, tmp_path: Path) -> None:
        lines = read_lines(emit_csv(REPORT, tmp_path / "report.csv"))
        assert lines == [",".join(SWEEP_COLUMNS), "0.157,0.9,0.4,0.5,0.95,undefined,1,ok"]

    def test_critical_row(self, tmp_path: Path) -> None:
        result = CriticalDTO(
            axis="e1", value=0.7129, lower=0.0, upper=1.0, tolerance=1e-3, predicate="exceeds-initial"
        )
        lines = read_lines(emit_csv(result, tmp_path / "critical.csv"))
        assert lines[1] == "e1,0.7129,0,1,0.001,exceeds-initial"


class TestFiles:
    def test_unwritable_target(self, tmp_path: Path) -> None:
        blocker = tmp_path / "file.txt"
        blocker.write_text("")
        with pytest.raises(OutputError) as excinfo:
            emit_csv(REPORT, blocker / "report.csv")
        assert excinfo.value.code == "OUTPUT_ERROR"

    def test_family_names(self) -> None:
        assert family_path(Path("results/fig2.csv"), "c1", 0.4) == Path("results/fig2_c1=0.4.csv")

    def test_sidecar_round_trip(self, tmp_path: Path) -> None:
        config = parse_config(preset="fig12")
        target = write_metadata(tmp_path / "fig12.csv", metadata(config))
        assert target.name == "fig12.meta.json"
        document = json.loads(target.read_text())
        assert document["run_config"]["preset"] == "fig12"
        assert parse_config(target) == config

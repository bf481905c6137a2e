"""Parameter sweep axis and results."""

from dataclasses import dataclass
from typing import Literal

from qbcharge.domain.exceptions import ValidationError
from qbcharge.domain.models.integrator import IntegratorSetup
from qbcharge.domain.models.model_spec import ModelSpec
from qbcharge.domain.models.report import ChargingReport, Efficiency
from qbcharge.domain.models.scenario import ScenarioSpec

SweepAxisName = Literal["R", "c1", "e1", "n_chargers", "m_cells"]
SWEEP_AXES: tuple[str, ...] = ("R", "c1", "e1", "n_chargers", "m_cells")


@dataclass(frozen=True)
class SweepAxis:
    """A named parameter and its strictly increasing grid."""

    name: SweepAxisName
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if self.name not in SWEEP_AXES:
            raise ValidationError(f"Unknown sweep axis '{self.name}'", field="sweep.axis")
        if not self.values:
            raise ValidationError("Sweep grid is empty", field="sweep.grid")
        if any(b <= a for a, b in zip(self.values, self.values[1:], strict=False)):
            raise ValidationError(
                f"Sweep grid must be strictly increasing, got {self.values}", field="sweep.grid"
            )


@dataclass(frozen=True)
class SweepPoint:
    """Outcome at one grid value; `error` is set when the point failed."""

    value: float
    report: ChargingReport | None
    output_efficiency: Efficiency
    input_efficiency: Efficiency
    error: str | None = None

    @property
    def flags(self) -> str:
        if self.error is not None:
            return f"error:{self.error}"
        assert self.report is not None
        return self.report.flags


@dataclass(frozen=True)
class SweepResult:
    """Per-point reports ordered by grid value, with the base configuration."""

    axis: SweepAxis
    points: tuple[SweepPoint, ...]
    spec: ModelSpec
    scenario: ScenarioSpec
    config: IntegratorSetup | None

    def __post_init__(self) -> None:
        if len(self.points) != len(self.axis.values):
            raise ValueError("Sweep result needs exactly one record per grid point")

    @property
    def failed(self) -> tuple[SweepPoint, ...]:
        return tuple(p for p in self.points if p.error is not None)

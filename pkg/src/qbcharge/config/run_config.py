"""Validated run configuration assembled from presets, files and flags."""

import json
import tomllib
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field
from pydantic import ValidationError as PydanticValidationError

from qbcharge import __version__
from qbcharge.config.presets import get_preset
from qbcharge.domain.exceptions import ConfigError, DomainError
from qbcharge.domain.models import (
    BellPhiMinus,
    BellPhiPlus,
    BellPsiMinus,
    BellPsiPlus,
    IntegratorPlan,
    MixedBattery,
    MixedCharger,
    ModelSpec,
    ScenarioI,
    ScenarioII,
    ScenarioKind,
    ScenarioSpec,
    SweepAxis,
)
from qbcharge.domain.models.sweep import SweepAxisName

RunMode = Literal["trajectory", "report", "sweep", "critical"]
PredicateName = Literal["exceeds-initial", "more-chargers"]


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class ModelSection(_Section):
    n_chargers: int = Field(default=1, ge=1)
    m_cells: int = Field(default=1, ge=1)
    R: float = Field(default=20.0, ge=0.0)
    lam: float = Field(default=1.0, gt=0.0)
    omega0: float = Field(default=1.0, gt=0.0)
    ncut: int | None = None

    def to_domain(self) -> ModelSpec:
        return ModelSpec.from_ratio(
            self.n_chargers,
            self.m_cells,
            self.R,
            lam=self.lam,
            omega0=self.omega0,
            ncut=-1 if self.ncut is None else self.ncut,
        )


class ScenarioSection(_Section):
    kind: ScenarioKind = "scenario-i"
    c: list[float] | None = None
    c1: float | None = Field(default=None, ge=0.0, le=1.0)
    e1: float | None = Field(default=None, ge=0.0, le=1.0)

    def to_domain(self, n_chargers: int) -> ScenarioSpec:
        """Build the scenario; a single charger coefficient is repeated for every charger."""
        match self.kind:
            case "scenario-i":
                coefficients = self.c or [1.0 if self.c1 is None else self.c1]
                if len(coefficients) == 1:
                    coefficients = coefficients * n_chargers
                return ScenarioI(c=tuple(coefficients))
            case "scenario-ii":
                return ScenarioII(e1=self.e1 or 0.0)
            case "mixed-battery":
                return MixedBattery(e1=0.5 if self.e1 is None else self.e1)
            case "mixed-charger":
                return MixedCharger(c1=self._c1)
            case "bell-psi-plus":
                return BellPsiPlus(c1=self._c1)
            case "bell-psi-minus":
                return BellPsiMinus(c1=self._c1)
            case "bell-phi-plus":
                return BellPhiPlus(c1=self._c1)
            case "bell-phi-minus":
                return BellPhiMinus(c1=self._c1)

    @property
    def _c1(self) -> float:
        return 0.5 if self.c1 is None else self.c1


class IntegratorSection(_Section):
    dt: float | None = Field(default=None, gt=0.0)
    t_max: float | None = Field(default=None, gt=0.0)
    record_stride: int | None = Field(default=None, ge=1)

    @property
    def is_automatic(self) -> bool:
        return self.dt is None and self.t_max is None and self.record_stride is None

    def to_domain(self) -> IntegratorPlan | None:
        """None leaves every point of a sweep on its own model defaults."""
        if self.is_automatic:
            return None
        return IntegratorPlan(dt=self.dt, t_max=self.t_max, record_stride=self.record_stride)


class SweepSection(_Section):
    axis: SweepAxisName
    grid: list[float]

    def to_domain(self) -> SweepAxis:
        return SweepAxis(name=self.axis, values=tuple(self.grid))


class CriticalSection(_Section):
    axis: Literal["R", "c1", "e1"]
    lower: float
    upper: float
    predicate: PredicateName = "exceeds-initial"
    tolerance: float = Field(default=1e-3, gt=0.0)


class RunConfig(_Section):
    """
    Everything needed to reproduce one run.

    Unknown keys are rejected at every level.
    """

    mode: RunMode = "trajectory"
    preset: str | None = None
    output: str | None = None
    model: ModelSection = ModelSection()
    scenario: ScenarioSection = ScenarioSection()
    integrator: IntegratorSection = IntegratorSection()
    sweep: SweepSection | None = None
    critical: CriticalSection | None = None

    def to_domain(self) -> tuple[ModelSpec, ScenarioSpec, IntegratorPlan | None]:
        """Domain objects for the run, validated against their own invariants."""
        spec = self.model.to_domain()
        scenario = self.scenario.to_domain(spec.n_chargers)
        scenario.validate_for(spec)
        return spec, scenario, self.integrator.to_domain()

    def dump(self) -> dict[str, Any]:
        return self.model_dump(mode="json", exclude_none=True)


def _merge(base: dict[str, Any], update: dict[str, Any]) -> dict[str, Any]:
    merged = dict(base)
    for key, value in update.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)  # type: ignore[arg-type]
        else:
            merged[key] = value
    return merged


def _read_file(path: Path) -> dict[str, Any]:
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"Cannot read {path}: {exc.strerror}", key="config") from exc
    try:
        if path.suffix == ".json":
            data = json.loads(text)
        else:
            data = tomllib.loads(text)
    except (json.JSONDecodeError, tomllib.TOMLDecodeError) as exc:
        raise ConfigError(f"Cannot parse {path}: {exc}", key="config") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"{path} does not hold a table of settings", key="config")
    # Metadata sidecars carry the run configuration under one key.
    return data.get("run_config", data)  # type: ignore[no-any-return]


def _check_sections(config: RunConfig) -> None:
    if config.mode == "critical" and config.critical is None:
        raise ConfigError("mode 'critical' needs a [critical] section", key="critical")
    if config.mode == "sweep" and config.sweep is None:
        raise ConfigError("mode 'sweep' needs a [sweep] section", key="sweep")
    try:
        config.to_domain()
        if config.sweep is not None:
            config.sweep.to_domain()
    except DomainError as exc:
        field = getattr(exc, "field", None)
        raise ConfigError(str(exc), key=field) from exc


def parse_config(
    path: Path | None = None,
    overrides: dict[str, Any] | None = None,
    preset: str | None = None,
) -> RunConfig:
    """
    Merge preset, file and flag overrides (later wins) into a RunConfig.

    Args:
        path: TOML or JSON file; a metadata sidecar is accepted too.
        overrides: Nested flag values, e.g. {"model": {"R": 10.0}}.
        preset: Preset name; a "preset" key in the file or overrides also works.

    Raises:
        ConfigError: Naming the dotted key of the first offending entry.
    """
    from_file = _read_file(path) if path is not None else {}
    flags = overrides or {}
    name = flags.get("preset") or preset or from_file.get("preset")
    document: dict[str, Any] = get_preset(name) if name else {}
    if name:
        document["preset"] = name
    document = _merge(_merge(document, from_file), flags)
    try:
        config = RunConfig.model_validate(document)
    except PydanticValidationError as exc:
        first = exc.errors()[0]
        key = ".".join(str(part) for part in first["loc"]) or None
        raise ConfigError(first["msg"], key=key) from exc
    _check_sections(config)
    return config


def metadata(config: RunConfig) -> dict[str, Any]:
    """Sidecar document recording the code version and full run configuration."""
    return {"qbcharge_version": __version__, "run_config": config.dump()}

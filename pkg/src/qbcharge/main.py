"""qbcharge command-line entry point."""

import asyncio
from pathlib import Path
from typing import Annotated, Any

import typer
from rich.console import Console
from rich.table import Table

from qbcharge import __version__
from qbcharge.application import ApplicationService, command_for
from qbcharge.application.dto import CriticalDTO, ReportDTO, SweepDTO, TrajectoryDTO
from qbcharge.config import RunConfig, Settings, configure_logging, get_settings, metadata
from qbcharge.config.run_config import parse_config
from qbcharge.domain.exceptions import (
    ConfigError,
    DomainError,
    NumericalError,
    OutputError,
    ValidationError,
)
from qbcharge.domain.models.integrator import IntegratorPlan, resolve_integrator
from qbcharge.infrastructure.output import emit_csv, family_path, write_metadata

app = typer.Typer(
    name="qbcharge",
    help="Wireless charging of qubit batteries through a lossy-cavity pseudomode.",
    add_completion=False,
)
console = Console(stderr=True)

EXIT_CODES: tuple[tuple[type[DomainError], int], ...] = (
    (ConfigError, 2),
    (ValidationError, 2),
    (NumericalError, 3),
    (OutputError, 4),
)


def exit_code_for(exc: DomainError) -> int:
    for category, code in EXIT_CODES:
        if isinstance(exc, category):
            return code
    return 1


def _parse_grid(text: str) -> list[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError as exc:
        raise ConfigError(
            f"cannot parse '{text}' as comma-separated numbers", key="sweep.grid"
        ) from exc


def build_overrides(
    *,
    mode: str | None = None,
    scenario: str | None = None,
    n: int | None = None,
    m: int | None = None,
    R: float | None = None,
    c: list[float] | None = None,
    e1: float | None = None,
    tmax: float | None = None,
    dt: float | None = None,
    sweep_axis: str | None = None,
    sweep_grid: str | None = None,
    out: Path | None = None,
) -> dict[str, Any]:
    """Nested RunConfig document holding only the flags that were given."""
    sections: dict[str, dict[str, Any]] = {
        "model": {"n_chargers": n, "m_cells": m, "R": R},
        "scenario": {"kind": scenario, "c": c or None, "e1": e1},
        "integrator": {"t_max": tmax, "dt": dt},
        "sweep": {
            "axis": sweep_axis,
            "grid": _parse_grid(sweep_grid) if sweep_grid is not None else None,
        },
    }
    if c and len(c) == 1:
        sections["scenario"]["c1"] = c[0]
    overrides: dict[str, Any] = {
        name: {key: value for key, value in section.items() if value is not None}
        for name, section in sections.items()
    }
    overrides = {name: section for name, section in overrides.items() if section}
    if mode is not None:
        overrides["mode"] = mode
    if out is not None:
        overrides["output"] = str(out)
    return overrides


def _flatten(document: dict[str, Any], prefix: str = "") -> list[tuple[str, str]]:
    rows: list[tuple[str, str]] = []
    for key, value in document.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            rows.extend(_flatten(value, f"{name}."))  # type: ignore[arg-type]
        else:
            rows.append((name, str(value)))
    return rows


def _integrator_rows(config: RunConfig) -> list[tuple[str, str]]:
    spec, _, plan = config.to_domain()
    varies = config.mode in ("sweep", "critical")
    if varies or (config.mode == "trajectory" and config.sweep is not None):
        rule = (plan or IntegratorPlan()).describe()
        return [("integrator.per_point", rule)]
    resolved = resolve_integrator(plan, spec)
    return [
        ("integrator.dt", f"{resolved.dt:g}"),
        ("integrator.t_max", f"{resolved.t_max:g}"),
        ("integrator.record_stride", str(resolved.record_stride)),
    ]


def header_rows(config: RunConfig, settings: Settings) -> list[tuple[str, str]]:
    """Every effective value, with the integrator defaults resolved."""
    rows = [
        (key, value)
        for key, value in _flatten(config.model_dump(mode="json"))
        if not key.startswith("integrator.")
    ]
    rows.extend(_integrator_rows(config))
    rows.append(("env.sweep_workers", str(settings.sweep_workers)))
    rows.append(("env.eigensolver", settings.eigensolver))
    return rows


def print_header(config: RunConfig, settings: Settings) -> None:
    table = Table(title=f"qbcharge {__version__}", show_header=True)
    table.add_column("setting", style="cyan")
    table.add_column("value")
    for key, value in header_rows(config, settings):
        table.add_row(key, value)
    console.print(table)


def _output_path(config: RunConfig) -> Path:
    if config.output is not None:
        return Path(config.output)
    return Path("results") / f"{config.preset or config.mode}.csv"


def _summarise(result: Any) -> None:
    if isinstance(result, ReportDTO):
        console.print(
            f"t_bar={result.t_bar:.6g}  E_bar={result.E_bar:.6g}  "
            f"P_eff={result.P_eff}  Pcal_eff={result.Pcal_eff}  flags={result.flags}",
            markup=False,
        )
    elif isinstance(result, CriticalDTO):
        console.print(f"critical {result.axis} = {result.value:.6g}", markup=False)
    elif isinstance(result, SweepDTO):
        failed = [row for row in result.rows if row.report is None]
        console.print(f"{len(result.rows)} points, {len(failed)} failed", markup=False)


def write_results(result: Any, config: RunConfig) -> list[Path]:
    """Write the CSV file(s) and the metadata sidecar of one run."""
    path = _output_path(config)
    written: list[Path] = []
    if isinstance(result, list):
        curves: list[TrajectoryDTO] = result
        for curve in curves:
            target = path
            if curve.axis is not None and curve.value is not None:
                target = family_path(path, curve.axis, curve.value)
            written.append(emit_csv(curve, target))
    else:
        written.append(emit_csv(result, path))
    written.append(write_metadata(path, metadata(config)))
    return written


@app.command()
def run(
    preset: Annotated[str | None, typer.Option("--preset", help="Named configuration")] = None,
    config_file: Annotated[
        Path | None, typer.Option("--config", help="TOML or JSON run configuration")
    ] = None,
    mode: Annotated[
        str | None, typer.Option("--mode", help="trajectory, report, sweep or critical")
    ] = None,
    scenario: Annotated[str | None, typer.Option("--scenario", help="Initial-state kind")] = None,
    n: Annotated[int | None, typer.Option("--n", help="Number of chargers")] = None,
    m: Annotated[int | None, typer.Option("--m", help="Number of battery cells")] = None,
    R: Annotated[
        float | None, typer.Option("--R", help="Coupling ratio sqrt(2)*Omega/lambda")
    ] = None,
    c: Annotated[
        list[float] | None, typer.Option("--c", help="Charger coefficient (repeatable)")
    ] = None,
    e1: Annotated[float | None, typer.Option("--e1", help="Initial battery excitation")] = None,
    tmax: Annotated[float | None, typer.Option("--tmax", help="Horizon in lambda*t")] = None,
    dt: Annotated[float | None, typer.Option("--dt", help="Step in lambda*t")] = None,
    sweep_axis: Annotated[str | None, typer.Option("--sweep-axis")] = None,
    sweep_grid: Annotated[
        str | None, typer.Option("--sweep-grid", help="Comma-separated grid values")
    ] = None,
    out: Annotated[Path | None, typer.Option("--out", help="CSV output path")] = None,
) -> None:
    """Run a charging trajectory, report, sweep or threshold search and write CSV."""
    settings = get_settings()
    configure_logging("DEBUG" if settings.debug else settings.log_level, console)
    try:
        overrides = build_overrides(
            mode=mode,
            scenario=scenario,
            n=n,
            m=m,
            R=R,
            c=c,
            e1=e1,
            tmax=tmax,
            dt=dt,
            sweep_axis=sweep_axis,
            sweep_grid=sweep_grid,
            out=out,
        )
        config = parse_config(config_file, overrides, preset)
        print_header(config, settings)
        service = ApplicationService(settings)
        result = asyncio.run(service.commands.execute(command_for(config)))
        write_results(result, config)
        _summarise(result)
    except DomainError as exc:
        console.print(f"error[{exc.code}]: {exc}", markup=False)
        raise typer.Exit(code=exit_code_for(exc)) from exc


if __name__ == "__main__":
    app()

"""Charging command handlers."""

import asyncio
from dataclasses import dataclass

from qbcharge.application.commands.base import Command, CommandHandler
from qbcharge.application.dto import (
    CriticalDTO,
    ReportDTO,
    SweepDTO,
    TrajectoryDTO,
    report_to_dto,
    sweep_to_dto,
    trajectory_to_dto,
)
from qbcharge.domain.models import IntegratorSetup, ModelSpec, ScenarioSpec, SweepAxis
from qbcharge.domain.services.analysis import (
    Predicate,
    apply_axis,
    charging_report,
    critical_parameter,
    efficiency_input,
    efficiency_output,
    exceeds_initial_ergotropy,
    more_chargers_win,
    sweep,
)
from qbcharge.domain.services.dynamics import evolve


@dataclass(frozen=True)
class RunTrajectoryCommand(Command):
    """Command to record one trajectory, or one per grid value when `axis` is set."""

    spec: ModelSpec
    scenario: ScenarioSpec
    config: IntegratorSetup | None = None
    axis: SweepAxis | None = None


@dataclass(frozen=True)
class ChargingReportCommand(Command):
    """Command to extract the charging time, charged ergotropy and efficiencies."""

    spec: ModelSpec
    scenario: ScenarioSpec
    config: IntegratorSetup | None = None


@dataclass(frozen=True)
class SweepCommand(Command):
    """Command to report at every value of a parameter grid."""

    axis: SweepAxis
    spec: ModelSpec
    scenario: ScenarioSpec
    config: IntegratorSetup | None = None


@dataclass(frozen=True)
class CriticalParameterCommand(Command):
    """Command to bisect for the parameter where a charging predicate flips."""

    axis: str
    lower: float
    upper: float
    predicate: str
    spec: ModelSpec
    scenario: ScenarioSpec
    config: IntegratorSetup | None = None
    tolerance: float = 1e-3


class RunTrajectoryHandler(CommandHandler[RunTrajectoryCommand, list[TrajectoryDTO]]):
    """Handler for recording trajectories."""

    async def handle(self, command: RunTrajectoryCommand) -> list[TrajectoryDTO]:
        """Handle trajectory recording."""
        method = self.eigensolver
        if command.axis is None:
            traj = await asyncio.to_thread(
                evolve, command.spec, command.scenario, command.config, method
            )
            return [trajectory_to_dto(traj)]

        results: list[TrajectoryDTO] = []
        for value in command.axis.values:
            spec, scenario = apply_axis(command.spec, command.scenario, command.axis.name, value)
            traj = await asyncio.to_thread(evolve, spec, scenario, command.config, method)
            results.append(trajectory_to_dto(traj, axis=command.axis.name, value=value))
        return results


class ChargingReportHandler(CommandHandler[ChargingReportCommand, ReportDTO]):
    """Handler for charging reports."""

    async def handle(self, command: ChargingReportCommand) -> ReportDTO:
        """Handle report extraction."""
        traj = await asyncio.to_thread(
            evolve, command.spec, command.scenario, command.config, self.eigensolver
        )
        report = charging_report(traj)
        return report_to_dto(
            report, efficiency_output(traj, report), efficiency_input(traj, report)
        )


class SweepHandler(CommandHandler[SweepCommand, SweepDTO]):
    """Handler for parameter sweeps."""

    async def handle(self, command: SweepCommand) -> SweepDTO:
        """Handle the sweep on the configured number of worker threads."""
        result = await asyncio.to_thread(
            sweep,
            command.axis,
            command.spec,
            command.scenario,
            command.config,
            self._settings.sweep_workers,
            self.eigensolver,
        )
        return sweep_to_dto(result)


class CriticalParameterHandler(CommandHandler[CriticalParameterCommand, CriticalDTO]):
    """Handler for threshold searches."""

    def _predicate(self, command: CriticalParameterCommand) -> Predicate:
        method = self.eigensolver
        if command.predicate == "more-chargers":
            return more_chargers_win(command.spec, cfg=command.config, eigensolver=method)
        return exceeds_initial_ergotropy(
            command.spec, command.scenario, command.axis, command.config, method
        )

    async def handle(self, command: CriticalParameterCommand) -> CriticalDTO:
        """Handle the bisection."""
        value = await asyncio.to_thread(
            critical_parameter,
            self._predicate(command),
            (command.lower, command.upper),
            command.tolerance,
        )
        return CriticalDTO(
            axis=command.axis,
            value=value,
            lower=command.lower,
            upper=command.upper,
            tolerance=command.tolerance,
            predicate=command.predicate,
        )

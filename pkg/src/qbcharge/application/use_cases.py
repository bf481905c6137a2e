"""Use case orchestration layer for the application."""

from qbcharge.application.commands import (
    ChargingReportCommand,
    ChargingReportHandler,
    Command,
    CommandBus,
    CriticalParameterCommand,
    CriticalParameterHandler,
    RunTrajectoryCommand,
    RunTrajectoryHandler,
    SweepCommand,
    SweepHandler,
)
from qbcharge.config.run_config import RunConfig
from qbcharge.config.settings import Settings


def command_for(config: RunConfig) -> Command:
    """Translate a validated run configuration into the command for its mode."""
    spec, scenario, integrator = config.to_domain()
    match config.mode:
        case "trajectory":
            axis = config.sweep.to_domain() if config.sweep is not None else None
            return RunTrajectoryCommand(spec, scenario, integrator, axis)
        case "report":
            return ChargingReportCommand(spec, scenario, integrator)
        case "sweep":
            assert config.sweep is not None
            return SweepCommand(config.sweep.to_domain(), spec, scenario, integrator)
        case "critical":
            assert config.critical is not None
            critical = config.critical
            return CriticalParameterCommand(
                axis=critical.axis,
                lower=critical.lower,
                upper=critical.upper,
                predicate=critical.predicate,
                spec=spec,
                scenario=scenario,
                config=integrator,
                tolerance=critical.tolerance,
            )


class ApplicationService:
    """
    Main application service that orchestrates use cases.

    This service sets up the command bus with its handlers and provides a
    unified interface for executing charging runs.
    """

    def __init__(self, settings: Settings) -> None:
        """Initialize application service with process settings."""
        self._settings = settings
        self._command_bus = CommandBus()
        self._setup_handlers()

    def _setup_handlers(self) -> None:
        """Register all command handlers."""
        self._command_bus.register(RunTrajectoryCommand, RunTrajectoryHandler(self._settings))
        self._command_bus.register(ChargingReportCommand, ChargingReportHandler(self._settings))
        self._command_bus.register(SweepCommand, SweepHandler(self._settings))
        self._command_bus.register(
            CriticalParameterCommand, CriticalParameterHandler(self._settings)
        )

    @property
    def commands(self) -> CommandBus:
        """Get the command bus for executing charging runs."""
        return self._command_bus

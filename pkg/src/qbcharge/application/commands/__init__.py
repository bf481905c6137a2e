"""Command handlers for charging runs."""

from qbcharge.application.commands.base import Command, CommandBus, CommandHandler
from qbcharge.application.commands.charging import (
    ChargingReportCommand,
    ChargingReportHandler,
    CriticalParameterCommand,
    CriticalParameterHandler,
    RunTrajectoryCommand,
    RunTrajectoryHandler,
    SweepCommand,
    SweepHandler,
)

__all__ = [
    # Base classes
    "Command",
    "CommandHandler",
    "CommandBus",
    # Charging commands
    "RunTrajectoryCommand",
    "RunTrajectoryHandler",
    "ChargingReportCommand",
    "ChargingReportHandler",
    "SweepCommand",
    "SweepHandler",
    "CriticalParameterCommand",
    "CriticalParameterHandler",
]

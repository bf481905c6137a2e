"""Application layer: charging commands and use case orchestration."""

from qbcharge.application.dto import (
    CriticalDTO,
    ReportDTO,
    SweepDTO,
    SweepRowDTO,
    TrajectoryDTO,
    TrajectoryRowDTO,
)
from qbcharge.application.use_cases import ApplicationService, command_for

__all__ = [
    "ApplicationService",
    "command_for",
    "TrajectoryDTO",
    "TrajectoryRowDTO",
    "ReportDTO",
    "SweepDTO",
    "SweepRowDTO",
    "CriticalDTO",
]

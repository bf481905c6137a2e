"""qbcharge domain layer."""

from qbcharge.domain.exceptions import (
    BracketError,
    ConfigError,
    DegenerateRegimeError,
    DomainError,
    IncompatibleScenarioError,
    LayoutError,
    NonHermitianError,
    NonPhysicalStateError,
    NumericalError,
    OutputError,
    PositivityBreachError,
    RoundoffError,
    StepSizeError,
    ValidationError,
)
from qbcharge.domain.models import (
    ChargingReport,
    ErgotropyBreakdown,
    HilbertLayout,
    IntegratorConfig,
    ModelSpec,
    ScenarioSpec,
    SweepAxis,
    SweepResult,
    Trajectory,
)

__all__ = [
    # Models
    "HilbertLayout",
    "ModelSpec",
    "ScenarioSpec",
    "IntegratorConfig",
    "ErgotropyBreakdown",
    "Trajectory",
    "ChargingReport",
    "SweepAxis",
    "SweepResult",
    # Base Exceptions
    "DomainError",
    "ValidationError",
    "NumericalError",
    # Linear Algebra Exceptions
    "LayoutError",
    "NonHermitianError",
    "NonPhysicalStateError",
    # Model Exceptions
    "IncompatibleScenarioError",
    # Integration Exceptions
    "StepSizeError",
    "PositivityBreachError",
    "DegenerateRegimeError",
    "RoundoffError",
    "BracketError",
    # Configuration and Output Exceptions
    "ConfigError",
    "OutputError",
]

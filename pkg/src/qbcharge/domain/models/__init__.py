"""Domain models for qbcharge."""

from qbcharge.domain.models.ergotropy import ErgotropyBreakdown
from qbcharge.domain.models.integrator import IntegratorConfig, IntegratorPlan, IntegratorSetup
from qbcharge.domain.models.layout import HilbertLayout
from qbcharge.domain.models.model_spec import ModelSpec
from qbcharge.domain.models.oracle import (
    ChargingTime,
    FiniteChargingTime,
    InfiniteChargingTime,
    SingleChargerParams,
)
from qbcharge.domain.models.report import ChargingReport, Efficiency, LocalMaximum
from qbcharge.domain.models.scenario import (
    SCENARIO_TYPES,
    BellPhiMinus,
    BellPhiPlus,
    BellPsiMinus,
    BellPsiPlus,
    MixedBattery,
    MixedCharger,
    ScenarioI,
    ScenarioII,
    ScenarioKind,
    ScenarioSpec,
)
from qbcharge.domain.models.sweep import SweepAxis, SweepPoint, SweepResult
from qbcharge.domain.models.trajectory import Trajectory, TrajectoryRecord

__all__ = [
    # Register and parameters
    "HilbertLayout",
    "ModelSpec",
    "IntegratorConfig",
    "IntegratorPlan",
    "IntegratorSetup",
    # Initial states
    "ScenarioSpec",
    "ScenarioKind",
    "SCENARIO_TYPES",
    "ScenarioI",
    "ScenarioII",
    "BellPsiPlus",
    "BellPsiMinus",
    "BellPhiPlus",
    "BellPhiMinus",
    "MixedCharger",
    "MixedBattery",
    # Results
    "ErgotropyBreakdown",
    "Trajectory",
    "TrajectoryRecord",
    "ChargingReport",
    "LocalMaximum",
    "Efficiency",
    "SweepAxis",
    "SweepPoint",
    "SweepResult",
    # Closed form
    "SingleChargerParams",
    "ChargingTime",
    "FiniteChargingTime",
    "InfiniteChargingTime",
]

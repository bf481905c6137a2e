"""Recorded time evolution of the charger and battery."""

from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from qbcharge.domain.models.ergotropy import ErgotropyBreakdown
from qbcharge.domain.models.integrator import IntegratorConfig
from qbcharge.domain.models.model_spec import ModelSpec
from qbcharge.domain.models.scenario import ScenarioSpec

ComplexMatrix = npt.NDArray[np.complex128]


@dataclass(frozen=True)
class TrajectoryRecord:
    """Observables of one recorded time step (energies in units of omega0)."""

    lam_t: float
    battery: ErgotropyBreakdown
    charger: ErgotropyBreakdown
    pseudomode_occupation: float
    excitation_number: float
    cell_ergotropies: tuple[float, ...] = ()


@dataclass(frozen=True)
class Trajectory:
    """
    Reduced states and observable records on the recorded time grid.

    `times` holds lambda*t values; `battery_states[k]` and
    `charger_states[k]` are the partial traces of the extended state at
    `times[k]`.
    """

    spec: ModelSpec
    scenario: ScenarioSpec
    config: IntegratorConfig
    times: tuple[float, ...]
    battery_states: tuple[ComplexMatrix, ...]
    charger_states: tuple[ComplexMatrix, ...]
    records: tuple[TrajectoryRecord, ...]
    final_trace_deviation: float = field(default=0.0)

    def __len__(self) -> int:
        return len(self.times)

    @property
    def lam_t(self) -> npt.NDArray[np.float64]:
        return np.asarray(self.times, dtype=np.float64)

    @property
    def battery_ergotropy(self) -> npt.NDArray[np.float64]:
        return np.array([r.battery.total for r in self.records])

    @property
    def battery_incoherent(self) -> npt.NDArray[np.float64]:
        return np.array([r.battery.incoherent for r in self.records])

    @property
    def battery_coherent(self) -> npt.NDArray[np.float64]:
        return np.array([r.battery.coherent for r in self.records])

    @property
    def battery_energy(self) -> npt.NDArray[np.float64]:
        return np.array([r.battery.mean_energy for r in self.records])

    @property
    def charger_ergotropy(self) -> npt.NDArray[np.float64]:
        return np.array([r.charger.total for r in self.records])

    @property
    def charger_energy(self) -> npt.NDArray[np.float64]:
        return np.array([r.charger.mean_energy for r in self.records])

    @property
    def pseudomode_occupation(self) -> npt.NDArray[np.float64]:
        return np.array([r.pseudomode_occupation for r in self.records])

    @property
    def excitation_number(self) -> npt.NDArray[np.float64]:
        return np.array([r.excitation_number for r in self.records])

"""Operators and initial states of the charger-battery-pseudomode register."""

from dataclasses import dataclass
from functools import reduce

import numpy as np

from qbcharge.domain.models.layout import HilbertLayout
from qbcharge.domain.models.model_spec import ModelSpec
from qbcharge.domain.models.scenario import (
    BellCharger,
    MixedBattery,
    MixedCharger,
    ScenarioI,
    ScenarioII,
    ScenarioSpec,
)
from qbcharge.domain.services.numkernel import ComplexMatrix, dagger, embed, kron, kron_all

# Basis convention: index 0 is |0> (ground), index 1 is |1> (excited).
SIGMA_PLUS: ComplexMatrix = np.array([[0, 0], [1, 0]], dtype=np.complex128)
SIGMA_MINUS: ComplexMatrix = SIGMA_PLUS.T.copy()
EXCITED_PROJECTOR: ComplexMatrix = np.diag([0.0, 1.0]).astype(np.complex128)
GROUND: ComplexMatrix = np.array([1, 0], dtype=np.complex128)
EXCITED: ComplexMatrix = np.array([0, 1], dtype=np.complex128)


@dataclass(frozen=True)
class SystemHamiltonian:
    """omega0 * sum_i sigma_i^+ sigma_i^- on the full qubit register and its two restrictions."""

    full: ComplexMatrix
    charger: ComplexMatrix
    battery: ComplexMatrix


def annihilation(ncut: int) -> ComplexMatrix:
    """Truncated bosonic lowering operator with <k-1|a|k> = sqrt(k)."""
    return np.diag(np.sqrt(np.arange(1, ncut + 1, dtype=np.float64)), k=1).astype(np.complex128)


def number_hamiltonian(n_qubits: int, omega0: float = 1.0) -> ComplexMatrix:
    """Diagonal omega0 * (number of excited qubits) in the computational basis."""
    layout = HilbertLayout.qubits(n_qubits)
    total = sum(
        (embed(EXCITED_PROJECTOR, layout, i) for i in range(n_qubits)),
        start=np.zeros((layout.total_dim, layout.total_dim), dtype=np.complex128),
    )
    return omega0 * total


def build_system_hamiltonian(spec: ModelSpec) -> SystemHamiltonian:
    return SystemHamiltonian(
        full=number_hamiltonian(spec.n_qubits, spec.omega0),
        charger=number_hamiltonian(spec.n_chargers, spec.omega0),
        battery=number_hamiltonian(spec.m_cells, spec.omega0),
    )


def pseudomode_ops(spec: ModelSpec) -> ComplexMatrix:
    """Pseudomode annihilation operator on the extended register."""
    return embed(annihilation(spec.ncut), spec.layout, spec.pseudomode_index)


def build_interaction(spec: ModelSpec) -> ComplexMatrix:
    """V = Omega * sum_i sigma_i^+ a + H.c. on qubits and pseudomode."""
    layout = spec.layout
    a = pseudomode_ops(spec)
    raising = sum(
        (embed(SIGMA_PLUS, layout, i) for i in range(spec.n_qubits)),
        start=np.zeros((layout.total_dim, layout.total_dim), dtype=np.complex128),
    )
    coupling = spec.Omega * (raising @ a)
    return coupling + dagger(coupling)


def excitation_number(spec: ModelSpec) -> ComplexMatrix:
    """N_exc = sum_i sigma_i^+ sigma_i^- + a^dagger a, conserved by V."""
    a = pseudomode_ops(spec)
    qubits = kron(number_hamiltonian(spec.n_qubits), np.eye(spec.ncut + 1))
    return qubits + dagger(a) @ a


def _pure(vector: ComplexMatrix) -> ComplexMatrix:
    return np.outer(vector, vector.conj())


def _superposition(weight: float) -> ComplexMatrix:
    """sqrt(w)|1> + sqrt(1-w)|0> with real, non-negative amplitudes."""
    return np.sqrt(1.0 - weight) * GROUND + np.sqrt(weight) * EXCITED


def _mixture(weight: float) -> ComplexMatrix:
    return np.diag([1.0 - weight, weight]).astype(np.complex128)


def _ground_cells(count: int) -> list[ComplexMatrix]:
    return [_pure(GROUND)] * count


def _charger_and_battery(spec: ModelSpec, scen: ScenarioSpec) -> list[ComplexMatrix]:
    """Single-qubit (or joint charger) factors of the initial qubit state."""
    excited = _pure(EXCITED)
    match scen:
        case ScenarioI(c=c):
            return [_pure(_superposition(ci)) for ci in c] + _ground_cells(spec.m_cells)
        case ScenarioII(e1=e1):
            return (
                [excited] * spec.n_chargers
                + [_pure(_superposition(e1))]
                + _ground_cells(spec.m_cells - 1)
            )
        case MixedCharger(c1=c1):
            return [_mixture(c1)] * spec.n_chargers + _ground_cells(spec.m_cells)
        case MixedBattery(e1=e1):
            return [excited] * spec.n_chargers + [_mixture(e1)] + _ground_cells(spec.m_cells - 1)
        case BellCharger():
            first, second = scen.excited_pair
            pair = np.zeros(4, dtype=np.complex128)
            pair[first] = np.sqrt(scen.c1)
            pair[second] += scen.sign * np.sqrt(1.0 - scen.c1)
            return [_pure(pair)] + _ground_cells(spec.m_cells)
    raise TypeError(f"Unsupported scenario {scen!r}")


def build_qubit_state(spec: ModelSpec, scen: ScenarioSpec) -> ComplexMatrix:
    """Initial state of the qubit register alone."""
    scen.validate_for(spec)
    return reduce(kron, _charger_and_battery(spec, scen))


def build_initial_state(spec: ModelSpec, scen: ScenarioSpec) -> ComplexMatrix:
    """Initial extended state: qubits as prescribed, pseudomode in vacuum."""
    vacuum = np.zeros((spec.ncut + 1, spec.ncut + 1), dtype=np.complex128)
    vacuum[0, 0] = 1.0
    return kron_all(build_qubit_state(spec, scen), vacuum)

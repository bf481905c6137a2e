"""Fixed-step integration of the pseudomode master equation."""

import logging
from collections.abc import Iterator

import numpy as np
import numpy.typing as npt
from scipy.linalg import expm

from qbcharge.domain.exceptions import LayoutError, PositivityBreachError
from qbcharge.domain.models.ergotropy import ENERGY_TOLERANCE, ErgotropyBreakdown
from qbcharge.domain.models.integrator import IntegratorConfig, IntegratorSetup, resolve_integrator
from qbcharge.domain.models.model_spec import ModelSpec
from qbcharge.domain.models.scenario import ScenarioSpec
from qbcharge.domain.models.trajectory import Trajectory, TrajectoryRecord
from qbcharge.domain.services.ergotropy import ergotropy, ergotropy_breakdown
from qbcharge.domain.services.model import (
    build_initial_state,
    build_interaction,
    build_system_hamiltonian,
    excitation_number,
    number_hamiltonian,
    pseudomode_ops,
)
from qbcharge.domain.services.numkernel import (
    ComplexMatrix,
    EigenMethod,
    as_matrix,
    dagger,
    min_eigenvalue,
    partial_trace,
)

logger = logging.getLogger(__name__)

POSITIVITY_TOLERANCE = 1e-8
TRACE_TOLERANCE = 1e-8
FINAL_TRACE_TOLERANCE = 1e-7


def lindblad_rhs(
    varrho: npt.ArrayLike, V: npt.ArrayLike, lam: float, a: npt.ArrayLike
) -> ComplexMatrix:
    """
    Generator -i[V, rho] + lam (2 a rho a^dagger - a^dagger a rho - rho a^dagger a).

    Time is physical here; ChargingSimulator works in lambda*t units.
    """
    rho = as_matrix(varrho)
    v = as_matrix(V)
    lowering = as_matrix(a)
    if not rho.shape == v.shape == lowering.shape or rho.shape[0] != rho.shape[1]:
        raise LayoutError(
            f"Generator operands disagree: rho {rho.shape}, V {v.shape}, a {lowering.shape}"
        )
    raising = dagger(lowering)
    number = raising @ lowering
    return -1j * (v @ rho - rho @ v) + lam * (
        2.0 * lowering @ rho @ raising - number @ rho - rho @ number
    )


class ChargingSimulator:
    """
    RK4 propagator for one model, in the dimensionless time lambda*t.

    The generator is split as -i(H rho - rho H^dagger) + 2 a rho a^dagger with
    the non-Hermitian H = (V - i lam a^dagger a)/lam, which saves two matrix
    products per evaluation.
    """

    def __init__(self, spec: ModelSpec) -> None:
        self.spec = spec
        self.a = pseudomode_ops(spec)
        self.a_dag = dagger(self.a)
        self.V = build_interaction(spec)
        self._h_eff = (self.V - 1j * spec.lam * (self.a_dag @ self.a)) / spec.lam
        self._h_eff_dag = dagger(self._h_eff)

    def rhs(self, varrho: ComplexMatrix) -> ComplexMatrix:
        """d(rho)/d(lambda t)."""
        return -1j * (self._h_eff @ varrho - varrho @ self._h_eff_dag) + 2.0 * (
            self.a @ varrho @ self.a_dag
        )

    def step(self, varrho: ComplexMatrix, dt: float) -> ComplexMatrix:
        k1 = self.rhs(varrho)
        k2 = self.rhs(varrho + 0.5 * dt * k1)
        k3 = self.rhs(varrho + 0.5 * dt * k2)
        k4 = self.rhs(varrho + dt * k3)
        return varrho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

    def iter_states(
        self, initial: ComplexMatrix, config: IntegratorConfig
    ) -> Iterator[tuple[float, ComplexMatrix]]:
        """
        Yield (lambda*t, extended state) on the recording grid.

        The initial state, every `record_stride`-th step and the final step are
        yielded. Times are step indices times dt, never accumulated sums.
        """
        n_steps = config.n_steps
        state = as_matrix(initial).copy()
        yield 0.0, state
        for k in range(1, n_steps + 1):
            state = self.step(state, config.dt)
            if k % config.record_stride == 0 or k == n_steps:
                yield k * config.dt, state


def _checked_reduction(
    rho: ComplexMatrix, spec: ModelSpec, keep: tuple[int, ...], subsystem: str, lam_t: float
) -> ComplexMatrix:
    reduced = partial_trace(rho, spec.layout, keep)
    reduced = 0.5 * (reduced + dagger(reduced))
    trace_deviation = abs(complex(np.trace(reduced)) - 1.0)
    lowest = min_eigenvalue(reduced)
    if lowest < -POSITIVITY_TOLERANCE or trace_deviation > TRACE_TOLERANCE:
        raise PositivityBreachError(lam_t, subsystem, lowest, trace_deviation)
    return reduced


def _expectation(rho: ComplexMatrix, op: ComplexMatrix) -> float:
    return float(np.real(np.trace(rho @ op)))


def evolve(
    spec: ModelSpec,
    scen: ScenarioSpec,
    cfg: IntegratorSetup | None = None,
    eigensolver: EigenMethod = "lapack",
) -> Trajectory:
    """
    Integrate from the scenario's initial state and record reduced observables.

    Args:
        spec: Model parameters.
        scen: Initial charger and battery state.
        cfg: Time grid, or a partial plan resolved against `spec`; the model's
            defaults when omitted.
        eigensolver: Diagonalisation routine for the ergotropy.

    Returns:
        Trajectory with battery and charger states, ergotropy breakdowns
        (against H_ba and H_ch in units of omega0), per-cell battery
        ergotropies, pseudomode occupation and total excitation number.

    Raises:
        StepSizeError: If cfg.dt exceeds the stability bound.
        PositivityBreachError: If a recorded reduced state is unphysical or
            the final trace drifts by more than 1e-7.
    """
    config = resolve_integrator(cfg, spec)
    config.check_stability(spec)
    scen.validate_for(spec)

    hamiltonians = build_system_hamiltonian(spec)
    h_battery = hamiltonians.battery / spec.omega0
    h_charger = hamiltonians.charger / spec.omega0
    h_cell = number_hamiltonian(1)
    simulator = ChargingSimulator(spec)
    occupation_op = simulator.a_dag @ simulator.a
    excitation_op = excitation_number(spec)

    logger.info(
        "Evolving %s: n=%d m=%d R=%g dt=%g t_max=%g steps=%d",
        scen.kind,
        spec.n_chargers,
        spec.m_cells,
        spec.R,
        config.dt,
        config.t_max,
        config.n_steps,
    )

    times: list[float] = []
    battery_states: list[ComplexMatrix] = []
    charger_states: list[ComplexMatrix] = []
    records: list[TrajectoryRecord] = []
    state = build_initial_state(spec, scen)
    for lam_t, state in simulator.iter_states(state, config):
        battery = _checked_reduction(state, spec, spec.battery_indices, "battery", lam_t)
        charger = _checked_reduction(state, spec, spec.charger_indices, "charger", lam_t)
        battery_breakdown = ergotropy_breakdown(battery, h_battery, eigensolver)
        if spec.m_cells > 1:
            cells = tuple(
                ergotropy(
                    _checked_reduction(state, spec, (index,), f"cell {index}", lam_t),
                    h_cell,
                    eigensolver,
                )
                for index in spec.battery_indices
            )
        else:
            cells = (battery_breakdown.total,)
        times.append(lam_t)
        battery_states.append(battery)
        charger_states.append(charger)
        records.append(
            TrajectoryRecord(
                lam_t=lam_t,
                battery=battery_breakdown,
                charger=ergotropy_breakdown(charger, h_charger, eigensolver),
                pseudomode_occupation=_expectation(state, occupation_op),
                excitation_number=_expectation(state, excitation_op),
                cell_ergotropies=cells,
            )
        )

    final_deviation = abs(complex(np.trace(state)) - 1.0)
    if final_deviation > FINAL_TRACE_TOLERANCE:
        raise PositivityBreachError(
            times[-1], "extended register", min_eigenvalue(state), final_deviation
        )
    logger.debug(
        "Finished %s with %d records, trace drift %.2e", scen.kind, len(times), final_deviation
    )

    return Trajectory(
        spec=spec,
        scenario=scen,
        config=config,
        times=tuple(times),
        battery_states=tuple(battery_states),
        charger_states=tuple(charger_states),
        records=tuple(records),
        final_trace_deviation=final_deviation,
    )


def _breakdowns_agree(
    first: ErgotropyBreakdown, second: ErgotropyBreakdown, tolerance: float
) -> bool:
    return all(
        abs(x - y) <= tolerance
        for x, y in (
            (first.total, second.total),
            (first.incoherent, second.incoherent),
            (first.coherent, second.coherent),
            (first.mean_energy, second.mean_energy),
        )
    )


def ergotropy_invariance_under_rotating_frame(
    rho: npt.ArrayLike,
    h: npt.ArrayLike,
    lam_t: float,
    lam: float = 1.0,
    tolerance: float = ENERGY_TOLERANCE,
    eigensolver: EigenMethod = "lapack",
) -> bool:
    """
    Check that exp(-iHt) rho exp(iHt) has the same ergotropy breakdown as rho.

    `h` is the free Hamiltonian of the subsystem; interaction-picture states
    can then be analysed directly.
    """
    state = as_matrix(rho)
    ham = as_matrix(h)
    rotation = expm(-1j * ham * (lam_t / lam))
    rotated = rotation @ state @ dagger(rotation)
    rotated = 0.5 * (rotated + dagger(rotated))
    return _breakdowns_agree(
        ergotropy_breakdown(state, ham, eigensolver),
        ergotropy_breakdown(rotated, ham, eigensolver),
        tolerance,
    )

"""Tests for the master-equation integrator."""

import numpy as np
import pytest

from qbcharge.domain.exceptions import LayoutError, StepSizeError
from qbcharge.domain.models import (
    BellPsiMinus,
    IntegratorConfig,
    ModelSpec,
    ScenarioI,
    ScenarioII,
    SingleChargerParams,
)
from qbcharge.domain.services.dynamics import (
    ChargingSimulator,
    ergotropy_invariance_under_rotating_frame,
    evolve,
    lindblad_rhs,
)
from qbcharge.domain.services.model import build_interaction, number_hamiltonian, pseudomode_ops
from qbcharge.domain.services.oracle import battery_state_analytic, ergotropy_mcell_analytic
from tests.fixtures import random_density_matrix, random_hermitian

SPEC = ModelSpec.from_ratio(1, 1, 5.0, lam=0.7)


def basis_projector(dim: int, index: int) -> np.ndarray:
    rho = np.zeros((dim, dim), dtype=np.complex128)
    rho[index, index] = 1.0
    return rho


class TestGenerator:
    def test_vacuum_with_empty_qubits_is_stationary(self) -> None:
        rho = basis_projector(SPEC.layout.total_dim, 0)
        rhs = lindblad_rhs(rho, build_interaction(SPEC), SPEC.lam, pseudomode_ops(SPEC))
        np.testing.assert_allclose(rhs, 0.0, atol=1e-14)

    def test_photon_decays_at_twice_the_width(self) -> None:
        # Qubits empty, one photon: basis index 1 in layout (2, 2, 3).
        rho = basis_projector(SPEC.layout.total_dim, 1)
        a = pseudomode_ops(SPEC)
        rhs = lindblad_rhs(rho, np.zeros_like(a), SPEC.lam, a)
        rate = np.trace(rhs @ a.conj().T @ a).real
        assert rate == pytest.approx(-2.0 * SPEC.lam)

    def test_trace_preserving(self, rng: np.random.Generator) -> None:
        v = build_interaction(SPEC)
        a = pseudomode_ops(SPEC)
        for _ in range(10):
            h = random_hermitian(rng, SPEC.layout.total_dim)
            assert abs(np.trace(lindblad_rhs(h, v, SPEC.lam, a))) < 1e-10

    def test_shape_mismatch(self) -> None:
        with pytest.raises(LayoutError):
            lindblad_rhs(np.eye(4), np.eye(12), 1.0, np.eye(12))

    def test_simulator_rhs_is_generator_in_scaled_time(self, rng: np.random.Generator) -> None:
        rho = random_density_matrix(rng, SPEC.layout.total_dim)
        simulator = ChargingSimulator(SPEC)
        physical = lindblad_rhs(rho, simulator.V, SPEC.lam, simulator.a)
        np.testing.assert_allclose(simulator.rhs(rho), physical / SPEC.lam, atol=1e-12)


class TestRecordingGrid:
    def test_initial_every_stride_and_final(self) -> None:
        simulator = ChargingSimulator(ModelSpec.from_ratio(1, 1, 1.0))
        initial = basis_projector(12, 0)
        cfg = IntegratorConfig(dt=0.01, t_max=0.105, record_stride=4)
        times = [t for t, _ in simulator.iter_states(initial, cfg)]
        assert times == pytest.approx([0.0, 0.04, 0.08, 0.10])


class TestEvolve:
    def test_no_coupling_means_no_charging(self) -> None:
        spec = ModelSpec.from_ratio(1, 1, 0.0)
        traj = evolve(spec, ScenarioI(c=(0.7,)), IntegratorConfig(dt=0.01, t_max=1.0))
        np.testing.assert_allclose(traj.battery_ergotropy, 0.0, atol=1e-12)
        np.testing.assert_allclose(traj.charger_energy, 0.7, atol=1e-12)

    def test_unstable_step(self) -> None:
        with pytest.raises(StepSizeError):
            evolve(ModelSpec.from_ratio(1, 1, 20.0), ScenarioI(), IntegratorConfig(0.1, 1.0))

    def test_trace_and_excitation_bookkeeping(self) -> None:
        spec = ModelSpec.from_ratio(1, 1, 5.0)
        cfg = IntegratorConfig(dt=5e-4, t_max=0.5)
        traj = evolve(spec, ScenarioI(c=(1.0,)), cfg)
        assert traj.final_trace_deviation <= 1e-7
        n_exc = traj.excitation_number
        photons = traj.pseudomode_occupation
        rate = (n_exc[2:] - n_exc[:-2]) / (2 * cfg.dt)
        np.testing.assert_allclose(rate, -2.0 * photons[1:-1], atol=2e-4)

    def test_agrees_with_closed_form(self) -> None:
        params = SingleChargerParams(c1=0.8, m_cells=1, R=20.0)
        spec = ModelSpec.from_ratio(1, 1, 20.0)
        traj = evolve(spec, ScenarioI(c=(0.8,)), IntegratorConfig.default_for(spec, t_max=0.5))
        np.testing.assert_allclose(
            traj.battery_ergotropy, ergotropy_mcell_analytic(params, traj.lam_t), atol=1e-4
        )

    def test_two_cell_state_matches_closed_form(self) -> None:
        params = SingleChargerParams(c1=0.8, m_cells=2, R=20.0)
        spec = ModelSpec.from_ratio(1, 2, 20.0)
        traj = evolve(spec, ScenarioI(c=(0.8,)), IntegratorConfig(dt=1e-4, t_max=0.2))
        np.testing.assert_allclose(
            traj.battery_states[-1], battery_state_analytic(params, traj.times[-1]), atol=1e-4
        )
        assert len(traj.records[-1].cell_ergotropies) == 2

    def test_dark_charger_pair_never_charges(self) -> None:
        spec = ModelSpec.from_ratio(2, 1, 5.0)
        traj = evolve(spec, BellPsiMinus(c1=0.5), IntegratorConfig(dt=4e-4, t_max=1.0))
        np.testing.assert_allclose(traj.battery_ergotropy, 0.0, atol=1e-8)

    def test_initial_battery_ergotropy_is_recorded(self) -> None:
        spec = ModelSpec.from_ratio(1, 1, 5.0)
        traj = evolve(spec, ScenarioII(e1=1.0), IntegratorConfig(dt=4e-4, t_max=0.1))
        assert traj.battery_ergotropy[0] == pytest.approx(1.0)

    def test_jacobi_records_match_lapack(self) -> None:
        spec = ModelSpec.from_ratio(1, 2, 3.0)
        cfg = IntegratorConfig(dt=1e-3, t_max=0.3, record_stride=50)
        lapack = evolve(spec, ScenarioI(c=(0.9,)), cfg, eigensolver="lapack")
        jacobi = evolve(spec, ScenarioI(c=(0.9,)), cfg, eigensolver="jacobi")
        np.testing.assert_allclose(jacobi.battery_ergotropy, lapack.battery_ergotropy, atol=1e-9)


class TestRotatingFrame:
    def test_random_qubit_states(self, rng: np.random.Generator) -> None:
        h = number_hamiltonian(1)
        for lam_t in (0.3, 1.7, 12.0):
            assert ergotropy_invariance_under_rotating_frame(
                random_density_matrix(rng, 2), h, lam_t
            )

    def test_evolved_two_cell_battery(self) -> None:
        spec = ModelSpec.from_ratio(1, 2, 20.0)
        traj = evolve(spec, ScenarioI(c=(0.6,)), IntegratorConfig(dt=1e-4, t_max=0.1))
        assert ergotropy_invariance_under_rotating_frame(
            traj.battery_states[-1], number_hamiltonian(2), 0.4, lam=0.5
        )

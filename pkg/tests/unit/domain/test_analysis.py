"""Tests for charging reports, sweeps and threshold searches."""

from math import pi, sqrt

import numpy as np
import pytest

from qbcharge.domain.exceptions import BracketError, IncompatibleScenarioError, RoundoffError
from qbcharge.domain.models import (
    IntegratorConfig,
    IntegratorPlan,
    MixedCharger,
    ModelSpec,
    ScenarioI,
    ScenarioII,
    SweepAxis,
    Trajectory,
)
from qbcharge.domain.services import analysis as analysis_module
from qbcharge.domain.services.analysis import (
    apply_axis,
    charging_report,
    critical_parameter,
    efficiency_input,
    efficiency_output,
    sweep,
)
from qbcharge.domain.services.dynamics import evolve
from tests.fixtures import synthetic_trajectory


class TestChargingReport:
    def test_refines_a_sampled_parabola(self) -> None:
        times = np.round(np.arange(0.0, 1.01, 0.1), 10)
        traj = synthetic_trajectory(times, 1.0 - (times - 0.37) ** 2)
        report = charging_report(traj)
        assert report.t_bar == pytest.approx(0.37)
        assert report.ergotropy_at_tbar == pytest.approx(1.0)
        assert report.which_maximum == 1
        assert report.flags == "ok"

    def test_global_maximum_may_come_later(self) -> None:
        times = np.linspace(0.0, 2.0, 201)
        curve = 0.5 * np.exp(-(((times - 0.5) / 0.1) ** 2)) + 0.8 * np.exp(
            -(((times - 1.5) / 0.1) ** 2)
        )
        report = charging_report(synthetic_trajectory(times, curve))
        assert len(report.local_maxima) == 2
        assert report.which_maximum == 2
        assert report.t_bar == pytest.approx(1.5, abs=1e-6)
        assert report.ergotropy_at_tbar == pytest.approx(0.8, abs=1e-6)

    def test_monotone_curve_reports_endpoint(self) -> None:
        times = np.linspace(0.0, 1.0, 11)
        report = charging_report(synthetic_trajectory(times, 0.5 * times))
        assert report.no_interior_maximum
        assert report.which_maximum is None
        assert report.t_bar == pytest.approx(1.0)
        assert report.flags == "no_interior_maximum"

    def test_vanishing_curve_has_no_maximum(self) -> None:
        times = np.linspace(0.0, 1.0, 11)
        report = charging_report(synthetic_trajectory(times, np.zeros(11)))
        assert report.no_interior_maximum
        assert report.t_bar == 0.0
        assert report.charged_ergotropy == 0.0

    def test_charged_ergotropy_is_net_gain(self) -> None:
        times = np.round(np.arange(0.0, 1.01, 0.1), 10)
        report = charging_report(synthetic_trajectory(times, 1.0 - (times - 0.37) ** 2))
        assert report.initial_ergotropy == pytest.approx(1.0 - 0.37**2)
        assert report.charged_ergotropy == pytest.approx(0.37**2)

    def test_first_charger_minimum(self) -> None:
        times = np.linspace(0.0, 1.0, 11)
        charger = (times - 0.3) ** 2
        traj = synthetic_trajectory(times, 0.5 * times, charger_ergotropy=charger)
        assert charging_report(traj).charger_first_minimum == pytest.approx(0.3)


class TestEfficiencies:
    def _trajectory(self, charger_energy: np.ndarray | None = None) -> Trajectory:
        times = np.linspace(0.0, 1.0, 11)
        charger = 1.0 - 0.8 * times if charger_energy is None else charger_energy
        return synthetic_trajectory(
            times, 0.5 - 2.0 * (times - 0.5) ** 2, battery_energy=times, charger_energy=charger
        )

    def test_defined_ratios(self) -> None:
        traj = self._trajectory()
        report = charging_report(traj)
        assert report.t_bar == pytest.approx(0.5)
        assert efficiency_output(traj, report).value == pytest.approx(0.5 / 0.4)
        assert efficiency_input(traj, report).value == pytest.approx(1.0)

    def test_constant_charger_energy_is_undefined(self) -> None:
        traj = self._trajectory(np.ones(11))
        result = efficiency_output(traj, charging_report(traj))
        assert not result.is_defined
        assert result.to_cell() == "undefined"


class TestCriticalParameter:
    def test_finds_crossing(self) -> None:
        value = critical_parameter(lambda x: x < 0.3, (0.0, 1.0))
        assert value == pytest.approx(0.3, abs=1e-3)

    def test_bracket_order_does_not_matter(self) -> None:
        value = critical_parameter(lambda x: x > 0.62, (1.0, 0.0), tolerance=1e-6)
        assert value == pytest.approx(0.62, abs=1e-6)

    def test_no_sign_change(self) -> None:
        with pytest.raises(BracketError) as excinfo:
            critical_parameter(lambda x: True, (0.0, 1.0))
        assert excinfo.value.code == "NO_SIGN_CHANGE"


class TestApplyAxis:
    def test_ratio(self) -> None:
        spec, _ = apply_axis(ModelSpec.from_ratio(1, 1, 1.0), ScenarioI(), "R", 7.0)
        assert spec.R == pytest.approx(7.0)

    def test_charger_count_resizes_product_chargers(self) -> None:
        spec, scen = apply_axis(ModelSpec(), ScenarioI(c=(0.4,)), "n_chargers", 3.0)
        assert spec.n_chargers == 3
        assert scen == ScenarioI(c=(0.4, 0.4, 0.4))

    def test_cell_count(self) -> None:
        spec, _ = apply_axis(ModelSpec(), MixedCharger(), "m_cells", 2.0)
        assert spec.m_cells == 2
        assert spec.ncut == 3

    def test_c1_needs_a_charger_parameter(self) -> None:
        with pytest.raises(IncompatibleScenarioError):
            apply_axis(ModelSpec(), ScenarioII(), "c1", 0.5)

    def test_e1_needs_a_battery_parameter(self) -> None:
        with pytest.raises(IncompatibleScenarioError):
            apply_axis(ModelSpec(), ScenarioI(), "e1", 0.5)


class TestOnSimulatedTrajectories:
    def test_charging_time_matches_closed_form(self) -> None:
        spec = ModelSpec.from_ratio(1, 1, 20.0)
        traj = evolve(spec, ScenarioI(c=(0.6,)))
        report = charging_report(traj)
        assert report.t_bar == pytest.approx(2 * pi / sqrt(1599.0), rel=1e-2)
        assert report.which_maximum == 1
        assert efficiency_output(traj, report).is_defined
        assert efficiency_input(traj, report).is_defined

    def test_sweep_keeps_grid_order(self) -> None:
        axis = SweepAxis(name="R", values=(5.0, 10.0))
        result = sweep(axis, ModelSpec.from_ratio(1, 1, 1.0), ScenarioI(), workers=2)
        assert [p.value for p in result.points] == [5.0, 10.0]
        reports = [p.report for p in result.points]
        assert all(r is not None for r in reports)
        assert reports[1].ergotropy_at_tbar > reports[0].ergotropy_at_tbar  # type: ignore[union-attr]

    def test_sweep_records_failed_points(self) -> None:
        axis = SweepAxis(name="R", values=(1.0, 20.0))
        cfg = IntegratorConfig(dt=0.002, t_max=0.5)
        result = sweep(axis, ModelSpec.from_ratio(1, 1, 1.0), ScenarioI(), cfg)
        assert result.points[0].error is None
        assert result.points[1].error == "STEP_SIZE"
        assert result.points[1].flags == "error:STEP_SIZE"
        assert result.failed == (result.points[1],)

    def test_partial_plan_keeps_a_stable_step_per_point(self) -> None:
        axis = SweepAxis(name="R", values=(10.0, 50.0, 100.0))
        plan = IntegratorPlan(t_max=0.1)
        result = sweep(axis, ModelSpec.from_ratio(1, 1, 20.0), ScenarioI(), plan)
        assert result.failed == ()
        assert all(p.report is not None for p in result.points)

    def test_numerical_failure_in_one_point_does_not_abort(
        self, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        real_evolve = analysis_module.evolve

        def flaky(spec: ModelSpec, *args: object, **kwargs: object) -> Trajectory:
            if spec.R == pytest.approx(10.0):
                raise RoundoffError("imaginary part of p(t)", 1e-6)
            return real_evolve(spec, *args, **kwargs)  # type: ignore[arg-type]

        monkeypatch.setattr(analysis_module, "evolve", flaky)
        axis = SweepAxis(name="R", values=(5.0, 10.0))
        result = sweep(axis, ModelSpec.from_ratio(1, 1, 5.0), ScenarioI())
        assert result.points[0].error is None
        assert result.points[1].error == "ROUNDOFF"

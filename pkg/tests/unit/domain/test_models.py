"""Tests for domain value objects."""

from math import sqrt

import pytest

from qbcharge.domain.exceptions import (
    IncompatibleScenarioError,
    LayoutError,
    StepSizeError,
    ValidationError,
)
from qbcharge.domain.models import (
    BellPsiPlus,
    Efficiency,
    HilbertLayout,
    IntegratorConfig,
    IntegratorPlan,
    ModelSpec,
    ScenarioI,
    ScenarioII,
    SingleChargerParams,
    SweepAxis,
)
from qbcharge.domain.models.integrator import (
    default_horizon,
    oscillation_period,
    resolve_integrator,
)


class TestModelSpec:
    def test_exact_truncation_by_default(self) -> None:
        spec = ModelSpec(n_chargers=2, m_cells=3)
        assert spec.ncut == 5
        assert spec.layout.dims == (2, 2, 2, 2, 2, 6)

    def test_truncation_below_excitation_number_is_rejected(self) -> None:
        with pytest.raises(ValidationError) as excinfo:
            ModelSpec(n_chargers=1, m_cells=1, ncut=1)
        assert excinfo.value.field == "ncut"

    def test_ratio_round_trip(self) -> None:
        spec = ModelSpec.from_ratio(1, 1, 20.0, lam=0.5)
        assert spec.R == pytest.approx(20.0)
        assert spec.Omega == pytest.approx(20.0 * 0.5 / sqrt(2.0))

    def test_zero_coupling_is_allowed(self) -> None:
        assert ModelSpec.from_ratio(1, 1, 0.0).Omega == 0.0

    def test_negative_ratio_is_rejected(self) -> None:
        with pytest.raises(ValidationError):
            ModelSpec.from_ratio(1, 1, -1.0)

    def test_regime(self) -> None:
        assert ModelSpec.from_ratio(1, 1, 20.0).is_strong_coupling()
        assert not ModelSpec.from_ratio(1, 1, 0.1).is_strong_coupling()

    def test_with_counts_resets_truncation(self) -> None:
        spec = ModelSpec.from_ratio(1, 1, 5.0).with_counts(n_chargers=3)
        assert spec.ncut == 4
        assert spec.R == pytest.approx(5.0)

    def test_register_indices(self) -> None:
        spec = ModelSpec(n_chargers=2, m_cells=2)
        assert spec.charger_indices == (0, 1)
        assert spec.battery_indices == (2, 3)
        assert spec.pseudomode_index == 4


class TestHilbertLayout:
    def test_rejects_trivial_factor(self) -> None:
        with pytest.raises(LayoutError):
            HilbertLayout(dims=(2, 1))

    def test_sub_layout_sorts_kept_factors(self) -> None:
        assert HilbertLayout(dims=(2, 3, 4)).sub_layout((2, 0)).dims == (2, 4)


class TestIntegratorConfig:
    def test_defaults_follow_coupling(self) -> None:
        spec = ModelSpec.from_ratio(1, 1, 20.0)
        cfg = IntegratorConfig.default_for(spec)
        assert cfg.dt == pytest.approx(1e-4)
        assert cfg.t_max == pytest.approx(3 * 2 * 3.141592653589793 / sqrt(1599.0))
        cfg.check_stability(spec)

    def test_weak_coupling_horizon(self) -> None:
        spec = ModelSpec.from_ratio(1, 1, 0.1)
        assert oscillation_period(spec) is None
        assert default_horizon(spec) == 30.0

    def test_horizon_grows_with_charger_count(self) -> None:
        spec = ModelSpec.from_ratio(2, 2, 40.0)
        period = 2 * 3.141592653589793 / sqrt(2 * 4 * 40.0**2 - 1)
        assert oscillation_period(spec) == pytest.approx(period)
        assert default_horizon(spec) == pytest.approx(6 * period)
        assert default_horizon(spec) > 0.2364

    def test_unstable_step_is_rejected(self) -> None:
        with pytest.raises(StepSizeError):
            IntegratorConfig(dt=0.1, t_max=1.0).check_stability(ModelSpec.from_ratio(1, 1, 20.0))

    def test_step_count(self) -> None:
        assert IntegratorConfig(dt=0.01, t_max=1.0).n_steps == 100

    @pytest.mark.parametrize("kwargs", [{"dt": 0.0}, {"t_max": -1.0}, {"record_stride": 0}])
    def test_invalid_fields(self, kwargs: dict[str, float]) -> None:
        values = {"dt": 0.01, "t_max": 1.0, "record_stride": 1} | kwargs
        with pytest.raises(ValidationError):
            IntegratorConfig(**values)  # type: ignore[arg-type]


class TestIntegratorPlan:
    def test_unset_step_follows_each_model(self) -> None:
        plan = IntegratorPlan(t_max=0.5)
        assert plan.resolve(ModelSpec.from_ratio(1, 1, 20.0)).dt == pytest.approx(1e-4)
        assert plan.resolve(ModelSpec.from_ratio(1, 1, 100.0)).dt == pytest.approx(2e-5)
        assert plan.resolve(ModelSpec.from_ratio(1, 1, 100.0)).t_max == 0.5

    def test_pinned_step_takes_the_model_horizon(self) -> None:
        spec = ModelSpec.from_ratio(1, 1, 0.1)
        cfg = IntegratorPlan(dt=0.01).resolve(spec)
        assert (cfg.dt, cfg.t_max, cfg.record_stride) == (0.01, 30.0, 1)

    def test_resolution_passes_concrete_configs_through(self) -> None:
        spec = ModelSpec.from_ratio(1, 1, 20.0)
        cfg = IntegratorConfig(dt=1e-4, t_max=0.2)
        assert resolve_integrator(cfg, spec) is cfg
        assert resolve_integrator(None, spec) == IntegratorConfig.default_for(spec)

    def test_description_names_the_rules(self) -> None:
        assert "0.002/max(1, R)" in IntegratorPlan(t_max=1.0).describe()
        assert "t_max=1" in IntegratorPlan(t_max=1.0).describe()

    def test_rejects_non_positive_step(self) -> None:
        with pytest.raises(ValidationError):
            IntegratorPlan(dt=0.0)


class TestScenarios:
    def test_scenario_i_needs_one_coefficient_per_charger(self) -> None:
        with pytest.raises(IncompatibleScenarioError):
            ScenarioI(c=(1.0,)).validate_for(ModelSpec(n_chargers=2))

    def test_scenario_i_resize_and_parameter(self) -> None:
        scen = ScenarioI(c=(0.3,)).resized(3).with_parameter(0.7)
        assert scen.c == (0.7, 0.7, 0.7)

    def test_bell_needs_two_chargers(self) -> None:
        with pytest.raises(IncompatibleScenarioError):
            BellPsiPlus(c1=0.5).validate_for(ModelSpec(n_chargers=1))

    @pytest.mark.parametrize("value", [-0.1, 1.1])
    def test_coefficients_in_unit_interval(self, value: float) -> None:
        with pytest.raises(ValidationError):
            ScenarioII(e1=value)


class TestSmallObjects:
    def test_sweep_grid_must_increase(self) -> None:
        with pytest.raises(ValidationError):
            SweepAxis(name="R", values=(1.0, 1.0))

    def test_unknown_axis(self) -> None:
        with pytest.raises(ValidationError):
            SweepAxis(name="omega", values=(1.0,))  # type: ignore[arg-type]

    def test_efficiency_cells(self) -> None:
        assert Efficiency.defined(0.5).to_cell() == "0.5"
        assert Efficiency.undefined("no energy spent").to_cell() == "undefined"

    def test_single_charger_regime_parameter(self) -> None:
        params = SingleChargerParams(c1=1.0, m_cells=1, R=0.5)
        assert params.coupling_parameter == pytest.approx(1.0)
        assert params.zeta_over_lambda == 0

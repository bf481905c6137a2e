"""Fixed-step integrator settings, expressed in units of 1/lambda."""

from dataclasses import dataclass
from math import pi, sqrt

from qbcharge.domain.exceptions import StepSizeError, ValidationError
from qbcharge.domain.models.model_spec import ModelSpec

WEAK_COUPLING_HORIZON = 30.0
STRONG_COUPLING_PERIODS = 3


def max_stable_step(spec: ModelSpec) -> float:
    """Largest RK4 step (lambda units) accepted for this model."""
    return 0.01 / max(1.0, spec.R * sqrt(spec.n_qubits))


def default_step(spec: ModelSpec) -> float:
    return 0.002 / max(1.0, spec.R)


def oscillation_period(spec: ModelSpec) -> float | None:
    """Single-excitation exchange period 2*pi/|zeta| in lambda units, None when overdamped."""
    discriminant = 2.0 * spec.n_qubits * spec.R**2 - 1.0
    if discriminant <= 0:
        return None
    return 2.0 * pi / sqrt(discriminant)


def default_horizon(spec: ModelSpec) -> float:
    """
    Three exchange periods per charger in the good-cavity regime, lambda*t = 30 otherwise.

    With several charger excitations a larger maximum can follow the first.
    """
    period = oscillation_period(spec)
    if period is None:
        return WEAK_COUPLING_HORIZON
    periods = STRONG_COUPLING_PERIODS * spec.n_chargers
    return min(periods * period, WEAK_COUPLING_HORIZON)


@dataclass(frozen=True)
class IntegratorConfig:
    """
    Time grid for the fixed-step Runge-Kutta integration.

    `dt` and `t_max` are dimensionless (lambda*t); every `record_stride`-th
    step is stored in the trajectory.
    """

    dt: float
    t_max: float
    record_stride: int = 1

    def __post_init__(self) -> None:
        if self.dt <= 0:
            raise ValidationError(f"dt must be positive, got {self.dt}", field="dt")
        if self.t_max <= 0:
            raise ValidationError(f"t_max must be positive, got {self.t_max}", field="t_max")
        if self.record_stride < 1:
            raise ValidationError(
                f"record_stride must be >= 1, got {self.record_stride}", field="record_stride"
            )

    @classmethod
    def default_for(
        cls, spec: ModelSpec, t_max: float | None = None, record_stride: int | None = None
    ) -> "IntegratorConfig":
        """
        Defaults for a model: dt = 0.002/max(1, R) and the charging horizon.

        The stride keeps roughly two thousand records per trajectory.
        """
        dt = default_step(spec)
        horizon = default_horizon(spec) if t_max is None else t_max
        if record_stride is None:
            record_stride = max(1, round(horizon / dt / 2000))
        return cls(dt=dt, t_max=horizon, record_stride=record_stride)

    @property
    def n_steps(self) -> int:
        return max(1, round(self.t_max / self.dt))

    def check_stability(self, spec: ModelSpec) -> None:
        limit = max_stable_step(spec)
        if self.dt > limit * (1.0 + 1e-12):
            raise StepSizeError(self.dt, limit)


@dataclass(frozen=True)
class IntegratorPlan:
    """
    Partial integrator settings resolved against each model they run on.

    Unset fields fall back to the model's own defaults, so a sweep over R
    keeps a stable step at every grid point unless `dt` is pinned.
    """

    dt: float | None = None
    t_max: float | None = None
    record_stride: int | None = None

    def __post_init__(self) -> None:
        if self.dt is not None and self.dt <= 0:
            raise ValidationError(f"dt must be positive, got {self.dt}", field="dt")
        if self.t_max is not None and self.t_max <= 0:
            raise ValidationError(f"t_max must be positive, got {self.t_max}", field="t_max")
        if self.record_stride is not None and self.record_stride < 1:
            raise ValidationError(
                f"record_stride must be >= 1, got {self.record_stride}", field="record_stride"
            )

    def resolve(self, spec: ModelSpec) -> IntegratorConfig:
        if self.dt is None:
            return IntegratorConfig.default_for(spec, self.t_max, self.record_stride)
        return IntegratorConfig(
            dt=self.dt,
            t_max=default_horizon(spec) if self.t_max is None else self.t_max,
            record_stride=self.record_stride or 1,
        )

    def describe(self) -> str:
        """Human-readable rule for the run header."""
        dt = f"{self.dt:g}" if self.dt is not None else "0.002/max(1, R)"
        t_max = f"{self.t_max:g}" if self.t_max is not None else "3 periods per charger, at most 30"
        stride = str(self.record_stride) if self.record_stride is not None else "~2000 records"
        return f"dt={dt}, t_max={t_max}, stride={stride}"


IntegratorSetup = IntegratorConfig | IntegratorPlan


def resolve_integrator(cfg: IntegratorSetup | None, spec: ModelSpec) -> IntegratorConfig:
    """Concrete time grid for one model."""
    if cfg is None:
        return IntegratorConfig.default_for(spec)
    if isinstance(cfg, IntegratorPlan):
        return cfg.resolve(spec)
    return cfg

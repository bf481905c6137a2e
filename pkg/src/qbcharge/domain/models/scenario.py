"""Initial-state recipes for the charger and battery qubits."""

from dataclasses import dataclass, replace
from typing import ClassVar, Literal

from qbcharge.domain.exceptions import IncompatibleScenarioError, ValidationError
from qbcharge.domain.models.model_spec import ModelSpec

ScenarioKind = Literal[
    "scenario-i",
    "scenario-ii",
    "bell-psi-plus",
    "bell-psi-minus",
    "bell-phi-plus",
    "bell-phi-minus",
    "mixed-charger",
    "mixed-battery",
]


def _check_unit_interval(value: float, name: str) -> None:
    if not 0.0 <= value <= 1.0:
        raise ValidationError(f"{name} must lie in [0, 1], got {value}", field=name)


@dataclass(frozen=True)
class ScenarioI:
    """Chargers in product superpositions sqrt(c_i)|1> + sqrt(1-c_i)|0>, battery empty."""

    kind: ClassVar[ScenarioKind] = "scenario-i"
    c: tuple[float, ...] = (1.0,)

    def __post_init__(self) -> None:
        object.__setattr__(self, "c", tuple(float(v) for v in self.c))
        if not self.c:
            raise ValidationError("Scenario I needs one coefficient per charger", field="c")
        for value in self.c:
            _check_unit_interval(value, "c")

    def validate_for(self, spec: ModelSpec) -> None:
        if len(self.c) != spec.n_chargers:
            raise IncompatibleScenarioError(
                self.kind, f"{len(self.c)} coefficients for {spec.n_chargers} chargers"
            )

    def with_parameter(self, value: float) -> "ScenarioI":
        """Set every charger coefficient to `value`."""
        return replace(self, c=(value,) * len(self.c))

    def resized(self, n_chargers: int) -> "ScenarioI":
        """Repeat the first coefficient for a new number of chargers."""
        return replace(self, c=(self.c[0],) * n_chargers)


@dataclass(frozen=True)
class ScenarioII:
    """Chargers fully excited, first battery cell in sqrt(e1)|1> + sqrt(1-e1)|0>."""

    kind: ClassVar[ScenarioKind] = "scenario-ii"
    e1: float = 0.0

    def __post_init__(self) -> None:
        _check_unit_interval(self.e1, "e1")

    def validate_for(self, spec: ModelSpec) -> None:
        return None

    def with_parameter(self, value: float) -> "ScenarioII":
        return replace(self, e1=value)


@dataclass(frozen=True)
class BellCharger:
    """Two-charger correlated state with weights c1 and 1-c1, battery in the ground state."""

    kind: ClassVar[ScenarioKind]
    excited_pair: ClassVar[tuple[int, int]]
    sign: ClassVar[float]
    c1: float = 0.5

    def __post_init__(self) -> None:
        _check_unit_interval(self.c1, "c1")

    def validate_for(self, spec: ModelSpec) -> None:
        if spec.n_chargers != 2:
            raise IncompatibleScenarioError(
                self.kind, f"Bell-like chargers need n_chargers=2, got {spec.n_chargers}"
            )

    def with_parameter(self, value: float) -> "BellCharger":
        return replace(self, c1=value)


@dataclass(frozen=True)
class BellPsiPlus(BellCharger):
    """sqrt(c1)|10> + sqrt(1-c1)|01>."""

    kind: ClassVar[ScenarioKind] = "bell-psi-plus"
    excited_pair: ClassVar[tuple[int, int]] = (0b10, 0b01)
    sign: ClassVar[float] = 1.0


@dataclass(frozen=True)
class BellPsiMinus(BellCharger):
    """sqrt(c1)|10> - sqrt(1-c1)|01>; decoherence-free at c1 = 0.5."""

    kind: ClassVar[ScenarioKind] = "bell-psi-minus"
    excited_pair: ClassVar[tuple[int, int]] = (0b10, 0b01)
    sign: ClassVar[float] = -1.0


@dataclass(frozen=True)
class BellPhiPlus(BellCharger):
    """sqrt(c1)|11> + sqrt(1-c1)|00>."""

    kind: ClassVar[ScenarioKind] = "bell-phi-plus"
    excited_pair: ClassVar[tuple[int, int]] = (0b11, 0b00)
    sign: ClassVar[float] = 1.0


@dataclass(frozen=True)
class BellPhiMinus(BellCharger):
    """sqrt(c1)|11> - sqrt(1-c1)|00>."""

    kind: ClassVar[ScenarioKind] = "bell-phi-minus"
    excited_pair: ClassVar[tuple[int, int]] = (0b11, 0b00)
    sign: ClassVar[float] = -1.0


@dataclass(frozen=True)
class MixedCharger:
    """Every charger in diag{c1 excited, 1-c1 ground}, battery in the ground state."""

    kind: ClassVar[ScenarioKind] = "mixed-charger"
    c1: float = 0.5

    def __post_init__(self) -> None:
        _check_unit_interval(self.c1, "c1")

    def validate_for(self, spec: ModelSpec) -> None:
        return None

    def with_parameter(self, value: float) -> "MixedCharger":
        return replace(self, c1=value)


@dataclass(frozen=True)
class MixedBattery:
    """Chargers fully excited, first battery cell in diag{e1 excited, 1-e1 ground}."""

    kind: ClassVar[ScenarioKind] = "mixed-battery"
    e1: float = 0.5

    def __post_init__(self) -> None:
        _check_unit_interval(self.e1, "e1")

    def validate_for(self, spec: ModelSpec) -> None:
        return None

    def with_parameter(self, value: float) -> "MixedBattery":
        return replace(self, e1=value)


ScenarioSpec = (
    ScenarioI
    | ScenarioII
    | BellPsiPlus
    | BellPsiMinus
    | BellPhiPlus
    | BellPhiMinus
    | MixedCharger
    | MixedBattery
)

SCENARIO_TYPES: dict[str, type[ScenarioSpec]] = {
    cls.kind: cls
    for cls in (
        ScenarioI,
        ScenarioII,
        BellPsiPlus,
        BellPsiMinus,
        BellPhiPlus,
        BellPhiMinus,
        MixedCharger,
        MixedBattery,
    )
}

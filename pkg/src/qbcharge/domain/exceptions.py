"""Domain-specific exceptions for qbcharge."""


class DomainError(Exception):
    """Base exception for all domain errors."""

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        self.code = code


class ValidationError(DomainError):
    """Raised when domain validation fails."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message, code="VALIDATION_ERROR")
        self.field = field


# Linear algebra exceptions
class LayoutError(ValidationError):
    """Raised when an operator does not match its tensor-factor layout."""

    def __init__(self, message: str):
        super().__init__(message, field="layout")
        self.code = "LAYOUT_ERROR"


class NonHermitianError(ValidationError):
    """Raised when a matrix expected to be Hermitian is not."""

    def __init__(self, deviation: float, tolerance: float):
        super().__init__(
            f"Matrix is not Hermitian: max |h - h^dagger| = {deviation:.3e} > {tolerance:.1e}",
            field="h",
        )
        self.code = "NON_HERMITIAN"
        self.deviation = deviation


class NonPhysicalStateError(ValidationError):
    """Raised when a density operator has non-unit trace or negative eigenvalues."""

    def __init__(self, message: str):
        super().__init__(message, field="rho")
        self.code = "NON_PHYSICAL_STATE"


# Model exceptions
class IncompatibleScenarioError(ValidationError):
    """Raised when an initial-state recipe does not fit the model register."""

    def __init__(self, scenario: str, message: str):
        super().__init__(
            f"Scenario {scenario} is incompatible with the model: {message}", field="scenario"
        )
        self.code = "INCOMPATIBLE_SCENARIO"
        self.scenario = scenario


# Integration exceptions
class NumericalError(DomainError):
    """Base exception for failures detected while integrating the dynamics."""


class StepSizeError(NumericalError):
    """Raised when the requested time step exceeds the stability bound."""

    def __init__(self, dt: float, limit: float):
        super().__init__(
            f"Time step dt={dt:g} exceeds the stability bound {limit:g} (lambda units)",
            code="STEP_SIZE",
        )
        self.dt = dt
        self.limit = limit


class PositivityBreachError(NumericalError):
    """Raised when a recorded state leaves the physical tolerance band."""

    def __init__(self, lam_t: float, subsystem: str, min_eigenvalue: float, trace_deviation: float):
        super().__init__(
            f"State of {subsystem} at lambda*t={lam_t:.6g} is unphysical: "
            f"min eigenvalue {min_eigenvalue:.3e}, trace deviation {trace_deviation:.3e}",
            code="POSITIVITY_BREACH",
        )
        self.lam_t = lam_t
        self.subsystem = subsystem
        self.min_eigenvalue = min_eigenvalue


class RoundoffError(NumericalError):
    """Raised when a quantity that must be real or non-negative misses by more than round-off."""

    def __init__(self, quantity: str, deviation: float):
        super().__init__(
            f"{quantity} deviates by {deviation:.3e}, beyond round-off", code="ROUNDOFF"
        )
        self.quantity = quantity
        self.deviation = deviation


class DegenerateRegimeError(NumericalError):
    """Raised at the critical coupling 2(m+1)R^2 = 1 where the closed form degenerates."""

    def __init__(self, m_cells: int, ratio: float):
        super().__init__(
            f"Critical coupling 2(m+1)R^2 = 1 reached for m={m_cells}, R={ratio:g}; "
            "charging time is undefined",
            code="DEGENERATE_REGIME",
        )


class BracketError(NumericalError):
    """Raised when a bisection bracket does not contain a crossing."""

    def __init__(self, lower: float, upper: float, value: bool):
        super().__init__(
            f"Predicate is {value} at both ends of [{lower:g}, {upper:g}]; no crossing to bisect",
            code="NO_SIGN_CHANGE",
        )
        self.lower = lower
        self.upper = upper


# Configuration and output exceptions
class ConfigError(ValidationError):
    """Raised when a run configuration cannot be parsed or validated."""

    def __init__(self, message: str, key: str | None = None):
        prefix = f"{key}: " if key else ""
        super().__init__(f"{prefix}{message}", field=key)
        self.code = "CONFIG_ERROR"
        self.key = key


class OutputError(DomainError):
    """Raised when a result file cannot be written."""

    def __init__(self, path: str, reason: str):
        super().__init__(f"Cannot write {path}: {reason}", code="OUTPUT_ERROR")
        self.path = path

"""Charging figures of merit extracted from a trajectory."""

from dataclasses import dataclass

from qbcharge.domain.models.ergotropy import ErgotropyBreakdown

UNDEFINED_TOKEN = "undefined"


@dataclass(frozen=True)
class LocalMaximum:
    """A refined local maximum of the battery ergotropy."""

    lam_t: float
    ergotropy: float


@dataclass(frozen=True)
class Efficiency:
    """
    Efficiency ratio, or an explicit undefined marker.

    Undefined results carry the reason instead of a NaN so sweeps serialize
    cleanly.
    """

    value: float | None
    reason: str | None = None

    @classmethod
    def defined(cls, value: float) -> "Efficiency":
        return cls(value=value)

    @classmethod
    def undefined(cls, reason: str) -> "Efficiency":
        return cls(value=None, reason=reason)

    @property
    def is_defined(self) -> bool:
        return self.value is not None

    def to_cell(self) -> str:
        if self.value is None:
            return UNDEFINED_TOKEN
        return f"{self.value:.12g}"


@dataclass(frozen=True)
class ChargingReport:
    """
    Charging time and charged ergotropy of one trajectory.

    `t_bar` is the global maximum of the battery ergotropy over the simulated
    horizon; `which_maximum` is its 1-based position among the local maxima.
    When the ergotropy has no interior maximum the best endpoint is reported
    and `no_interior_maximum` is set.
    """

    t_bar: float
    ergotropy_at_tbar: float
    breakdown_at_tbar: ErgotropyBreakdown
    local_maxima: tuple[LocalMaximum, ...]
    which_maximum: int | None
    initial_ergotropy: float
    no_interior_maximum: bool = False
    charger_first_minimum: float | None = None

    @property
    def charged_ergotropy(self) -> float:
        """Net ergotropy gain max{0, E_bar - E(0)}."""
        return max(0.0, self.ergotropy_at_tbar - self.initial_ergotropy)

    @property
    def flags(self) -> str:
        return "no_interior_maximum" if self.no_interior_maximum else "ok"

"""Parameters and results of the single-charger closed-form solution."""

import cmath
from dataclasses import dataclass

from qbcharge.domain.exceptions import ValidationError


@dataclass(frozen=True)
class SingleChargerParams:
    """
    One charger in sqrt(c1)|1> + sqrt(1-c1)|0> and an m-cell battery in its ground state.

    Times passed alongside these parameters are the dimensionless lambda*t,
    so the closed form depends on lambda only through R.
    """

    c1: float
    m_cells: int = 1
    R: float = 1.0
    lam: float = 1.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.c1 <= 1.0:
            raise ValidationError(f"c1 must lie in [0, 1], got {self.c1}", field="c1")
        if self.m_cells < 1:
            raise ValidationError(f"m_cells must be >= 1, got {self.m_cells}", field="m_cells")
        if self.R < 0:
            raise ValidationError(f"R must be non-negative, got {self.R}", field="R")
        if self.lam <= 0:
            raise ValidationError(f"lam must be positive, got {self.lam}", field="lam")

    @property
    def coupling_parameter(self) -> float:
        """2(m+1)R^2; above 1 the excitation exchange oscillates."""
        return 2.0 * (self.m_cells + 1) * self.R**2

    @property
    def zeta_over_lambda(self) -> complex:
        """Principal square root sqrt(1 - 2(m+1)R^2)."""
        return cmath.sqrt(complex(1.0 - self.coupling_parameter))

    @property
    def zeta(self) -> complex:
        return self.lam * self.zeta_over_lambda

    @property
    def Omega(self) -> float:
        return self.R * self.lam / 2**0.5


@dataclass(frozen=True)
class FiniteChargingTime:
    """Good-cavity charging time and the ergotropies reached there."""

    lam_t_bar: float
    ergotropy: float
    cell_ergotropy: float


@dataclass(frozen=True)
class InfiniteChargingTime:
    """Bad-cavity case: the maximum is only approached as t grows without bound."""

    limiting_ergotropy: float
    limiting_cell_ergotropy: float


ChargingTime = FiniteChargingTime | InfiniteChargingTime

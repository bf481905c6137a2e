"""
Closed-form charging of an m-cell battery by a single charger.

Every time argument is the dimensionless lambda*t and every energy is in
units of omega0 unless `omega0` is given. Functions accept scalars or numpy
arrays of times.
"""

from math import pi, sqrt

import numpy as np
import numpy.typing as npt

from qbcharge.domain.exceptions import DegenerateRegimeError, RoundoffError, ValidationError
from qbcharge.domain.models.oracle import (
    ChargingTime,
    FiniteChargingTime,
    InfiniteChargingTime,
    SingleChargerParams,
)
from qbcharge.domain.services.numkernel import ComplexMatrix

RealArray = npt.NDArray[np.float64]

IMAGINARY_TOLERANCE = 1e-12
CRITICAL_TOLERANCE = 1e-12


def _times(t: float | npt.ArrayLike) -> RealArray:
    tau = np.asarray(t, dtype=np.float64)
    if np.any(tau < 0):
        raise ValidationError("Times must be non-negative", field="t")
    return tau


def _shape_like(values: RealArray, t: float | RealArray) -> float | RealArray:
    return float(values) if np.ndim(t) == 0 else values


def _p(params: SingleChargerParams, tau: RealArray) -> RealArray:
    z = params.zeta_over_lambda
    damping = np.exp(-0.5 * tau)
    if abs(z) < CRITICAL_TOLERANCE:
        return damping * (1.0 + 0.5 * tau)
    # Re(z) lies in [0, 1], so both exponentials stay bounded for large times.
    value = 0.5 * (
        (1.0 + 1.0 / z) * np.exp(0.5 * (z - 1.0) * tau)
        + (1.0 - 1.0 / z) * np.exp(-0.5 * (z + 1.0) * tau)
    )
    residue = float(np.max(np.abs(np.imag(value)), initial=0.0))
    scale = max(1.0, float(np.max(np.abs(np.real(value)), initial=0.0)))
    if residue > IMAGINARY_TOLERANCE * scale:
        raise RoundoffError("imaginary part of p(t)", residue)
    return np.real(value).astype(np.float64)


def p_of_t(params: SingleChargerParams, t: float | RealArray) -> float | RealArray:
    """
    Survival amplitude of the initial charger excitation.

    p = exp(-lambda t/2) (cosh(zeta t/2) + (lambda/zeta) sinh(zeta t/2)), with the
    zeta -> 0 limit exp(-lambda t/2)(1 + lambda t/2).
    """
    return _shape_like(_p(params, _times(t)), t)


def nu_coefficients(
    params: SingleChargerParams, t: float | RealArray
) -> tuple[float | RealArray, float | RealArray]:
    """nu1 = (p + m)/(m + 1) and nu2 = (p - 1)/(m + 1)."""
    p = _p(params, _times(t))
    m = params.m_cells
    return _shape_like((p + m) / (m + 1), t), _shape_like((p - 1.0) / (m + 1), t)


def battery_state_analytic(params: SingleChargerParams, t: float) -> ComplexMatrix:
    """
    Reduced m-cell battery state at one time.

    rho = |xi><xi| + c1 (1 - m nu2^2) |0><0| with
    |xi> = sqrt(c1) nu2 sum_l |l> + sqrt(1 - c1) |0>, where |l> has cell l
    excited and every other cell in its ground state.
    """
    _, nu2 = nu_coefficients(params, float(t))
    nu2 = float(nu2)
    m = params.m_cells
    dim = 2**m
    xi = np.zeros(dim, dtype=np.complex128)
    xi[0] = sqrt(1.0 - params.c1)
    for cell in range(1, m + 1):
        xi[2 ** (m - cell)] = sqrt(params.c1) * nu2
    rho = np.outer(xi, xi.conj())
    rho[0, 0] += params.c1 * (1.0 - m * nu2**2)
    return rho


def _ergotropy_from_nu2(
    nu2_sq: RealArray | float, c1: float, cells: int, omega0: float
) -> RealArray | float:
    radicand = 1.0 + 4.0 * cells * c1**2 * nu2_sq * (cells * nu2_sq - 1.0)
    value = cells * c1 * nu2_sq + 0.5 * np.sqrt(np.maximum(radicand, 0.0)) - 0.5
    return omega0 * np.maximum(value, 0.0)


def ergotropy_mcell_analytic(
    params: SingleChargerParams, t: float | RealArray, omega0: float = 1.0
) -> float | RealArray:
    """Joint ergotropy m c1 nu2^2 + sqrt(1 + 4 m c1^2 nu2^2 (m nu2^2 - 1))/2 - 1/2."""
    _, nu2 = nu_coefficients(params, t)
    values = _ergotropy_from_nu2(np.square(nu2), params.c1, params.m_cells, omega0)
    return _shape_like(np.asarray(values, dtype=np.float64), t)


def ergotropy_cell_analytic(
    params: SingleChargerParams, t: float | RealArray, omega0: float = 1.0
) -> float | RealArray:
    """Ergotropy of any single cell; the same for every l."""
    _, nu2 = nu_coefficients(params, t)
    values = _ergotropy_from_nu2(np.square(nu2), params.c1, 1, omega0)
    return _shape_like(np.asarray(values, dtype=np.float64), t)


def charging_time_analytic(params: SingleChargerParams, omega0: float = 1.0) -> ChargingTime:
    """
    Charging time of the first |nu2| maximum.

    Args:
        params: Charger coefficient, cell count and coupling ratio.
        omega0: Energy unit of the returned ergotropies.

    Returns:
        FiniteChargingTime with lambda*t_bar = 2 pi/sqrt(2(m+1)R^2 - 1) in the
        good-cavity regime; InfiniteChargingTime with the nu2 = -1/(m+1) limit
        otherwise.

    Raises:
        DegenerateRegimeError: At the critical coupling 2(m+1)R^2 = 1.
    """
    excess = params.coupling_parameter - 1.0
    if abs(excess) < CRITICAL_TOLERANCE:
        raise DegenerateRegimeError(params.m_cells, params.R)
    if excess > 0:
        lam_t_bar = 2.0 * pi / sqrt(excess)
        return FiniteChargingTime(
            lam_t_bar=lam_t_bar,
            ergotropy=float(ergotropy_mcell_analytic(params, lam_t_bar, omega0)),
            cell_ergotropy=float(ergotropy_cell_analytic(params, lam_t_bar, omega0)),
        )
    nu2_sq = 1.0 / (params.m_cells + 1) ** 2
    return InfiniteChargingTime(
        limiting_ergotropy=float(_ergotropy_from_nu2(nu2_sq, params.c1, params.m_cells, omega0)),
        limiting_cell_ergotropy=float(_ergotropy_from_nu2(nu2_sq, params.c1, 1, omega0)),
    )


def charging_time_approx(params: SingleChargerParams) -> float:
    """Strong-coupling estimate lambda*t_bar ~ sqrt(2) pi/(sqrt(m+1) R)."""
    if params.R <= 0:
        raise ValidationError("Strong-coupling estimate needs R > 0", field="R")
    return sqrt(2.0) * pi / (sqrt(params.m_cells + 1) * params.R)


def charged_ergotropy_analytic(
    params: SingleChargerParams, omega0: float = 1.0
) -> tuple[float, float]:
    """Joint and per-cell ergotropy at the charging time (or in its limit)."""
    result = charging_time_analytic(params, omega0)
    if isinstance(result, FiniteChargingTime):
        return result.ergotropy, result.cell_ergotropy
    return result.limiting_ergotropy, result.limiting_cell_ergotropy

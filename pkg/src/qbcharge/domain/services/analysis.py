"""Figures of merit, parameter sweeps and threshold searches on trajectories."""

import logging
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from scipy.signal import argrelmax, argrelmin

from qbcharge.domain.exceptions import BracketError, DomainError, IncompatibleScenarioError
from qbcharge.domain.models.ergotropy import ENERGY_TOLERANCE, ErgotropyBreakdown
from qbcharge.domain.models.integrator import IntegratorSetup
from qbcharge.domain.models.model_spec import ModelSpec
from qbcharge.domain.models.report import ChargingReport, Efficiency, LocalMaximum
from qbcharge.domain.models.scenario import MixedBattery, ScenarioI, ScenarioII, ScenarioSpec
from qbcharge.domain.models.sweep import SweepAxis, SweepPoint, SweepResult
from qbcharge.domain.models.trajectory import Trajectory
from qbcharge.domain.services.dynamics import evolve
from qbcharge.domain.services.numkernel import EigenMethod

logger = logging.getLogger(__name__)

# Local maxima below this are integration noise on a vanishing ergotropy.
MAXIMUM_FLOOR = 1e-9
ENERGY_CHANGE_FLOOR = 1e-12
BISECTION_TOLERANCE = 1e-3

Predicate = Callable[[float], bool]


def _refine_peak(
    t: npt.NDArray[np.float64], e: npt.NDArray[np.float64], i: int
) -> LocalMaximum:
    """Vertex of the parabola through samples i-1, i, i+1."""
    x = t[i - 1 : i + 2] - t[i]
    a, b, c = np.polyfit(x, e[i - 1 : i + 2], 2)
    if a >= 0:
        return LocalMaximum(lam_t=float(t[i]), ergotropy=float(e[i]))
    vertex = float(np.clip(-b / (2.0 * a), x[0], x[2]))
    peak = float(np.polyval((a, b, c), vertex))
    return LocalMaximum(lam_t=float(t[i] + vertex), ergotropy=peak)


def _breakdown_at(traj: Trajectory, lam_t: float, total: float) -> ErgotropyBreakdown:
    times = traj.lam_t
    incoherent = float(np.interp(lam_t, times, traj.battery_incoherent))
    incoherent = min(max(incoherent, 0.0), total)
    return ErgotropyBreakdown(
        total=total,
        incoherent=incoherent,
        coherent=total - incoherent,
        mean_energy=float(np.interp(lam_t, times, traj.battery_energy)),
    )


def charging_report(traj: Trajectory) -> ChargingReport:
    """
    Locate the charging time and the charged ergotropy.

    Every strict local maximum of the battery ergotropy is refined by a
    quadratic through its neighbours; the largest one over the horizon is
    the charging time. Without an interior maximum the larger endpoint is
    reported and flagged.
    """
    times = traj.lam_t
    energies = traj.battery_ergotropy
    peaks = [
        _refine_peak(times, energies, int(i))
        for i in argrelmax(energies)[0]
        if energies[i] > MAXIMUM_FLOOR
    ]
    minima = argrelmin(traj.charger_ergotropy)[0]
    charger_first_minimum = float(times[minima[0]]) if minima.size else None

    if peaks:
        best = max(range(len(peaks)), key=lambda k: peaks[k].ergotropy)
        t_bar = peaks[best].lam_t
        value = max(peaks[best].ergotropy, 0.0)
        which: int | None = best + 1
        no_interior = False
    else:
        end = 0 if energies[0] >= energies[-1] else len(energies) - 1
        t_bar = float(times[end])
        value = float(energies[end])
        which = None
        no_interior = True

    report = ChargingReport(
        t_bar=t_bar,
        ergotropy_at_tbar=value,
        breakdown_at_tbar=_breakdown_at(traj, t_bar, value),
        local_maxima=tuple(peaks),
        which_maximum=which,
        initial_ergotropy=float(energies[0]),
        no_interior_maximum=no_interior,
        charger_first_minimum=charger_first_minimum,
    )
    logger.debug(
        "Charging report: t_bar=%.6g E_bar=%.6g maximum=%s of %d",
        report.t_bar,
        report.ergotropy_at_tbar,
        report.which_maximum,
        len(peaks),
    )
    return report


def efficiency_output(traj: Trajectory, report: ChargingReport) -> Efficiency:
    """Charged ergotropy per unit of energy the chargers gave away by t_bar."""
    energy = traj.charger_energy
    spent = float(energy[0] - np.interp(report.t_bar, traj.lam_t, energy))
    if spent <= ENERGY_CHANGE_FLOOR:
        return Efficiency.undefined("charger energy did not decrease")
    return Efficiency.defined(report.charged_ergotropy / spent)


def efficiency_input(traj: Trajectory, report: ChargingReport) -> Efficiency:
    """Charged ergotropy per unit of energy the battery gained by t_bar."""
    energy = traj.battery_energy
    gained = float(np.interp(report.t_bar, traj.lam_t, energy) - energy[0])
    if gained <= ENERGY_CHANGE_FLOOR:
        return Efficiency.undefined("battery energy did not increase")
    return Efficiency.defined(report.charged_ergotropy / gained)


def apply_axis(
    spec: ModelSpec, scen: ScenarioSpec, name: str, value: float
) -> tuple[ModelSpec, ScenarioSpec]:
    """Return the model and scenario with one swept parameter replaced."""
    match name:
        case "R":
            return spec.with_ratio(value), scen
        case "c1":
            if isinstance(scen, ScenarioII | MixedBattery):
                raise IncompatibleScenarioError(scen.kind, "no parameter c1 to sweep")
            return spec, scen.with_parameter(value)
        case "e1":
            if not isinstance(scen, ScenarioII | MixedBattery):
                raise IncompatibleScenarioError(scen.kind, "no parameter e1 to sweep")
            return spec, scen.with_parameter(value)
        case "n_chargers":
            n = int(round(value))
            resized = scen.resized(n) if isinstance(scen, ScenarioI) else scen
            return spec.with_counts(n_chargers=n), resized
        case "m_cells":
            return spec.with_counts(m_cells=int(round(value))), scen
    raise IncompatibleScenarioError(scen.kind, f"unknown sweep axis {name}")


@dataclass(frozen=True)
class _PointTask:
    value: float
    spec: ModelSpec
    scenario: ScenarioSpec
    config: IntegratorSetup | None
    eigensolver: EigenMethod


def _run_point(task: _PointTask) -> SweepPoint:
    try:
        traj = evolve(task.spec, task.scenario, task.config, task.eigensolver)
        report = charging_report(traj)
        return SweepPoint(
            value=task.value,
            report=report,
            output_efficiency=efficiency_output(traj, report),
            input_efficiency=efficiency_input(traj, report),
        )
    except DomainError as exc:
        logger.warning("Sweep point %g failed: %s", task.value, exc)
        failed = Efficiency.undefined(str(exc))
        return SweepPoint(
            value=task.value,
            report=None,
            output_efficiency=failed,
            input_efficiency=failed,
            error=exc.code or type(exc).__name__,
        )


def sweep(
    axis: SweepAxis,
    spec: ModelSpec,
    scen: ScenarioSpec,
    cfg: IntegratorSetup | None = None,
    workers: int = 1,
    eigensolver: EigenMethod = "lapack",
) -> SweepResult:
    """
    Evolve and report at every grid value of one axis.

    Points run on a thread pool and come back in grid order. A failing point
    is recorded with its error code instead of aborting the sweep; axis
    errors that make the whole grid meaningless still raise.
    """
    tasks = [
        _PointTask(value, *apply_axis(spec, scen, axis.name, value), cfg, eigensolver)
        for value in axis.values
    ]
    logger.info("Sweeping %s over %d points with %d workers", axis.name, len(tasks), workers)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        points = tuple(pool.map(_run_point, tasks))
    return SweepResult(axis=axis, points=points, spec=spec, scenario=scen, config=cfg)


def critical_parameter(
    predicate: Predicate, bracket: tuple[float, float], tolerance: float = BISECTION_TOLERANCE
) -> float:
    """
    Bisect for the parameter where `predicate` changes value.

    Args:
        predicate: Monotone-crossing test on the bracket.
        bracket: (lower, upper) parameter values.
        tolerance: Absolute width at which bisection stops.

    Returns:
        Midpoint of the final bracket.

    Raises:
        BracketError: If the predicate agrees at both ends.
    """
    lower, upper = sorted(bracket)
    at_lower = predicate(lower)
    at_upper = predicate(upper)
    if at_lower == at_upper:
        raise BracketError(lower, upper, at_lower)
    while upper - lower > tolerance:
        middle = 0.5 * (lower + upper)
        at_middle = predicate(middle)
        logger.debug("Bisection step %.6g -> %s", middle, at_middle)
        if at_middle == at_lower:
            lower = middle
        else:
            upper = middle
    return 0.5 * (lower + upper)


def exceeds_initial_ergotropy(
    spec: ModelSpec,
    scen: ScenarioSpec,
    axis: str = "e1",
    cfg: IntegratorSetup | None = None,
    eigensolver: EigenMethod = "lapack",
) -> Predicate:
    """Predicate: the charged maximum beats the battery's initial ergotropy."""

    def predicate(value: float) -> bool:
        point_spec, point_scen = apply_axis(spec, scen, axis, value)
        report = charging_report(evolve(point_spec, point_scen, cfg, eigensolver))
        return report.ergotropy_at_tbar > report.initial_ergotropy + ENERGY_TOLERANCE

    return predicate


def more_chargers_win(
    spec: ModelSpec,
    n_chargers: tuple[int, int] = (2, 1),
    cfg: IntegratorSetup | None = None,
    eigensolver: EigenMethod = "lapack",
) -> Predicate:
    """
    Predicate on R: fully excited chargers of the first count charge more than the second.

    The battery starts empty in both runs.
    """
    many, few = n_chargers

    def charged(n: int, R: float) -> float:
        point_spec = spec.with_counts(n_chargers=n).with_ratio(R)
        traj = evolve(point_spec, ScenarioI(c=(1.0,) * n), cfg, eigensolver)
        return charging_report(traj).ergotropy_at_tbar

    def predicate(R: float) -> bool:
        return charged(many, R) > charged(few, R)

    return predicate

"""Data Transfer Objects for application layer."""

from dataclasses import dataclass

from qbcharge.domain.models import ChargingReport, Efficiency, SweepResult, Trajectory

TRAJECTORY_COLUMNS = (
    "lambda_t",
    "E_batt",
    "E_i_batt",
    "E_c_batt",
    "meanE_batt",
    "erg_charger",
    "meanE_charger",
    "n_pseudomode",
)
SWEEP_COLUMNS = (
    "t_bar",
    "E_bar",
    "E_i_bar",
    "E_c_bar",
    "P_eff",
    "Pcal_eff",
    "which_maximum",
    "flags",
)


@dataclass(frozen=True)
class TrajectoryRowDTO:
    """One recorded step; energies in units of omega0."""

    lambda_t: float
    E_batt: float
    E_i_batt: float
    E_c_batt: float
    meanE_batt: float
    erg_charger: float
    meanE_charger: float
    n_pseudomode: float


@dataclass(frozen=True)
class TrajectoryDTO:
    """Recorded curve, labelled by its grid value when part of a family."""

    rows: tuple[TrajectoryRowDTO, ...]
    axis: str | None = None
    value: float | None = None


@dataclass(frozen=True)
class ReportDTO:
    """Charging report with both efficiencies."""

    t_bar: float
    E_bar: float
    E_i_bar: float
    E_c_bar: float
    P_eff: str
    Pcal_eff: str
    which_maximum: int | None
    flags: str
    initial_ergotropy: float
    charger_first_minimum: float | None


@dataclass(frozen=True)
class SweepRowDTO:
    """One grid point; failed points keep the value and carry their error in `flags`."""

    value: float
    report: ReportDTO | None
    flags: str


@dataclass(frozen=True)
class SweepDTO:
    axis: str
    rows: tuple[SweepRowDTO, ...]


@dataclass(frozen=True)
class CriticalDTO:
    """Bisection outcome on one axis."""

    axis: str
    value: float
    lower: float
    upper: float
    tolerance: float
    predicate: str


def trajectory_to_dto(
    traj: Trajectory, axis: str | None = None, value: float | None = None
) -> TrajectoryDTO:
    rows = tuple(
        TrajectoryRowDTO(
            lambda_t=record.lam_t,
            E_batt=record.battery.total,
            E_i_batt=record.battery.incoherent,
            E_c_batt=record.battery.coherent,
            meanE_batt=record.battery.mean_energy,
            erg_charger=record.charger.total,
            meanE_charger=record.charger.mean_energy,
            n_pseudomode=record.pseudomode_occupation,
        )
        for record in traj.records
    )
    return TrajectoryDTO(rows=rows, axis=axis, value=value)


def report_to_dto(report: ChargingReport, output: Efficiency, input_: Efficiency) -> ReportDTO:
    breakdown = report.breakdown_at_tbar
    return ReportDTO(
        t_bar=report.t_bar,
        E_bar=report.ergotropy_at_tbar,
        E_i_bar=breakdown.incoherent,
        E_c_bar=breakdown.coherent,
        P_eff=output.to_cell(),
        Pcal_eff=input_.to_cell(),
        which_maximum=report.which_maximum,
        flags=report.flags,
        initial_ergotropy=report.initial_ergotropy,
        charger_first_minimum=report.charger_first_minimum,
    )


def sweep_to_dto(result: SweepResult) -> SweepDTO:
    rows = tuple(
        SweepRowDTO(
            value=point.value,
            report=(
                None
                if point.report is None
                else report_to_dto(point.report, point.output_efficiency, point.input_efficiency)
            ),
            flags=point.flags,
        )
        for point in result.points
    )
    return SweepDTO(axis=result.axis.name, rows=rows)

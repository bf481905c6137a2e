"""Numerical services: linear algebra, ergotropy, dynamics, closed form and analysis."""

from qbcharge.domain.services.analysis import (
    apply_axis,
    charging_report,
    critical_parameter,
    efficiency_input,
    efficiency_output,
    exceeds_initial_ergotropy,
    more_chargers_win,
    sweep,
)
from qbcharge.domain.services.dynamics import (
    ChargingSimulator,
    ergotropy_invariance_under_rotating_frame,
    evolve,
    lindblad_rhs,
)
from qbcharge.domain.services.ergotropy import (
    coherent_ergotropy,
    dephase,
    ergotropy,
    ergotropy_breakdown,
    incoherent_ergotropy,
    mean_energy,
    passive_state,
    qubit_ergotropy,
)
from qbcharge.domain.services.oracle import (
    battery_state_analytic,
    charged_ergotropy_analytic,
    charging_time_analytic,
    charging_time_approx,
    ergotropy_cell_analytic,
    ergotropy_mcell_analytic,
    nu_coefficients,
    p_of_t,
)

__all__ = [
    # Ergotropy
    "mean_energy",
    "ergotropy",
    "passive_state",
    "dephase",
    "incoherent_ergotropy",
    "coherent_ergotropy",
    "ergotropy_breakdown",
    "qubit_ergotropy",
    # Dynamics
    "lindblad_rhs",
    "ChargingSimulator",
    "evolve",
    "ergotropy_invariance_under_rotating_frame",
    # Closed form
    "p_of_t",
    "nu_coefficients",
    "battery_state_analytic",
    "ergotropy_mcell_analytic",
    "ergotropy_cell_analytic",
    "charging_time_analytic",
    "charging_time_approx",
    "charged_ergotropy_analytic",
    # Analysis
    "charging_report",
    "efficiency_output",
    "efficiency_input",
    "apply_axis",
    "sweep",
    "critical_parameter",
    "exceeds_initial_ergotropy",
    "more_chargers_win",
]

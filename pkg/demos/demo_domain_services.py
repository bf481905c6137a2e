#!/usr/bin/env python3
"""Demo: ergotropy, closed-form charging and the master-equation simulator."""
import sys
from pathlib import Path

import numpy as np
from rich.console import Console
from rich.table import Table

sys.path.append(str(Path(__file__).parent.parent / "src"))

from qbcharge.domain.models import (
    FiniteChargingTime,
    ModelSpec,
    ScenarioI,
    ScenarioII,
    SingleChargerParams,
)
from qbcharge.domain.services import (
    charged_ergotropy_analytic,
    charging_report,
    charging_time_analytic,
    ergotropy_breakdown,
    evolve,
)
from qbcharge.domain.services.model import number_hamiltonian

console = Console()


def demo_ergotropy():
    console.print("\n[bold]1. Ergotropy of single qubits[/bold]")
    table = Table()
    table.add_column("State", style="cyan")
    table.add_column("Energy")
    table.add_column("Total")
    table.add_column("Incoherent")
    table.add_column("Coherent")
    h = number_hamiltonian(1)
    states = {
        "|1>": np.diag([0.0, 1.0]),
        "|+>": np.full((2, 2), 0.5),
        "diag(0.3, 0.7)": np.diag([0.3, 0.7]),
    }
    for label, rho in states.items():
        b = ergotropy_breakdown(rho, h)
        table.add_row(
            label, f"{b.mean_energy:.3f}", f"{b.total:.3f}", f"{b.incoherent:.3f}", f"{b.coherent:.3f}"
        )
    console.print(table)


def demo_closed_form():
    console.print("\n[bold]2. Closed-form charging time of one charger[/bold]")
    table = Table()
    table.add_column("R", style="cyan")
    table.add_column("m")
    table.add_column("lambda t_bar")
    table.add_column("E_bar (joint)")
    table.add_column("E_bar (per cell)")
    for R in (0.1, 10.0, 20.0, 100.0):
        for m in (1, 3):
            params = SingleChargerParams(c1=1.0, m_cells=m, R=R)
            result = charging_time_analytic(params)
            joint, cell = charged_ergotropy_analytic(params)
            finite = isinstance(result, FiniteChargingTime)
            t_bar = f"{result.lam_t_bar:.5f}" if finite else "∞"
            table.add_row(f"{R:g}", str(m), t_bar, f"{joint:.4f}", f"{cell:.4f}")
    console.print(table)


def demo_simulation():
    console.print("\n[bold]3. Simulated charging reports[/bold]")
    table = Table()
    table.add_column("Scenario", style="cyan")
    table.add_column("t_bar")
    table.add_column("E_bar")
    table.add_column("E(0)")
    table.add_column("flags")
    spec = ModelSpec.from_ratio(1, 1, 20.0)
    with console.status("Integrating..."):
        for scenario in (ScenarioI(c=(1.0,)), ScenarioI(c=(0.6,)), ScenarioII(e1=0.5)):
            report = charging_report(evolve(spec, scenario))
            table.add_row(
                str(scenario),
                f"{report.t_bar:.5f}",
                f"{report.ergotropy_at_tbar:.4f}",
                f"{report.initial_ergotropy:.4f}",
                report.flags,
            )
    console.print(table)


def main():
    console.print("\n[bold blue]🔋 qbcharge Domain Services Demo[/bold blue]")
    demo_ergotropy()
    demo_closed_form()
    demo_simulation()
    return True


if __name__ == "__main__":
    main()

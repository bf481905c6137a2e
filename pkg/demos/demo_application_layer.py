#!/usr/bin/env python3
"""Demo: running commands through the application service."""
import asyncio
import sys
from pathlib import Path

from rich.console import Console
from rich.table import Table

sys.path.append(str(Path(__file__).parent.parent / "src"))

from qbcharge.application import ApplicationService, command_for
from qbcharge.application.commands import SweepCommand
from qbcharge.config import get_settings, parse_config
from qbcharge.domain.models import ModelSpec, ScenarioI, SweepAxis

console = Console()


async def demo_application_layer() -> None:
    """Dispatch a report and a small sweep through the command bus."""
    console.print("\n[bold blue]🎭 Application Layer Demo - Command Bus[/bold blue]")
    service = ApplicationService(get_settings())

    console.print("\n📋 1. Report from a run configuration")
    config = parse_config(overrides={"mode": "report", "model": {"R": 10.0}})
    report = await service.commands.execute(command_for(config))
    console.print(f"   ✅ t_bar={report.t_bar:.5f}  E_bar={report.E_bar:.4f}  flags={report.flags}")

    console.print("\n📋 2. Charger-count sweep")
    command = SweepCommand(
        axis=SweepAxis(name="n_chargers", values=(1, 2, 3)),
        spec=ModelSpec.from_ratio(1, 1, 10.0),
        scenario=ScenarioI(c=(1.0,)),
    )
    with console.status("Sweeping..."):
        result = await service.commands.execute(command)
    table = Table()
    table.add_column(result.axis, style="cyan")
    table.add_column("t_bar")
    table.add_column("E_bar")
    table.add_column("P_eff")
    table.add_column("flags")
    for row in result.rows:
        if row.report is None:
            table.add_row(f"{row.value:g}", "-", "-", "-", row.flags)
            continue
        table.add_row(
            f"{row.value:g}",
            f"{row.report.t_bar:.5f}",
            f"{row.report.E_bar:.4f}",
            row.report.P_eff,
            row.flags,
        )
    console.print(table)


if __name__ == "__main__":
    asyncio.run(demo_application_layer())

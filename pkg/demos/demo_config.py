#!/usr/bin/env python3
"""Demo: Configuration System"""
import sys
from pathlib import Path

from rich.console import Console
from rich.panel import Panel
from rich.syntax import Syntax
from rich.table import Table

# Add project root to path
sys.path.append(str(Path(__file__).parent.parent / "src"))

from qbcharge.config import PRESETS, get_settings, parse_config
from qbcharge.domain.exceptions import ConfigError

console = Console()


def demo_config():
    """Demonstrate settings, presets and run configuration validation."""
    console.print("\n[bold blue]⚙️  qbcharge Configuration Demo[/bold blue]\n")

    settings = get_settings()

    console.print("📁 Configuration Sources (later wins):")
    console.print("   • Preset (--preset)")
    console.print("   • TOML/JSON file (--config)")
    console.print("   • Command-line flags")
    console.print("   • QBCHARGE_* environment variables for process settings\n")

    settings_table = Table(title="Process Settings")
    settings_table.add_column("Setting", style="cyan")
    settings_table.add_column("Value", style="green")
    settings_table.add_column("Type", style="dim")
    settings_table.add_row("Project Name", settings.project_name, "str")
    settings_table.add_row("Debug Mode", str(settings.debug), "bool")
    settings_table.add_row("Sweep Workers", str(settings.sweep_workers), "int")
    settings_table.add_row("Eigensolver", settings.eigensolver, "lapack | jacobi")
    settings_table.add_row("Log Level", settings.log_level, "str")
    console.print(settings_table)

    preset_table = Table(title="Presets")
    preset_table.add_column("Name", style="cyan")
    preset_table.add_column("Mode", style="green")
    preset_table.add_column("Model")
    preset_table.add_column("Scenario")
    for name in sorted(PRESETS):
        config = parse_config(preset=name)
        model = config.model
        preset_table.add_row(
            name,
            config.mode,
            f"n={model.n_chargers} m={model.m_cells} R={model.R:g}",
            config.scenario.kind,
        )
    console.print(preset_table)

    console.print("\n🛡️  Validation:")
    for overrides in (
        {"model": {"bogus": 1}},
        {"model": {"R": -1.0}},
        {"mode": "sweep", "sweep": {"axis": "R"}},
    ):
        try:
            parse_config(overrides=overrides)
        except ConfigError as exc:
            console.print(f"   ✓ [red]{exc.code}[/red] {exc}", markup=False)

    console.print("\n📝 Example Usage:")
    code = '''from qbcharge.config import parse_config

config = parse_config(preset="fig4", overrides={"model": {"m_cells": 2}})
spec, scenario, integrator = config.to_domain()
print(spec.R, scenario.kind, config.sweep.grid)'''
    syntax = Syntax(code, "python", theme="monokai", line_numbers=True)
    console.print(Panel(syntax, title="Configuration Usage", border_style="blue"))

    console.print("\n🔧 Environment Variable Override:")
    console.print("   [dim]export QBCHARGE_SWEEP_WORKERS=4[/dim]")
    console.print("   [dim]export QBCHARGE_EIGENSOLVER=jacobi[/dim]")

    return True


if __name__ == "__main__":
    demo_config()

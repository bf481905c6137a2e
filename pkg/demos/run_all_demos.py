#!/usr/bin/env python3
"""Run all qbcharge demos in sequence."""
import subprocess
import sys
from pathlib import Path

from rich.console import Console
from rich.panel import Panel

console = Console()

# List of demos to run
DEMOS = [
    ("Configuration System", "demo_config.py"),
    ("Domain Services", "demo_domain_services.py"),
    ("Application Layer", "demo_application_layer.py"),
]


def run_all_demos():
    """Run all demos in sequence."""
    console.print(Panel(
        "[bold blue]🔋 qbcharge Demo Suite[/bold blue]\n\n"
        "This will demonstrate:\n"
        "• Settings, presets and run configuration validation\n"
        "• Ergotropy, the closed form and the simulator\n"
        "• Commands dispatched through the application service",
        border_style="blue"
    ))

    for i, (name, script) in enumerate(DEMOS, 1):
        console.print(f"\n[bold cyan]━━━ Demo {i}/{len(DEMOS)}: {name} ━━━[/bold cyan]")
        demo_path = Path(__file__).parent / script
        result = subprocess.run([sys.executable, str(demo_path)], capture_output=False)
        if result.returncode != 0:
            console.print(f"[red]❌ Demo failed: {name}[/red]")

        if i < len(DEMOS):
            console.print("\n[dim]Press Enter to continue to next demo...[/dim]")
            input()

    console.print(Panel(
        "[bold green]✅ Demo Suite Complete![/bold green]\n\n"
        "[dim]Next: qbcharge --preset fig4[/dim]",
        border_style="green"
    ))


if __name__ == "__main__":
    try:
        run_all_demos()
    except KeyboardInterrupt:
        console.print("\n[yellow]Demo suite interrupted.[/yellow]")
        sys.exit(1)

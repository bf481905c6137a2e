"""
Named run configurations that reproduce the charging figures.

Each preset is a partial RunConfig document; files and command-line flags are
merged on top of it.
"""

from copy import deepcopy
from typing import Any

from qbcharge.domain.exceptions import ConfigError

R_GRID = [0.1, 1.0, 2.0, 3.0, 4.0, 5.0, 10.0, 20.0, 50.0, 100.0]
FRACTION_GRID = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0]
E1_GRID = [round(0.05 * k, 2) for k in range(20)]

PRESETS: dict[str, dict[str, Any]] = {
    # Single charger, good cavity: E(t) families in c1 and e1
    "fig2-left": {
        "mode": "trajectory",
        "model": {"n_chargers": 1, "m_cells": 1, "R": 20.0},
        "scenario": {"kind": "scenario-i", "c": [1.0]},
        "sweep": {"axis": "c1", "grid": [0.4, 0.6, 0.8, 1.0]},
    },
    "fig2-right": {
        "mode": "trajectory",
        "model": {"n_chargers": 1, "m_cells": 1, "R": 20.0},
        "scenario": {"kind": "scenario-ii", "e1": 0.0},
        "sweep": {"axis": "e1", "grid": [0.0, 0.2, 0.5, 0.8]},
    },
    # Bad cavity with one to three chargers
    "fig3-left": {
        "mode": "trajectory",
        "model": {"n_chargers": 1, "m_cells": 1, "R": 0.1},
        "scenario": {"kind": "scenario-i", "c": [1.0]},
        "integrator": {"t_max": 30.0},
        "sweep": {"axis": "n_chargers", "grid": [1, 2, 3]},
    },
    "fig3-right": {
        "mode": "trajectory",
        "model": {"n_chargers": 1, "m_cells": 1, "R": 0.1},
        "scenario": {"kind": "scenario-ii", "e1": 0.5},
        "integrator": {"t_max": 30.0},
        "sweep": {"axis": "n_chargers", "grid": [1, 2, 3]},
    },
    # Charging time and charged ergotropy against R, c1 and e1
    "fig4": {
        "mode": "sweep",
        "model": {"n_chargers": 1, "m_cells": 1},
        "scenario": {"kind": "scenario-i", "c": [1.0]},
        "sweep": {"axis": "R", "grid": R_GRID},
    },
    "fig5": {
        "mode": "sweep",
        "model": {"n_chargers": 1, "m_cells": 1, "R": 100.0},
        "scenario": {"kind": "scenario-i", "c": [1.0]},
        "sweep": {"axis": "c1", "grid": FRACTION_GRID},
    },
    "fig6": {
        "mode": "sweep",
        "model": {"n_chargers": 1, "m_cells": 1, "R": 100.0},
        "scenario": {"kind": "scenario-ii", "e1": 0.0},
        "sweep": {"axis": "e1", "grid": E1_GRID},
    },
    # Two chargers
    "fig7": {
        "mode": "trajectory",
        "model": {"n_chargers": 2, "m_cells": 1, "R": 20.0},
        "scenario": {"kind": "scenario-i", "c": [1.0, 1.0]},
        "sweep": {"axis": "c1", "grid": [0.4, 0.6, 0.8, 1.0]},
    },
    "fig8": {
        "mode": "sweep",
        "model": {"n_chargers": 2, "m_cells": 1},
        "scenario": {"kind": "scenario-i", "c": [1.0, 1.0]},
        "sweep": {"axis": "R", "grid": R_GRID},
    },
    "fig9": {
        "mode": "sweep",
        "model": {"n_chargers": 2, "m_cells": 1, "R": 10.0},
        "scenario": {"kind": "bell-psi-plus", "c1": 0.5},
        "sweep": {"axis": "c1", "grid": FRACTION_GRID},
    },
    "fig9-product": {
        "mode": "sweep",
        "model": {"n_chargers": 2, "m_cells": 1, "R": 10.0},
        "scenario": {"kind": "scenario-i", "c": [0.5, 0.5]},
        "sweep": {"axis": "c1", "grid": FRACTION_GRID},
    },
    "fig9-strong": {
        "mode": "sweep",
        "model": {"n_chargers": 2, "m_cells": 1, "R": 30.0},
        "scenario": {"kind": "bell-psi-plus", "c1": 0.5},
        "sweep": {"axis": "c1", "grid": FRACTION_GRID},
    },
    "fig9-strong-product": {
        "mode": "sweep",
        "model": {"n_chargers": 2, "m_cells": 1, "R": 30.0},
        "scenario": {"kind": "scenario-i", "c": [0.5, 0.5]},
        "sweep": {"axis": "c1", "grid": FRACTION_GRID},
    },
    # Number of chargers and charging efficiency
    "fig10": {
        "mode": "sweep",
        "model": {"n_chargers": 1, "m_cells": 1, "R": 10.0},
        "scenario": {"kind": "scenario-i", "c": [1.0]},
        "sweep": {"axis": "n_chargers", "grid": [1, 2, 3, 4]},
    },
    "fig11": {
        "mode": "sweep",
        "model": {"n_chargers": 2, "m_cells": 1},
        "scenario": {"kind": "scenario-i", "c": [1.0, 1.0]},
        "sweep": {"axis": "R", "grid": [0.1, 1.0, 2.0, 3.0, 4.0, 5.0, 10.0, 20.0, 50.0]},
    },
    # Multi-cell battery
    "fig12": {
        "mode": "sweep",
        "model": {"n_chargers": 1, "m_cells": 1, "R": 20.0},
        "scenario": {"kind": "scenario-i", "c": [0.8]},
        "sweep": {"axis": "m_cells", "grid": [1, 2, 3, 4]},
    },
    # Threshold searches
    "critical-e1-r2": {
        "mode": "critical",
        "model": {"n_chargers": 1, "m_cells": 1, "R": 2.0},
        "scenario": {"kind": "scenario-ii", "e1": 0.0},
        "critical": {"axis": "e1", "lower": 0.0, "upper": 0.5, "predicate": "exceeds-initial"},
    },
    "critical-e1-r20": {
        "mode": "critical",
        "model": {"n_chargers": 1, "m_cells": 1, "R": 20.0},
        "scenario": {"kind": "scenario-ii", "e1": 0.0},
        "critical": {"axis": "e1", "lower": 0.0, "upper": 1.0, "predicate": "exceeds-initial"},
    },
    "critical-e1-r100": {
        "mode": "critical",
        "model": {"n_chargers": 1, "m_cells": 1, "R": 100.0},
        "scenario": {"kind": "scenario-ii", "e1": 0.0},
        "critical": {"axis": "e1", "lower": 0.5, "upper": 1.0, "predicate": "exceeds-initial"},
    },
    "critical-n2-vs-n1": {
        "mode": "critical",
        "model": {"n_chargers": 1, "m_cells": 1, "R": 10.0},
        "scenario": {"kind": "scenario-i", "c": [1.0]},
        "critical": {"axis": "R", "lower": 5.0, "upper": 20.0, "predicate": "more-chargers"},
    },
}


def get_preset(name: str) -> dict[str, Any]:
    """Return a deep copy of a preset document."""
    try:
        return deepcopy(PRESETS[name])
    except KeyError:
        known = ", ".join(sorted(PRESETS))
        raise ConfigError(f"Unknown preset '{name}' (known: {known})", key="preset") from None

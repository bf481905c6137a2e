"""Random states and hand-built trajectories."""

from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from qbcharge.domain.models import (
    ErgotropyBreakdown,
    IntegratorConfig,
    ModelSpec,
    ScenarioI,
    Trajectory,
    TrajectoryRecord,
)


def random_density_matrix(
    rng: np.random.Generator, dim: int, rank: int | None = None
) -> npt.NDArray[np.complex128]:
    """Normalised G G^dagger with complex Gaussian G of shape (dim, rank)."""
    cols = dim if rank is None else rank
    g = rng.normal(size=(dim, cols)) + 1j * rng.normal(size=(dim, cols))
    rho = g @ g.conj().T
    return rho / np.trace(rho)


def random_hermitian(rng: np.random.Generator, dim: int) -> npt.NDArray[np.complex128]:
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return 0.5 * (g + g.conj().T)


def random_unitary(rng: np.random.Generator, dim: int) -> npt.NDArray[np.complex128]:
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def synthetic_trajectory(
    times: Sequence[float],
    battery_ergotropy: Sequence[float],
    battery_energy: Sequence[float] | None = None,
    charger_energy: Sequence[float] | None = None,
    charger_ergotropy: Sequence[float] | None = None,
) -> Trajectory:
    """
    Trajectory carrying only observable records.

    Battery ergotropy is reported as fully coherent; unspecified energies
    follow the ergotropy (battery) or stay at one (charger).
    """
    n = len(times)
    e_ba = list(battery_energy) if battery_energy is not None else list(battery_ergotropy)
    e_ch = list(charger_energy) if charger_energy is not None else [1.0] * n
    erg_ch = list(charger_ergotropy) if charger_ergotropy is not None else e_ch
    records = tuple(
        TrajectoryRecord(
            lam_t=float(t),
            battery=ErgotropyBreakdown(
                total=float(e), incoherent=0.0, coherent=float(e), mean_energy=float(eb)
            ),
            charger=ErgotropyBreakdown(
                total=float(ec), incoherent=float(ec), coherent=0.0, mean_energy=float(en)
            ),
            pseudomode_occupation=0.0,
            excitation_number=1.0,
        )
        for t, e, eb, ec, en in zip(times, battery_ergotropy, e_ba, erg_ch, e_ch, strict=True)
    )
    spec = ModelSpec.from_ratio(1, 1, 20.0)
    return Trajectory(
        spec=spec,
        scenario=ScenarioI(),
        config=IntegratorConfig(dt=float(times[1] - times[0]), t_max=float(times[-1])),
        times=tuple(float(t) for t in times),
        battery_states=(),
        charger_states=(),
        records=records,
    )

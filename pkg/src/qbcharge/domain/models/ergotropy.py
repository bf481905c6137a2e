"""Ergotropy breakdown value object."""

from dataclasses import dataclass

ENERGY_TOLERANCE = 1e-10


@dataclass(frozen=True)
class ErgotropyBreakdown:
    """
    Extractable work of a state and its incoherent/coherent split.

    All values are energies in units of omega0. `total` equals
    `incoherent + coherent`, and both never exceed the mean energy above
    the ground level.
    """

    total: float
    incoherent: float
    coherent: float
    mean_energy: float

    def __post_init__(self) -> None:
        if abs(self.total - self.incoherent - self.coherent) > ENERGY_TOLERANCE:
            raise ValueError(
                f"Ergotropy split is inconsistent: {self.total} != "
                f"{self.incoherent} + {self.coherent}"
            )
        if self.incoherent < -ENERGY_TOLERANCE or self.incoherent > self.total + ENERGY_TOLERANCE:
            raise ValueError(
                f"Incoherent ergotropy {self.incoherent} outside [0, {self.total}]"
            )

    @classmethod
    def zero(cls, mean_energy: float = 0.0) -> "ErgotropyBreakdown":
        return cls(total=0.0, incoherent=0.0, coherent=0.0, mean_energy=mean_energy)

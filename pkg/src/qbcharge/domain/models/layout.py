"""Tensor-factor layout of the charger, battery and pseudomode register."""

from dataclasses import dataclass
from math import prod

from qbcharge.domain.exceptions import LayoutError


@dataclass(frozen=True)
class HilbertLayout:
    """
    Ordered subsystem dimensions of a composite Hilbert space.

    The canonical ordering is charger qubits 1..n, battery cells 1..m and,
    when present, the pseudomode as the last factor. Factor 0 is the most
    significant digit of a basis index.
    """

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.dims:
            raise LayoutError("Layout needs at least one factor")
        if any(d < 2 for d in self.dims):
            raise LayoutError(f"Every factor dimension must be >= 2, got {self.dims}")

    @classmethod
    def qubits(cls, count: int) -> "HilbertLayout":
        """Layout of `count` qubits."""
        return cls(dims=(2,) * count)

    @classmethod
    def extended(cls, n_chargers: int, m_cells: int, ncut: int) -> "HilbertLayout":
        """Chargers, battery cells and a pseudomode truncated at `ncut` photons."""
        return cls(dims=(2,) * (n_chargers + m_cells) + (ncut + 1,))

    @property
    def total_dim(self) -> int:
        return prod(self.dims)

    @property
    def n_factors(self) -> int:
        return len(self.dims)

    def check_operator(self, dim: int) -> None:
        """Raise LayoutError unless `dim` equals the total dimension."""
        if dim != self.total_dim:
            raise LayoutError(
                f"Operator dimension {dim} does not match layout {self.dims} "
                f"(total {self.total_dim})"
            )

    def sub_layout(self, keep: tuple[int, ...]) -> "HilbertLayout":
        """Layout of the kept factors, in ascending factor order."""
        return HilbertLayout(dims=tuple(self.dims[i] for i in sorted(keep)))

"""Shared factories for qbcharge tests."""

from tests.fixtures.factories import (
    random_density_matrix,
    random_hermitian,
    random_unitary,
    synthetic_trajectory,
)

__all__ = [
    "random_density_matrix",
    "random_hermitian",
    "random_unitary",
    "synthetic_trajectory",
]

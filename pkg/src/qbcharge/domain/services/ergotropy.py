"""Ergotropy, passive states and the incoherent/coherent split."""

from dataclasses import dataclass
from math import sqrt

import numpy as np
import numpy.typing as npt

from qbcharge.domain.exceptions import LayoutError, NonPhysicalStateError, RoundoffError
from qbcharge.domain.models.ergotropy import ENERGY_TOLERANCE, ErgotropyBreakdown
from qbcharge.domain.services.numkernel import (
    ComplexMatrix,
    EigenMethod,
    RealVector,
    as_matrix,
    check_hermitian,
    dagger,
    eig_hermitian,
)

STATE_TOLERANCE = 1e-8


@dataclass(frozen=True)
class _EnergyBasis:
    energies: RealVector
    vectors: ComplexMatrix


def _energy_basis(h: ComplexMatrix, method: EigenMethod) -> _EnergyBasis:
    # Diagonal Hamiltonians keep the computational basis inside degenerate levels.
    if not np.any(h - np.diag(np.diag(h))):
        diagonal = np.real(np.diag(h))
        order = np.argsort(diagonal, kind="stable")
        return _EnergyBasis(diagonal[order], np.eye(h.shape[0], dtype=np.complex128)[:, order])
    energies, vectors = eig_hermitian(h, method=method)
    return _EnergyBasis(energies, vectors)


def _validated(rho: npt.ArrayLike, h: npt.ArrayLike) -> tuple[ComplexMatrix, ComplexMatrix]:
    state = as_matrix(rho)
    ham = as_matrix(h)
    if state.shape != ham.shape or state.shape[0] != state.shape[1]:
        raise LayoutError(f"State {state.shape} and Hamiltonian {ham.shape} dimensions differ")
    check_hermitian(ham)
    trace = np.trace(state)
    if abs(trace - 1.0) > STATE_TOLERANCE:
        raise NonPhysicalStateError(f"Trace of rho is {trace:.10g}, expected 1")
    check_hermitian(state)
    return state, ham


def _spectrum_descending(rho: ComplexMatrix, method: EigenMethod) -> RealVector:
    values, _ = eig_hermitian(rho, method=method)
    if values[0] < -STATE_TOLERANCE:
        raise NonPhysicalStateError(f"rho has a negative eigenvalue {values[0]:.3e}")
    return values[::-1].copy()


def _populations(rho: ComplexMatrix, basis: _EnergyBasis) -> RealVector:
    u = basis.vectors
    return np.real(np.einsum("ki,kl,li->i", u.conj(), rho, u))


def _clamp(value: float, name: str) -> float:
    if value < -ENERGY_TOLERANCE:
        raise RoundoffError(f"negative {name}", value)
    return max(0.0, value)


def mean_energy(rho: npt.ArrayLike, h: npt.ArrayLike) -> float:
    """Real part of tr(rho h); the imaginary part must vanish."""
    state, ham = _validated(rho, h)
    value = complex(np.trace(state @ ham))
    if abs(value.imag) > ENERGY_TOLERANCE:
        raise NonPhysicalStateError(f"tr(rho h) has imaginary part {value.imag:.3e}")
    return value.real


def ergotropy(rho: npt.ArrayLike, h: npt.ArrayLike, method: EigenMethod = "lapack") -> float:
    """
    Maximal work extractable by a cyclic unitary.

    Pairs the descending spectrum of rho with the ascending energies of h;
    the result is clamped at zero once round-off is ruled out.
    """
    state, ham = _validated(rho, h)
    basis = _energy_basis(ham, method)
    r = _spectrum_descending(state, method)
    value = float(np.real(np.trace(state @ ham))) - float(np.dot(r, basis.energies))
    return _clamp(value, "ergotropy")


def passive_state(
    rho: npt.ArrayLike, h: npt.ArrayLike, method: EigenMethod = "lapack"
) -> ComplexMatrix:
    """Sum_j r_j |e_j><e_j| with r descending on ascending energies."""
    state, ham = _validated(rho, h)
    basis = _energy_basis(ham, method)
    r = _spectrum_descending(state, method)
    u = basis.vectors
    return (u * r) @ dagger(u)


def dephase(rho: npt.ArrayLike, h: npt.ArrayLike, method: EigenMethod = "lapack") -> ComplexMatrix:
    """Drop every coherence in the energy eigenbasis of h."""
    state, ham = _validated(rho, h)
    basis = _energy_basis(ham, method)
    u = basis.vectors
    return (u * _populations(state, basis)) @ dagger(u)


def incoherent_ergotropy(
    rho: npt.ArrayLike, h: npt.ArrayLike, method: EigenMethod = "lapack"
) -> float:
    """Work extractable by permuting energy-eigenbasis populations alone."""
    state, ham = _validated(rho, h)
    basis = _energy_basis(ham, method)
    populations = _populations(state, basis)
    rearranged = np.sort(populations)[::-1]
    value = float(np.dot(basis.energies, populations - rearranged))
    return _clamp(value, "incoherent ergotropy")


def coherent_ergotropy(
    rho: npt.ArrayLike, h: npt.ArrayLike, method: EigenMethod = "lapack"
) -> float:
    """Ergotropy that needs coherence manipulation: total minus incoherent."""
    difference = ergotropy(rho, h, method) - incoherent_ergotropy(rho, h, method)
    return _clamp(difference, "coherent ergotropy")


def ergotropy_breakdown(
    rho: npt.ArrayLike, h: npt.ArrayLike, method: EigenMethod = "lapack"
) -> ErgotropyBreakdown:
    """Total, incoherent and coherent ergotropy plus mean energy in one pass."""
    state, ham = _validated(rho, h)
    basis = _energy_basis(ham, method)
    r = _spectrum_descending(state, method)
    populations = _populations(state, basis)
    energy = float(np.dot(basis.energies, populations))
    total = _clamp(energy - float(np.dot(r, basis.energies)), "ergotropy")
    incoherent = _clamp(
        float(np.dot(basis.energies, populations - np.sort(populations)[::-1])),
        "incoherent ergotropy",
    )
    # Round-off can push the incoherent part a hair above the total.
    incoherent = min(incoherent, total)
    return ErgotropyBreakdown(
        total=total,
        incoherent=incoherent,
        coherent=total - incoherent,
        mean_energy=energy,
    )


def qubit_ergotropy(excited: float, coherence: complex | float, omega0: float = 1.0) -> float:
    """
    Closed form for a qubit with excited population p and coherence d.

    omega0 * max{0, p - 1/2 + sqrt((2p - 1)^2 + 4|d|^2)/2}.
    """
    radius = sqrt((2.0 * excited - 1.0) ** 2 + 4.0 * abs(coherence) ** 2)
    return omega0 * max(0.0, excited - 0.5 + 0.5 * radius)

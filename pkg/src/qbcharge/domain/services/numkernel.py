"""Dense complex linear algebra for small composite Hilbert spaces."""

from collections.abc import Iterable
from functools import reduce
from typing import Literal

import numpy as np
import numpy.typing as npt

from qbcharge.domain.exceptions import LayoutError, NonHermitianError
from qbcharge.domain.models.layout import HilbertLayout

ComplexMatrix = npt.NDArray[np.complex128]
RealVector = npt.NDArray[np.float64]
EigenMethod = Literal["lapack", "jacobi"]

HERMITIAN_TOLERANCE = 1e-10
JACOBI_MAX_SWEEPS = 100


def as_matrix(a: npt.ArrayLike) -> ComplexMatrix:
    """Coerce to a 2-D complex128 array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise LayoutError(f"Expected a matrix, got an array of shape {m.shape}")
    return m


def dagger(a: ComplexMatrix) -> ComplexMatrix:
    return a.conj().T


def kron(a: npt.ArrayLike, b: npt.ArrayLike) -> ComplexMatrix:
    """Kronecker product; the first factor is the most significant."""
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(*ops: npt.ArrayLike) -> ComplexMatrix:
    return reduce(kron, ops[1:], as_matrix(ops[0]))


def embed(op: npt.ArrayLike, layout: HilbertLayout, index: int) -> ComplexMatrix:
    """Place a single-factor operator at `index`, identities elsewhere."""
    local = as_matrix(op)
    if not 0 <= index < layout.n_factors:
        raise LayoutError(f"Factor index {index} outside layout {layout.dims}")
    if local.shape != (layout.dims[index], layout.dims[index]):
        raise LayoutError(
            f"Operator of shape {local.shape} cannot act on factor {index} "
            f"of dimension {layout.dims[index]}"
        )
    factors = [
        local if i == index else np.eye(d, dtype=np.complex128) for i, d in enumerate(layout.dims)
    ]
    return kron_all(*factors)


def partial_trace(rho: npt.ArrayLike, layout: HilbertLayout, keep: Iterable[int]) -> ComplexMatrix:
    """
    Trace out every factor not in `keep`.

    The reduced operator lists the kept factors in ascending order.
    """
    m = as_matrix(rho)
    if m.shape[0] != m.shape[1]:
        raise LayoutError(f"Partial trace needs a square matrix, got {m.shape}")
    layout.check_operator(m.shape[0])
    kept = sorted(set(keep))
    if not kept:
        raise LayoutError("Partial trace must keep at least one factor")
    if kept[0] < 0 or kept[-1] >= layout.n_factors:
        raise LayoutError(f"Kept factors {kept} outside layout {layout.dims}")

    n = layout.n_factors
    tensor = m.reshape(layout.dims + layout.dims)
    remaining = n
    # Descending order keeps the axis numbers of untouched factors valid.
    for index in reversed([i for i in range(n) if i not in kept]):
        tensor = np.trace(tensor, axis1=index, axis2=index + remaining)
        remaining -= 1
    dim = int(np.prod([layout.dims[i] for i in kept]))
    return tensor.reshape(dim, dim)


def hermiticity_deviation(h: ComplexMatrix) -> float:
    return float(np.max(np.abs(h - dagger(h)))) if h.size else 0.0


def check_hermitian(h: ComplexMatrix, tolerance: float = HERMITIAN_TOLERANCE) -> None:
    deviation = hermiticity_deviation(h)
    if deviation > tolerance:
        raise NonHermitianError(deviation, tolerance)


def jacobi_eigh(
    h: ComplexMatrix, tolerance: float = 1e-14, max_sweeps: int = JACOBI_MAX_SWEEPS
) -> tuple[RealVector, ComplexMatrix]:
    """
    Cyclic Jacobi diagonalization of a Hermitian matrix.

    Each rotation removes the phase of the pivot a_pq and then applies the
    real symmetric Jacobi rotation, so only rows and columns p, q change.
    Returns unsorted eigenvalues and the accumulated unitary.
    """
    a = np.array(h, dtype=np.complex128)
    a = 0.5 * (a + dagger(a))
    dim = a.shape[0]
    v = np.eye(dim, dtype=np.complex128)
    scale = max(float(np.max(np.abs(a))), 1.0) if dim else 1.0

    for _ in range(max_sweeps):
        off = np.abs(a - np.diag(np.diag(a)))
        if float(np.max(off, initial=0.0)) <= tolerance * scale:
            break
        for p in range(dim - 1):
            for q in range(p + 1, dim):
                apq = a[p, q]
                magnitude = abs(apq)
                if magnitude <= tolerance * scale * 1e-3:
                    continue
                phase = apq / magnitude
                app = a[p, p].real
                aqq = a[q, q].real
                theta = (aqq - app) / (2.0 * magnitude)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # J[p,p]=c, J[p,q]=s, J[q,p]=-s*conj(phase), J[q,q]=c*conj(phase)
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * np.conj(phase) * col_q
                a[:, q] = s * col_p + c * np.conj(phase) * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * phase * row_q
                a[q, :] = s * row_p + c * phase * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * np.conj(phase) * vq
                v[:, q] = s * vp + c * np.conj(phase) * vq
    return np.real(np.diag(a)).astype(np.float64), v


def eig_hermitian(
    h: npt.ArrayLike, method: EigenMethod = "lapack"
) -> tuple[RealVector, ComplexMatrix]:
    """
    Eigenvalues in ascending order and orthonormal eigenvector columns.

    Raises NonHermitianError when max|h - h^dagger| exceeds 1e-10. Ties
    keep the solver's output order (stable sort).
    """
    m = as_matrix(h)
    if m.shape[0] != m.shape[1]:
        raise LayoutError(f"Eigendecomposition needs a square matrix, got {m.shape}")
    check_hermitian(m)
    if method == "jacobi":
        values, vectors = jacobi_eigh(m)
    else:
        values, vectors = np.linalg.eigh(0.5 * (m + dagger(m)))
    order = np.argsort(values, kind="stable")
    return np.asarray(values[order], dtype=np.float64), vectors[:, order]


def min_eigenvalue(rho: ComplexMatrix) -> float:
    return float(np.linalg.eigvalsh(0.5 * (rho + dagger(rho)))[0])


def commutator(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    return a @ b - b @ a

"""Dense symmetric eigendecomposition, spectra, mixtures, and joint systems.

The spectrum of a density matrix is its eigenvalue vector treated as a
probability distribution: ascending, with rounding-level negatives clamped
to zero and the whole vector renormalized to sum exactly to 1.
"""

from __future__ import annotations

from typing import Callable, NamedTuple, Sequence

import numpy as np

from .errors import ConvergenceError
from .validation import (
    PSD_FLOOR,
    check_density_matrix,
    check_same_dimension,
    check_symmetric,
    check_weight_vector,
)


class EigenSystem(NamedTuple):
    """Ascending eigenvalues and the aligned orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def eigendecompose(matrix) -> EigenSystem:
    """Full eigendecomposition of a symmetric matrix.

    Deterministic: identical input bytes give identical output bytes.
    """
    a = check_symmetric(matrix)
    try:
        eigenvalues, eigenvectors = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"symmetric eigensolver failed: {exc}") from exc
    return EigenSystem(eigenvalues, eigenvectors)


def spectrum(rho) -> np.ndarray:
    """Clamped, renormalized, ascending eigenvalues of a density matrix."""
    rho = check_density_matrix(rho)
    mu = eigendecompose(rho).eigenvalues
    if mu[0] < PSD_FLOOR:
        raise ValueError(
            f"matrix is not positive semidefinite (eigenvalue {mu[0]:.3e})"
        )
    mu = np.maximum(mu, 0.0)
    return mu / mu.sum()


def trace_function(rho, phi: Callable[[float], float]) -> float:
    """Trace of phi applied to a density matrix, evaluated on the spectrum."""
    return float(sum(phi(x) for x in spectrum(rho)))


# spectrum entries at or below this are rounding residue of exact zeros
RANK_TOLERANCE = 1e-10


def trace_power(rho, alpha: float) -> float:
    """Trace of the alpha-th matrix power via the spectrum, with 0**alpha := 0.

    The zero convention makes alpha = 0 return the rank, matching the
    limiting behavior of the entropy family at a vanishing index; there,
    eigenvalues within rounding of zero (<= 1e-10) count as zero.
    """
    a = float(alpha)
    if a < 0.0:
        raise ValueError(f"trace_power needs alpha >= 0, got {alpha!r}")
    mu = spectrum(rho)
    if a == 0.0:
        return float(np.count_nonzero(mu > RANK_TOLERANCE))
    positive = mu[mu > 0.0]
    return float((positive**a).sum())


def mixture(rhos: Sequence[np.ndarray], omega) -> np.ndarray:
    """Weighted convex combination of density matrices (same dimension)."""
    rhos = [check_density_matrix(r) for r in rhos]
    dim = check_same_dimension(rhos)
    weights = check_weight_vector(omega, expected_length=len(rhos))
    mixed = np.zeros((dim, dim))
    for w, rho in zip(weights, rhos):
        mixed += w * rho
    return mixed


def kronecker_joint(rho1, rho2) -> np.ndarray:
    """Density matrix of two independent subsystems: the Kronecker product.

    Its spectrum is the multiset of pairwise eigenvalue products.
    """
    return np.kron(check_density_matrix(rho1), check_density_matrix(rho2))

"""Input validation helpers shared by the numeric modules.

Each helper coerces to a float ndarray, enforces the relevant contract,
and returns the validated value so call sites can stay one-liners.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatchError, InvalidAlphaError, InvalidWeightsError

# trace of a density matrix must match 1 this tightly
TRACE_TOLERANCE = 1e-12
# probability/weight vectors must sum to 1 this tightly before renormalization
WEIGHT_SUM_TOLERANCE = 1e-10
# entropic indices this close to 1 route to the Shannon/von Neumann limit forms
ALPHA_ONE_TOLERANCE = 1e-8
# eigenvalues of a density matrix may dip this far below zero from rounding
PSD_FLOOR = -1e-10


def check_symmetric(matrix) -> np.ndarray:
    """Require a square, exactly symmetric float matrix."""
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not exactly symmetric")
    return a


def check_density_matrix(matrix, check_psd: bool = False) -> np.ndarray:
    """Require a symmetric matrix with unit trace.

    Positive semidefiniteness needs an eigendecomposition, so it is only
    verified when `check_psd` is set; the spectral routines enforce it on
    the eigenvalues they compute anyway.
    """
    a = check_symmetric(matrix)
    trace = float(np.trace(a))
    if abs(trace - 1.0) > TRACE_TOLERANCE:
        raise ValueError(f"density matrix trace must be 1, got {trace!r}")
    if check_psd:
        smallest = float(np.linalg.eigvalsh(a)[0])
        if smallest < PSD_FLOOR:
            raise ValueError(
                f"matrix is not positive semidefinite (eigenvalue {smallest:.3e})"
            )
    return a


def check_probability_vector(p, tolerance: float = WEIGHT_SUM_TOLERANCE) -> np.ndarray:
    """Require a nonnegative vector summing to 1 within `tolerance`.

    Returns the vector renormalized to sum exactly to 1 so downstream
    mixtures keep unit trace.
    """
    v = np.asarray(p, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise ValueError(f"expected a nonempty 1-d vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("probability vector has non-finite entries")
    if np.any(v < 0.0):
        raise ValueError(f"probability vector has negative entries: {v[v < 0.0]}")
    total = float(v.sum())
    if abs(total - 1.0) > tolerance:
        raise ValueError(f"probability vector sums to {total!r}, not 1")
    return v / total


def check_weight_vector(omega, expected_length: int | None = None) -> np.ndarray:
    """Probability-vector check that reports as an InvalidWeightsError."""
    try:
        w = check_probability_vector(omega)
    except ValueError as exc:
        raise InvalidWeightsError(str(exc)) from exc
    if expected_length is not None and w.size != expected_length:
        raise InvalidWeightsError(
            f"expected {expected_length} weights, got {w.size}"
        )
    return w


def check_alpha(alpha) -> float:
    """Require a positive entropic index."""
    a = float(alpha)
    if math.isnan(a) or a <= 0.0:
        raise InvalidAlphaError(f"entropic index must be positive, got {alpha!r}")
    return a


def check_same_dimension(matrices: Sequence[np.ndarray] | Iterable[np.ndarray]) -> int:
    """Require all square matrices to share one dimension; returns it."""
    sizes = [m.shape[0] for m in matrices]
    if not sizes:
        raise ValueError("expected at least one matrix")
    if len(set(sizes)) > 1:
        raise DimensionMismatchError(f"mixed matrix dimensions: {sorted(set(sizes))}")
    return sizes[0]

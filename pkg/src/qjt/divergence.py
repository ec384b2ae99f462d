"""Weighted Jensen-Tsallis divergence between density matrices, with bounds.

The divergence is the Jensen gap of the Tsallis entropy: the entropy of the
weighted mixture minus the weighted mean of entropies. The mixture entropy
is computed from the eigendecomposition of the mixed matrix itself, never
from mixed spectra; the two differ for non-commuting densities.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .entropy import alpha_log, tsallis_entropy, tsallis_entropy_p
from .spectral import mixture
from .validation import (
    check_alpha,
    check_density_matrix,
    check_same_dimension,
    check_weight_vector,
)

# Jensen gaps this far below zero are rounding noise and clamp to 0;
# anything lower means the inputs were not valid densities.
GAP_FLOOR = -1e-10


@dataclass(frozen=True)
class DivergenceResult:
    """Divergence value together with its bounds and normalization.

    `upper_bound` is the Tsallis entropy of the weights; `tight_bound` is
    the deformed logarithm of the count, which the upper bound reaches at
    uniform weights. `normalized` is value / upper_bound, defined as 0 when
    the upper bound vanishes (single input or one-hot weights).

    The weight-entropy bound (and so normalized <= 1) is guaranteed only
    for alpha >= 1; below that the value can genuinely exceed it.
    """

    value: float
    upper_bound: float
    tight_bound: float
    normalized: float
    alpha: float
    n: int


def upper_bound(omega, alpha: float) -> float:
    """Weight-entropy bound on the divergence: Tsallis entropy of omega."""
    return tsallis_entropy_p(check_weight_vector(omega), alpha)


def tight_bound(n: int, alpha: float) -> float:
    """Largest possible upper bound over n densities: alpha_log(n)."""
    if n < 1:
        raise ValueError(f"need at least one density, got n={n}")
    return alpha_log(float(n), check_alpha(alpha))


def jensen_tsallis_divergence(
    rhos: Sequence[np.ndarray],
    omega=None,
    alpha: float = 2.0,
) -> DivergenceResult:
    """Jensen-Tsallis divergence of densities under weights omega.

    omega defaults to uniform. The value is nonnegative (rounding-level
    negatives clamp to 0) and vanishes when all weighted densities are
    equal; it never exceeds the Tsallis entropy of the weights.
    """
    a = check_alpha(alpha)
    rhos = [check_density_matrix(r) for r in rhos]
    check_same_dimension(rhos)
    n = len(rhos)
    if omega is None:
        omega = np.full(n, 1.0 / n)
    weights = check_weight_vector(omega, expected_length=n)

    mixture_entropy = tsallis_entropy(mixture(rhos, weights), a)
    mean_entropy = float(
        np.dot(weights, [tsallis_entropy(rho, a) for rho in rhos])
    )
    gap = mixture_entropy - mean_entropy
    if gap < GAP_FLOOR:
        raise ArithmeticError(
            f"Jensen gap {gap:.3e} is negative beyond rounding; invalid inputs"
        )
    value = max(gap, 0.0)

    bound = tsallis_entropy_p(weights, a)
    normalized = value / bound if bound > 0.0 else 0.0
    return DivergenceResult(
        value=value,
        upper_bound=bound,
        tight_bound=alpha_log(float(n), a),
        normalized=normalized,
        alpha=a,
        n=n,
    )


def degenerate_density(index: int, dim: int) -> np.ndarray:
    """Diagonal density with a single unit entry: the extreme points where
    the divergence attains its upper bound."""
    if not 0 <= index < dim:
        raise ValueError(f"index {index} outside [0, {dim})")
    delta = np.zeros((dim, dim))
    delta[index, index] = 1.0
    return delta


def pairwise_matrix(
    rhos: Sequence[np.ndarray],
    alpha: float = 2.0,
    normalized: bool = True,
) -> np.ndarray:
    """Symmetric matrix of equal-weight two-density divergences.

    Entry (i, j) is the divergence between densities i and j under weights
    (1/2, 1/2), normalized by default. The diagonal is zero; each cell is
    computed once and mirrored.
    """
    rhos = [check_density_matrix(r) for r in rhos]
    check_same_dimension(rhos)
    a = check_alpha(alpha)
    half = np.array([0.5, 0.5])
    n = len(rhos)
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            result = jensen_tsallis_divergence([rhos[i], rhos[j]], half, a)
            out[i, j] = out[j, i] = result.normalized if normalized else result.value
    return out

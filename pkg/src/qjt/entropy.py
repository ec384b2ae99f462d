"""The deformed logarithm and the Tsallis, Rényi, and von Neumann entropies.

Matrix entropies are always evaluated on the spectrum, never through matrix
powers or a matrix logarithm. Indices within 1e-8 of 1 route to the
Shannon/von Neumann limit forms, where the closed forms lose precision.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NonPositiveArgumentError
from .spectral import kronecker_joint, spectrum
from .validation import ALPHA_ONE_TOLERANCE, check_alpha, check_probability_vector


def alpha_log(x: float, alpha: float) -> float:
    """Deformed logarithm (x**(1 - alpha) - 1) / (1 - alpha) for x > 0.

    Continuous across alpha = 1, where it becomes the natural logarithm.
    Satisfies the product rule
    alpha_log(x*y) = alpha_log(x) + alpha_log(y)
                     + (1 - alpha) * alpha_log(x) * alpha_log(y).
    """
    a = check_alpha(alpha)
    x = float(x)
    if not x > 0.0:
        raise NonPositiveArgumentError(f"alpha_log needs x > 0, got {x!r}")
    if abs(a - 1.0) < ALPHA_ONE_TOLERANCE:
        return math.log(x)
    return (x ** (1.0 - a) - 1.0) / (1.0 - a)


def _shannon(p: np.ndarray) -> float:
    positive = p[p > 0.0]
    return max(0.0, float(-(positive * np.log(positive)).sum()))


def tsallis_entropy_p(p, alpha: float) -> float:
    """Tsallis entropy of a probability vector: (sum p_i**alpha - 1) / (1 - alpha).

    Zero entries contribute nothing (0**alpha := 0 for alpha > 0). Always
    nonnegative; zero exactly on degenerate (one-hot) distributions.
    """
    a = check_alpha(alpha)
    v = check_probability_vector(p)
    if abs(a - 1.0) < ALPHA_ONE_TOLERANCE:
        return _shannon(v)
    positive = v[v > 0.0]
    return max(0.0, (float((positive**a).sum()) - 1.0) / (1.0 - a))


def tsallis_entropy(rho, alpha: float) -> float:
    """Tsallis entropy of a density matrix, equal to that of its spectrum."""
    return tsallis_entropy_p(spectrum(rho), alpha)


def renyi_entropy(rho, alpha: float) -> float:
    """Rényi entropy log(trace(rho**alpha)) / (1 - alpha), natural log."""
    a = check_alpha(alpha)
    if abs(a - 1.0) < ALPHA_ONE_TOLERANCE:
        return von_neumann_entropy(rho)
    mu = spectrum(rho)
    positive = mu[mu > 0.0]
    return max(0.0, math.log(float((positive**a).sum())) / (1.0 - a))


def von_neumann_entropy(rho) -> float:
    """Shannon entropy of the spectrum; zero exactly for pure states."""
    return _shannon(spectrum(rho))


def joint_tsallis_entropy(rho1, rho2, alpha: float) -> float:
    """Tsallis entropy of the joint system of two independent densities.

    Pseudo-additive: equals H(rho1) + H(rho2) + (1 - alpha)*H(rho1)*H(rho2).
    """
    return tsallis_entropy(kronecker_joint(rho1, rho2), alpha)

"""Adjacency, degree, and Laplacian matrices, and the Laplacian density matrix.

Matrices are dense float64 ndarrays. Degrees stay integers until the single
division by the graph volume, so the density matrix carries one rounding per
entry and its trace is 1 to machine precision.
"""

from __future__ import annotations

import numpy as np

from .errors import EmptyGraphError
from .graph_io import Graph


def adjacency_matrix(g: Graph) -> np.ndarray:
    """0/1 adjacency matrix with zero diagonal."""
    a = np.zeros((g.vertex_count, g.vertex_count))
    for i, j in g.edges:
        a[i, j] = 1.0
        a[j, i] = 1.0
    return a


def degree_vector(g: Graph) -> np.ndarray:
    """Integer vertex degrees; sums to twice the edge count."""
    d = np.zeros(g.vertex_count, dtype=np.int64)
    for i, j in g.edges:
        d[i] += 1
        d[j] += 1
    return d


def laplacian_matrix(g: Graph) -> np.ndarray:
    """Combinatorial Laplacian: degree matrix minus adjacency matrix."""
    return np.diag(degree_vector(g)) - adjacency_matrix(g)


def volume(g: Graph) -> int:
    """Graph volume: total degree, i.e. twice the edge count."""
    return 2 * g.edge_count


def density_matrix(g: Graph) -> np.ndarray:
    """Laplacian scaled by the inverse volume: unit-trace, symmetric, PSD."""
    if g.edge_count == 0:
        raise EmptyGraphError(
            f"graph with {g.vertex_count} vertices has no edges (volume 0)"
        )
    return laplacian_matrix(g) / float(volume(g))


def matrix_csv(matrix: np.ndarray) -> str:
    """Full row-major CSV dump of a dense matrix, %.12g per entry."""
    rows = np.atleast_2d(np.asarray(matrix, dtype=float))
    return "\n".join(",".join("%.12g" % x for x in row) for row in rows) + "\n"

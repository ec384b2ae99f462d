import numpy as np
import pytest

from qjt import (
    EmptyGraphError,
    Graph,
    adjacency_matrix,
    degree_vector,
    density_matrix,
    laplacian_matrix,
    matrix_csv,
    volume,
)

from oracles import random_graph


def test_adjacency_examples(p3, k2, k3):
    np.testing.assert_array_equal(
        adjacency_matrix(p3), [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
    )
    np.testing.assert_array_equal(adjacency_matrix(k2), [[0, 1], [1, 0]])
    np.testing.assert_array_equal(
        adjacency_matrix(k3), np.ones((3, 3)) - np.eye(3)
    )


def test_laplacian_examples(p3, k2, k3):
    np.testing.assert_array_equal(
        laplacian_matrix(p3), [[1, -1, 0], [-1, 2, -1], [0, -1, 1]]
    )
    np.testing.assert_array_equal(laplacian_matrix(k2), [[1, -1], [-1, 1]])
    np.testing.assert_array_equal(
        laplacian_matrix(k3), [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    )


def test_volume_examples(p3, k3):
    assert volume(p3) == 4
    assert volume(k3) == 6


def test_degree_vector(p3):
    np.testing.assert_array_equal(degree_vector(p3), [1, 2, 1])
    assert degree_vector(p3).sum() == 2 * p3.edge_count


def test_density_examples(p3, k2):
    np.testing.assert_array_equal(
        density_matrix(k2), [[0.5, -0.5], [-0.5, 0.5]]
    )
    np.testing.assert_array_equal(
        density_matrix(p3),
        [[0.25, -0.25, 0.0], [-0.25, 0.5, -0.25], [0.0, -0.25, 0.25]],
    )


def test_density_of_edgeless_graph_fails():
    with pytest.raises(EmptyGraphError):
        density_matrix(Graph(2, set()))


def test_structural_invariants_on_random_graphs():
    rng = np.random.default_rng(7)
    for _ in range(50):
        g = random_graph(rng, int(rng.integers(2, 10)))
        a = adjacency_matrix(g)
        lap = laplacian_matrix(g)
        assert np.trace(a) == 0.0
        assert np.trace(lap) == volume(g)
        np.testing.assert_array_equal(lap.sum(axis=1), np.zeros(g.vertex_count))
        np.testing.assert_array_equal(lap, lap.T)

        # quadratic form identity: x^T L x = sum over edges of (x_i - x_j)^2
        x = rng.standard_normal(g.vertex_count)
        direct = sum((x[i] - x[j]) ** 2 for i, j in g.edges)
        assert x @ lap @ x == pytest.approx(direct, abs=1e-10)
        assert x @ lap @ x >= -1e-10

        rho = density_matrix(g)
        assert abs(np.trace(rho) - 1.0) <= 1e-12
        np.testing.assert_array_equal(rho, rho.T)


def test_matrix_csv_round_trips_values(k2):
    text = matrix_csv(density_matrix(k2))
    assert text == "0.5,-0.5\n-0.5,0.5\n"

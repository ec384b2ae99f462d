import numpy as np
import pytest

from qjt import (
    DimensionMismatchError,
    Graph,
    InvalidWeightsError,
    density_matrix,
    eigendecompose,
    kronecker_joint,
    laplacian_matrix,
    mixture,
    spectrum,
    trace_function,
    trace_power,
    volume,
)

from oracles import is_connected, jacobi_eigenvalues, random_graph


def test_eigendecompose_diagonal():
    system = eigendecompose(np.diag([3.0, 1.0, 2.0]))
    np.testing.assert_allclose(system.eigenvalues, [1.0, 2.0, 3.0], atol=1e-14)
    # axis eigenvectors up to sign
    np.testing.assert_allclose(np.abs(system.eigenvectors), np.eye(3)[:, [1, 2, 0]], atol=1e-14)


def test_eigendecompose_p3_laplacian(p3):
    # characteristic polynomial by hand: -l(l-1)(l-3)
    values = eigendecompose(laplacian_matrix(p3)).eigenvalues
    np.testing.assert_allclose(values, [0.0, 1.0, 3.0], atol=1e-12)
    np.testing.assert_allclose(jacobi_eigenvalues(laplacian_matrix(p3)), values, atol=1e-12)


def test_eigendecompose_k3_laplacian(k3):
    values = eigendecompose(laplacian_matrix(k3)).eigenvalues
    np.testing.assert_allclose(values, [0.0, 3.0, 3.0], atol=1e-12)
    np.testing.assert_allclose(jacobi_eigenvalues(laplacian_matrix(k3)), values, atol=1e-12)


def test_eigendecompose_rejects_asymmetric():
    with pytest.raises(ValueError):
        eigendecompose(np.array([[0.0, 1.0], [1.0 + 1e-15, 0.0]]))


def test_eigendecompose_is_deterministic(p3):
    rho = density_matrix(p3)
    first = eigendecompose(rho)
    second = eigendecompose(rho)
    assert np.array_equal(first.eigenvalues, second.eigenvalues)
    assert np.array_equal(first.eigenvectors, second.eigenvectors)


def test_spectrum_examples(p3, k2, k3):
    np.testing.assert_allclose(spectrum(density_matrix(p3)), [0.0, 0.25, 0.75], atol=1e-12)
    np.testing.assert_allclose(spectrum(density_matrix(k2)), [0.0, 1.0], atol=1e-12)
    np.testing.assert_allclose(spectrum(density_matrix(k3)), [0.0, 0.5, 0.5], atol=1e-12)


def test_spectrum_is_clamped_normalized_ascending():
    rng = np.random.default_rng(11)
    for _ in range(30):
        g = random_graph(rng, int(rng.integers(2, 12)))
        mu = spectrum(density_matrix(g))
        assert np.all(mu >= 0.0)
        assert np.all(mu <= 1.0)
        assert np.all(np.diff(mu) >= 0.0)
        assert abs(mu.sum() - 1.0) <= 1e-10
        assert mu[0] <= 1e-10  # Laplacian kernel


def test_trace_function_examples(p3):
    rho = density_matrix(p3)
    assert trace_function(rho, lambda x: x) == pytest.approx(1.0, abs=1e-12)
    assert trace_function(rho, lambda x: x**2) == pytest.approx(0.625, abs=1e-12)
    # x**0 with the 0**0 := 0 convention counts the rank; the exact zero
    # comes back from the eigensolver as rounding residue, hence the cutoff
    rank = trace_function(rho, lambda x: 0.0 if x <= 1e-10 else x**0)
    assert rank == pytest.approx(2.0, abs=1e-12)


def test_trace_power_rank_convention(p3):
    rho = density_matrix(p3)
    assert trace_power(rho, 0.0) == pytest.approx(2.0, abs=1e-12)
    assert trace_power(rho, 1.0) == pytest.approx(1.0, abs=1e-12)
    assert trace_power(rho, 2.0) == pytest.approx(0.625, abs=1e-12)
    with pytest.raises(ValueError):
        trace_power(rho, -1.0)


def test_mixture_identity_and_idempotence(p3):
    rho = density_matrix(p3)
    np.testing.assert_allclose(mixture([rho], [1.0]), rho, atol=0)
    np.testing.assert_allclose(mixture([rho, rho], [0.5, 0.5]), rho, atol=1e-16)


def test_mixture_of_p3_labelings(p3, p3_center0):
    mixed = mixture([density_matrix(p3), density_matrix(p3_center0)], [0.5, 0.5])
    # row-sum and swap-symmetry eigenvectors give eigenvalues {0, 3, 5}/8
    np.testing.assert_allclose(spectrum(mixed), [0.0, 3.0 / 8.0, 5.0 / 8.0], atol=1e-12)


def test_mixture_errors(p3, k2):
    with pytest.raises(DimensionMismatchError):
        mixture([density_matrix(p3), density_matrix(k2)], [0.5, 0.5])
    with pytest.raises(InvalidWeightsError):
        mixture([density_matrix(p3)], [0.5, 0.5])
    with pytest.raises(InvalidWeightsError):
        mixture([density_matrix(p3)], [2.0])


def test_kronecker_identity_and_diagonal(p3):
    rho = density_matrix(p3)
    np.testing.assert_allclose(kronecker_joint(rho, np.array([[1.0]])), rho, atol=0)
    joint = kronecker_joint(np.diag([0.5, 0.5]), np.diag([0.5, 0.5]))
    np.testing.assert_allclose(joint, np.diag([0.25, 0.25, 0.25, 0.25]), atol=0)


def test_kronecker_spectrum_is_pairwise_products(p3, k3):
    rho1, rho2 = density_matrix(p3), density_matrix(k3)
    joint = spectrum(kronecker_joint(rho1, rho2))
    products = np.sort(np.outer(spectrum(rho1), spectrum(rho2)).ravel())
    np.testing.assert_allclose(joint, products, atol=1e-12)


def test_reconstruction_from_dyads():
    rng = np.random.default_rng(3)
    for _ in range(20):
        g = random_graph(rng, int(rng.integers(2, 10)))
        rho = density_matrix(g)
        mu, u = eigendecompose(rho)
        rebuilt = (u * mu) @ u.T
        assert np.max(np.abs(rebuilt - rho)) <= 1e-9


def test_eigenvector_invariants_hold():
    rng = np.random.default_rng(5)
    for _ in range(20):
        g = random_graph(rng, int(rng.integers(2, 10)))
        rho = density_matrix(g)
        mu, u = eigendecompose(rho)
        residual = np.max(np.abs(rho @ u - u * mu))
        assert residual <= 1e-9 * max(1.0, np.linalg.norm(rho))
        assert np.max(np.abs(u.T @ u - np.eye(g.vertex_count))) <= 1e-9
        # dyad traces are one
        np.testing.assert_allclose((u * u).sum(axis=0), 1.0, atol=1e-9)


def test_density_shares_laplacian_eigenstructure():
    rng = np.random.default_rng(9)
    for _ in range(20):
        g = random_graph(rng, int(rng.integers(2, 10)))
        lap, rho = laplacian_matrix(g), density_matrix(g)
        lam = eigendecompose(lap).eigenvalues
        mu = eigendecompose(rho).eigenvalues
        np.testing.assert_allclose(mu, lam / volume(g), atol=1e-12)
        # eigenspaces agree: same projector onto each eigenvalue cluster
        _, u_lap = eigendecompose(lap)
        _, u_rho = eigendecompose(rho)
        splits = np.nonzero(np.diff(lam) > 1e-8)[0] + 1
        for block in np.split(np.arange(g.vertex_count), splits):
            p_lap = u_lap[:, block] @ u_lap[:, block].T
            p_rho = u_rho[:, block] @ u_rho[:, block].T
            assert np.max(np.abs(p_lap - p_rho)) <= 1e-9


def test_connected_graph_kernel_is_constant_vector():
    rng = np.random.default_rng(13)
    seen_connected = 0
    for _ in range(40):
        g = random_graph(rng, int(rng.integers(2, 10)))
        if not is_connected(g):
            continue
        seen_connected += 1
        _, u = eigendecompose(density_matrix(g))
        ones = np.full(g.vertex_count, 1.0 / np.sqrt(g.vertex_count))
        assert abs(abs(u[:, 0] @ ones) - 1.0) <= 1e-9
    assert seen_connected >= 10


def test_connectivity_iff_positive_second_eigenvalue():
    rng = np.random.default_rng(17)
    for _ in range(60):
        g = random_graph(rng, int(rng.integers(2, 12)), p=0.3)
        mu = spectrum(density_matrix(g))
        assert (mu[1] > 1e-10) == is_connected(g)

import pytest

from qjt import Graph


@pytest.fixture
def p3() -> Graph:
    """Path on three vertices, center vertex 1."""
    return Graph(3, {(0, 1), (1, 2)})


@pytest.fixture
def p3_center0() -> Graph:
    """The other labeling of the path: center vertex 0."""
    return Graph(3, {(0, 1), (0, 2)})


@pytest.fixture
def k2() -> Graph:
    return Graph(2, {(0, 1)})


@pytest.fixture
def k3() -> Graph:
    return Graph(3, {(0, 1), (1, 2), (0, 2)})

import pytest

from weylseed.cartan import CartanMatrix, ReducedWord


@pytest.fixture(scope="session")
def a2():
    return CartanMatrix.from_edges(2, [(1, 2, 1)])


@pytest.fixture(scope="session")
def a3():
    return CartanMatrix.from_edges(3, [(1, 2, 1), (2, 3, 1)])


@pytest.fixture(scope="session")
def a4():
    return CartanMatrix.from_edges(4, [(1, 2, 1), (2, 3, 1), (3, 4, 1)])


@pytest.fixture(scope="session")
def double_edge():
    """Rank 3, double edge 1-2, single edge 2-3."""
    return CartanMatrix.from_edges(3, [(1, 2, 2), (2, 3, 1)])


@pytest.fixture(scope="session")
def triangle():
    return CartanMatrix.from_edges(3, [(1, 2, 1), (2, 3, 1), (1, 3, 1)])


@pytest.fixture(scope="session")
def star4():
    return CartanMatrix.from_edges(4, [(1, 4, 1), (2, 4, 1), (3, 4, 1)])


@pytest.fixture(scope="session")
def wild3():
    """Rank 3 with edge multiplicities 3 (1-2), 2 (1-3), 2 (2-3)."""
    return CartanMatrix.from_edges(3, [(1, 2, 3), (1, 3, 2), (2, 3, 2)])


@pytest.fixture(scope="session")
def word_a4_running(a4):
    return ReducedWord(a4, (3, 4, 2, 1, 3, 4, 2, 1))


@pytest.fixture(scope="session")
def word_gamma7(double_edge):
    return ReducedWord(double_edge, (3, 1, 2, 3, 1, 2, 1))


@pytest.fixture(scope="session")
def word_mut7(double_edge):
    return ReducedWord(double_edge, (1, 3, 2, 1, 3, 2, 1))


@pytest.fixture(scope="session")
def word_wild10(wild3):
    return ReducedWord(wild3, (2, 3, 2, 1, 2, 1, 3, 1, 2, 1))


@pytest.fixture(scope="session")
def word_a4_shift(a4):
    return ReducedWord(a4, (1, 2, 1, 3, 2, 1, 4, 3, 2, 1))


@pytest.fixture(scope="session")
def word_pbw6(a3):
    return ReducedWord(a3, (2, 3, 1, 2, 3, 1))

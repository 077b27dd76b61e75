import pytest

from groupnum import from_permutations, make_heisenberg


@pytest.fixture(scope="session")
def s3():
    return from_permutations([(1, 2, 0), (1, 0, 2)], name="S3")


@pytest.fixture(scope="session")
def a4():
    return from_permutations([(1, 2, 0, 3), (0, 2, 3, 1)], name="A4")


@pytest.fixture(scope="session")
def a5():
    return from_permutations([(1, 2, 3, 4, 0), (0, 1, 3, 4, 2)], name="A5")


@pytest.fixture(scope="session")
def heis2():
    return make_heisenberg(2)


@pytest.fixture(scope="session")
def heis3():
    return make_heisenberg(3)

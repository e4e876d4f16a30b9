import pytest

from rlattice import Universe, enumerate_relations


@pytest.fixture(scope="session")
def u1():
    return Universe.make({"t": ("a", "b")})


@pytest.fixture(scope="session")
def u2():
    return Universe.make({"t": ("a", "b"), "s": ("1", "2")})


@pytest.fixture(scope="session")
def rels1(u1):
    return enumerate_relations(u1)


@pytest.fixture(scope="session")
def rels2(u2):
    return enumerate_relations(u2)

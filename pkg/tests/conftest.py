import pytest

from biheyt import (
    build_lattice,
    chain,
    enumerate_distributive_lattices,
    enumerate_topologies,
    validate_topology,
)


@pytest.fixture(scope="session")
def threepoint():
    """Opens ∅, {0}, {0,1}, X on three points."""
    return validate_topology(3, [0b000, 0b001, 0b011, 0b111])


@pytest.fixture(scope="session")
def sierpinski():
    return validate_topology(2, [0b00, 0b01, 0b11])


@pytest.fixture(scope="session")
def discrete2():
    return validate_topology(2, [0b00, 0b01, 0b10, 0b11])


@pytest.fixture(scope="session")
def chain3():
    return chain(3)


@pytest.fixture(scope="session")
def boolean4():
    return build_lattice(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


@pytest.fixture(scope="session")
def m3_diamond():
    return build_lattice(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


@pytest.fixture(scope="session")
def lattices_6():
    return enumerate_distributive_lattices(6)


@pytest.fixture(scope="session")
def lattices_7():
    return enumerate_distributive_lattices(7)


@pytest.fixture(scope="session")
def spaces_3():
    return [sp for m in range(1, 4) for sp in enumerate_topologies(m)]


@pytest.fixture(scope="session")
def spaces_4():
    return [sp for m in range(1, 5) for sp in enumerate_topologies(m)]

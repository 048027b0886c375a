import pytest

from halphen import chilean, piclattice


@pytest.fixture(scope="session")
def symbolic_data():
    return chilean.build_chilean()


@pytest.fixture(scope="session")
def pencil(symbolic_data):
    return chilean.PencilPair(symbolic_data)


@pytest.fixture(scope="session")
def nodes(symbolic_data):
    return chilean.fiber_nodes(symbolic_data)


@pytest.fixture(scope="session")
def dual_lines(symbolic_data, nodes):
    return chilean.dual_hesse_lines(symbolic_data, nodes)


@pytest.fixture(scope="session")
def lattice():
    return piclattice.chilean_lattice()


@pytest.fixture(scope="session")
def classes144(lattice):
    return piclattice.enumerate_minus1_generative(lattice)

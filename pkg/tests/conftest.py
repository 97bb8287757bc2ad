import pytest

from assoclab import dmr
from assoclab.lab import solve_pentagon


@pytest.fixture(scope="session")
def pentagon5():
    return solve_pentagon(5)


@pytest.fixture(scope="session")
def phi5(pentagon5):
    return pentagon5["phi"]


@pytest.fixture(scope="session")
def pentagon6():
    return solve_pentagon(6)


@pytest.fixture(scope="session")
def phi6(pentagon6):
    return pentagon6["phi"]


@pytest.fixture(scope="session")
def pentagon8():
    return solve_pentagon(8)


@pytest.fixture(scope="session")
def phi5_c2():
    """Pentagon solution at degree 5 with c_{X0X1} = 1 (hexagon case)."""
    return solve_pentagon(5, c2=1)["phi"]


@pytest.fixture(scope="session")
def psi3():
    (out,) = dmr.solve_dmr0(3)
    return out


@pytest.fixture(scope="session")
def psi5():
    (out,) = dmr.solve_dmr0(5)
    return out

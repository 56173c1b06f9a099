import numpy as np
import pytest

from medkit import generators as gen


def ids(mask) -> set:
    return set(int(v) for v in np.flatnonzero(mask))


@pytest.fixture(scope="session")
def p4():
    return gen.path(4)


@pytest.fixture(scope="session")
def p5():
    return gen.path(5)


@pytest.fixture(scope="session")
def p7():
    return gen.path(7)


@pytest.fixture(scope="session")
def q2():
    # vertex v encodes the bitstring, so 00=0, 01=1, 10=2, 11=3
    return gen.hypercube(2)


@pytest.fixture(scope="session")
def q3():
    return gen.hypercube(3)


@pytest.fixture(scope="session")
def tripod():
    # center 0, leaves 1, 2, 3
    return gen.tripod()


@pytest.fixture(scope="session")
def grid33():
    return gen.grid(3, 3)


@pytest.fixture(scope="session")
def spider32():
    return gen.spider(3, 2)


@pytest.fixture(scope="session")
def staircase3():
    return gen.staircase(3)

import pytest

from convcode import field_make, pm


@pytest.fixture(scope="session")
def f2():
    return field_make(2)


@pytest.fixture(scope="session")
def f3():
    return field_make(3)


@pytest.fixture(scope="session")
def f16():
    return field_make(2, 4)


@pytest.fixture(scope="session")
def g213(f2):
    # (1 + z + z^2 + z^3, 1 + z^2 + z^3), one row, degree 3
    return pm(f2, [[[1, 1, 1, 1], [1, 0, 1, 1]]])


@pytest.fixture(scope="session")
def g_mixed(f2):
    # [[1, 1, 0], [0, z+1, z]]: row degrees (0, 1)
    return pm(f2, [[[1], [1], [0]], [[0], [1, 1], [0, 1]]])


@pytest.fixture(scope="session")
def g1(f2):
    # [1, z, 1+z]
    return pm(f2, [[[1], [0, 1], [1, 1]]])


@pytest.fixture(scope="session")
def g2(f2):
    # [z, z, 1+z]
    return pm(f2, [[[0, 1], [0, 1], [1, 1]]])


@pytest.fixture(scope="session")
def g16(f16):
    # [[a + az + z^2, a^6 + az + a^10 z^2, a^11 + az + a^5 z^2],
    #  [1 + z,        a^10 + a^5 z,        a^5 + a^10 z]]
    # powers of a = 2: a^5 = 6, a^6 = 12, a^10 = 7, a^11 = 14
    return pm(
        f16,
        [
            [[2, 2, 1], [12, 2, 7], [14, 2, 6]],
            [[1, 1], [7, 6], [6, 7]],
        ],
    )

"""Shared fixtures: zoo algebras, their dual pairs and a quiet logger."""

import pytest
from hypothesis import HealthCheck, settings

from whakit import zoo
from whakit.fields import Field
from whakit.integrals import dual_pair, find_nondegenerate_left_integral
from whakit.logger import LogLevel, configure_logger


# The autouse logger fixture is function scoped and stateless between examples.
settings.register_profile("whakit", deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile("whakit")


@pytest.fixture(autouse=True)
def quiet_logger():
    """Keep suite logs out of the captured output."""
    logger = configure_logger(console=False, min_level=LogLevel.DEBUG)
    yield logger
    configure_logger(console=False, min_level=LogLevel.WARNING)


def _pair(A):
    l = find_nondegenerate_left_integral(A, 3)
    assert l is not None, f"{A.name} has no non-degenerate left integral within bound 3"
    return dual_pair(A, l)


@pytest.fixture(scope="session")
def z2():
    return zoo.cyclic_group(2)


@pytest.fixture(scope="session")
def z3():
    return zoo.cyclic_group(3)


@pytest.fixture(scope="session")
def s3():
    return zoo.symmetric_group_s3()


@pytest.fixture(scope="session")
def v4():
    return zoo.klein_four()


@pytest.fixture(scope="session")
def m2q():
    return zoo.matrix_pair_wha(2, zoo.M2Q_T, name="M2Q")


@pytest.fixture(scope="session")
def f2m2():
    return zoo.matrix_pair_wha(2, zoo.F2M2_T, Field.prime(2), "F2M2")


@pytest.fixture(scope="session")
def xp():
    return zoo.crossed_product_example()


@pytest.fixture(scope="session")
def lz():
    return zoo.rigged_no_integral_wba()


@pytest.fixture(scope="session")
def z3_pair(z3):
    return _pair(z3)


@pytest.fixture(scope="session")
def s3_pair(s3):
    return _pair(s3)


@pytest.fixture(scope="session")
def m2q_pair(m2q):
    return _pair(m2q)


@pytest.fixture(scope="session")
def f2m2_pair(f2m2):
    return _pair(f2m2)


@pytest.fixture(scope="session")
def xp_pair(xp):
    return _pair(xp)


@pytest.fixture(scope="session")
def z2_pair(z2):
    return _pair(z2)

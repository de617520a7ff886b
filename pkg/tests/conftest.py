import pytest

from weakhopf.duality import VerificationContext
from weakhopf.instances import builtin_instance

_CACHE = {}


def context(name) -> VerificationContext:
    if name not in _CACHE:
        _CACHE[name] = VerificationContext(builtin_instance(name))
    return _CACHE[name]


@pytest.fixture(scope="session")
def ctx_i2():
    return context("i2-swap")


@pytest.fixture(scope="session")
def ctx_z2():
    return context("z2-trivial")


@pytest.fixture(scope="session")
def ctx_z3():
    return context("z3-trivial")


@pytest.fixture(scope="session")
def ctx_ex28():
    return context("ex2.8")


@pytest.fixture(scope="session")
def ctx_ex28_gf2():
    return context("ex2.8-gf2")

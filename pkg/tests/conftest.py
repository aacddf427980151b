import pytest
from loguru import logger

from racg_anosov.core import RunContext
from racg_anosov.racg import builtin_system, parse_nerve
from racg_anosov.vinberg import build_rep, cartan_from_rows, geometric_rep, random_fully_nondegenerate


@pytest.fixture(autouse=True)
def clean_context():
    RunContext.reset(full_reset=True)
    RunContext.set_threads(1)
    yield
    RunContext.reset(full_reset=True)


@pytest.fixture(autouse=True)
def quiet_logs():
    logger.remove()
    yield


@pytest.fixture
def fig_a1():
    return builtin_system("fig-a1")


@pytest.fixture
def fig_a2():
    return builtin_system("fig-a2")


@pytest.fixture
def pentagon():
    return builtin_system("pentagon")


@pytest.fixture
def dihedral():
    return builtin_system("dihedral")


@pytest.fixture
def free3():
    return builtin_system("free3")


@pytest.fixture
def klein():
    # Z/2 × Z/2
    return parse_nerve({"generators": ["a", "b"], "edges": [["a", "b"]]})


@pytest.fixture
def hyperbolic_dihedral(dihedral):
    return build_rep(cartan_from_rows(dihedral, [[2, -3], [-2, 2]]))


@pytest.fixture
def unipotent_dihedral(dihedral):
    return geometric_rep(dihedral)


@pytest.fixture
def free3_rep(free3):
    return geometric_rep(free3)


@pytest.fixture(scope="session")
def fig_a1_rep():
    return build_rep(random_fully_nondegenerate(builtin_system("fig-a1"), 1))


@pytest.fixture(scope="session")
def fig_a2_rep():
    return build_rep(random_fully_nondegenerate(builtin_system("fig-a2"), 1))


@pytest.fixture(scope="session")
def pentagon_rep():
    return build_rep(random_fully_nondegenerate(builtin_system("pentagon"), 1))

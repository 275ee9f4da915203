import pytest

from himena_mdim.constructions import complete, cycle, g6, path, star


@pytest.fixture(scope="session", autouse=True)
def install_plugin(request: pytest.FixtureRequest):
    import himena_mdim.commands  # noqa: F401
    import himena_mdim.io  # noqa: F401


@pytest.fixture
def g6_graph():
    return g6()


@pytest.fixture
def p4():
    return path(4)


@pytest.fixture
def k3():
    return complete(3)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def star3():
    return star(3)

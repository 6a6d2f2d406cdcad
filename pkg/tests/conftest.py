import pytest

from cell24 import analyze_cusps, build_polytope, load_manifold


@pytest.fixture(scope="session")
def P():
    return build_polytope()


@pytest.fixture(scope="session")
def m3():
    return load_manifold("manifold3.rt")


@pytest.fixture(scope="session")
def m1011():
    return load_manifold("manifold1011.rt")


@pytest.fixture(scope="session")
def cusps3(m3):
    return analyze_cusps(m3)


@pytest.fixture(scope="session")
def cusps1011(m1011):
    return analyze_cusps(m1011)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)

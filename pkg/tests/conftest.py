import pytest

from scx import corpus
from scx.profile import Profile

XYZ = ("x", "y", "z")


def columns_profile(*cols, alts=XYZ):
    return Profile.from_columns([list(c) for c in cols], alts)


@pytest.fixture
def unanimous():
    return columns_profile("xyz", "xyz")


@pytest.fixture
def cycle():
    return columns_profile("xyz", "yzx", "zxy")


@pytest.fixture
def ex2():
    return corpus.example2()


@pytest.fixture
def ex3():
    return corpus.example3()


@pytest.fixture
def ex5():
    return corpus.example5()


@pytest.fixture
def ex6():
    return corpus.example6()


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)

import pytest

import reference_data


@pytest.fixture
def E1():
    return reference_data.e1()


@pytest.fixture
def E2():
    return reference_data.e2()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n][1])

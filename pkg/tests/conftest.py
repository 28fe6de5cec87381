import pytest

from ildt.graphio import builtin_seed

SEED_NAMES = ("c3", "c4", "k1", "k2bi", "dag2")


@pytest.fixture(params=SEED_NAMES)
def seed(request):
    return request.param, builtin_seed(request.param)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])

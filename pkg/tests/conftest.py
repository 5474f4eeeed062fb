import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "fixed",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "fixed"))

_LINES = pytest.StashKey[list]()


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=0, help="seed for randomized law checks")


def pytest_configure(config):
    config.lsi_seed = config.getoption("--seed")
    config.stash[_LINES] = []


@pytest.fixture
def acceptance_log(request):
    return request.config.stash[_LINES]


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)

import numpy as np
import pytest

from ceecsim import NetworkConfig, RadioParams, deploy


@pytest.fixture
def radio():
    return RadioParams()


@pytest.fixture
def default_config():
    return NetworkConfig()


@pytest.fixture
def fresh_network(default_config):
    return deploy(default_config, np.random.default_rng(default_config.seed))


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("tests.test_acceptance")
    if module is None or not module.REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(module.REPORT, key=lambda l: int(l.split("criterion ")[1].split(":")[0])):
        terminalreporter.write_line(line)

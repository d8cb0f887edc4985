import numpy as np
import pytest

import helpers


@pytest.fixture
def rng():
    return np.random.default_rng(20170321)


def pytest_terminal_summary(terminalreporter):
    if not helpers.ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in helpers.ACCEPTANCE:
        terminalreporter.write_line(line)

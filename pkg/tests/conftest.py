import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def acceptance_record():
    """Collector for one verdict line per acceptance criterion; the lines
    are replayed in the terminal summary so they are visible even when
    output capture is on."""
    return _ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

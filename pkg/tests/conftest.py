import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dked_blockage import AntennaPattern, LinkGeometry  # noqa: E402


@pytest.fixture(scope="session")
def link():
    return LinkGeometry(separation_m=5.0, tx_height_m=1.4, rx_height_m=1.4, carrier_hz=73.5e9)


@pytest.fixture(scope="session")
def horn():
    return AntennaPattern.from_hpbw_deg(15.0)


_CRITERIA: dict[int, tuple[str, str]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; the outcome line is printed at the end."""

    def record(number: int, label: str):
        _CRITERIA[number] = (label, request.node.nodeid)

    return record


_OUTCOMES: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _OUTCOMES[report.nodeid] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        label, nodeid = _CRITERIA[number]
        terminalreporter.write_line(f"[{_OUTCOMES.get(nodeid, 'FAIL')}] criterion {number:2d}: {label}")

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hypersym.corpus import HyperflowerParams, enzyme_fixtures, hyperflower  # noqa: E402

DATA = Path(__file__).parent / "data"


@pytest.fixture
def enzyme():
    return enzyme_fixtures()[0]


@pytest.fixture
def enzyme_rev():
    return enzyme_fixtures()[1]


@pytest.fixture
def flower():
    return hyperflower(HyperflowerParams(5, 3, 10))


@pytest.fixture
def data_dir():
    return DATA


ACCEPTANCE: dict = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion's outcome for the terminal summary."""
    number = request.node.get_closest_marker("criterion").args[0]
    ACCEPTANCE[number] = ["FAIL", request.node.name, ""]
    return ACCEPTANCE[number]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and report.when == "call":
        entry = ACCEPTANCE.setdefault(marker.args[0], ["FAIL", item.name, ""])
        entry[0] = "PASS" if report.passed else "FAIL"
        if report.failed:
            entry[2] = str(call.excinfo.value).splitlines()[0][:160] if call.excinfo else ""


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        status, name, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {name}  {detail}".rstrip())

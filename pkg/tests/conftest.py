import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    entry = _criteria.setdefault(number, {"title": title, "ok": True, "seconds": 0.0})
    entry["ok"] = entry["ok"] and call.excinfo is None
    if call.when == "call":
        entry["seconds"] += call.duration


@pytest.hookimpl(trylast=True)
def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        e = _criteria[number]
        status = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {e['title']}  ({e['seconds']:.2f} s)")

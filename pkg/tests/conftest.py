import os
import sys
from collections import defaultdict
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"

_criteria: dict[int, str] = {}
_outcomes: dict[int, list[str]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test covers")
    config.addinivalue_line("markers", "after_properties: run once the property suite has finished")


PROPERTY_FILE = "test_properties.py"
_property_outcomes: list[str] = []
_property_collected = False


def pytest_collection_modifyitems(items):
    for item in items:
        for mark in item.iter_markers("criterion"):
            _criteria[mark.args[0]] = mark.args[1]
    # the roll-up of the property suite has to run after the suite itself
    last = [item for item in items if item.get_closest_marker("after_properties")]
    items[:] = [item for item in items if item not in last] + last


def pytest_collection_finish(session):
    # the final list, after -k / --deselect filtering
    global _property_collected
    _property_collected = any(item.path.name == PROPERTY_FILE for item in session.items)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.path.name == PROPERTY_FILE and (report.when == "call" or report.outcome != "passed"):
        _property_outcomes.append(report.outcome)
    marks = list(item.iter_markers("criterion"))
    if not marks:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        for mark in marks:
            _outcomes[mark.args[0]].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        results = _outcomes.get(number, [])
        ok = bool(results) and all(r == "passed" for r in results)
        status = "PASS" if ok else ("NOT RUN" if not results else "FAIL")
        terminalreporter.write_line(
            f"criterion {number:2d}: {status}  {_criteria[number]}  ({len(results)} checks)")


@pytest.fixture
def data_path():
    return DATA


@pytest.fixture
def property_outcomes():
    """Outcomes of the property suite in this session, or None if it was not collected."""
    return list(_property_outcomes) if _property_collected else None

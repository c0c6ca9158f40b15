import pathlib

import pytest

from hypercut import build
from hypercut.constructions import regular_with_weak_cut_edge, two_vertex_example

FIXTURES = pathlib.Path(__file__).parent / "fixtures"

_criteria: list[tuple[str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(tag, text): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = "PASS" if report.passed else "FAIL"
        _criteria.append((mark.args[0], status, mark.args[1]))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    merged: dict[str, tuple[str, str]] = {}
    for tag, status, text in _criteria:
        previous = merged.get(tag, ("PASS", text))[0]
        merged[tag] = ("FAIL" if "FAIL" in (previous, status) else "PASS", text)
    for tag in sorted(merged, key=lambda t: int(t[1:])):
        status, text = merged[tag]
        terminalreporter.write_line(f"{status} {tag}: {text}")


@pytest.fixture
def two_vertex():
    return two_vertex_example()


@pytest.fixture
def weak_cut_n2():
    return regular_with_weak_cut_edge(2)


@pytest.fixture
def single_edge():
    return build(["a", "b"], [("e1", ["a", "b"])])


@pytest.fixture
def fixtures_dir():
    return FIXTURES

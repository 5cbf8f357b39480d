import pytest

from tempspan import TemporalBiClique, TemporalClique

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion covered by the test")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marks = dict(report.user_properties)
    if "criterion" not in marks:
        return
    entry = _criteria.setdefault(marks["criterion"], {"title": marks["title"], "ok": True, "notes": []})
    entry["ok"] &= report.passed
    if "detail" in marks:
        entry["notes"].append(marks["detail"])


@pytest.fixture(autouse=True)
def _criterion_props(request, record_property):
    mark = request.node.get_closest_marker("criterion")
    if mark is not None:
        record_property("criterion", mark.args[0])
        record_property("title", mark.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        entry = _criteria[n]
        status = "PASS" if entry["ok"] else "FAIL"
        line = f"criterion {n}: {status}  {entry['title']}"
        if entry["notes"]:
            line += "  [" + "; ".join(entry["notes"]) + "]"
        terminalreporter.write_line(line)


@pytest.fixture
def two_by_two():
    """a0b0=1, a0b1=2, a1b0=3, a1b1=4."""
    return TemporalBiClique([[1, 2], [3, 4]])


@pytest.fixture
def k3():
    """v0v1=1, v0v2=2, v1v2=3."""
    return TemporalClique.from_edge_labels(3, {(0, 1): 1, (0, 2): 2, (1, 2): 3})

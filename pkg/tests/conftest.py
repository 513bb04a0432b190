import pytest

_CRITERIA = {}


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion; the outcome is printed in the summary."""
    def record(label, detail=""):
        _CRITERIA[request.node.nodeid] = [label, detail, None]
    yield record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    entry = _CRITERIA.get(item.nodeid)
    if entry is not None and rep.when == "call":
        entry[2] = rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, detail, passed in _CRITERIA.values():
        status = "PASS" if passed else "FAIL"
        line = f"{status}  {label}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)

import pytest

from nscauchy import divdiff


@pytest.fixture(autouse=True)
def _full_remultiplication(request, monkeypatch):
    # re-check every divided difference by multiplying back, except in the
    # timed acceptance runs where the local rules' own check suffices
    if request.node.get_closest_marker("acceptance") is None:
        monkeypatch.setattr(divdiff, "VERIFY", True)
    yield


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)

import time

import pytest

_verdicts = []
_outcome = pytest.StashKey[str]()


class Criterion:
    def __init__(self, number, title):
        self.number, self.title = number, title
        self.detail, self.outcome, self.seconds = "", "failed", 0.0

    def note(self, detail):
        self.detail = detail


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; the verdict is printed in the summary."""
    crit = Criterion(*request.node.get_closest_marker("criterion").args)
    t0 = time.perf_counter()
    yield crit
    crit.seconds = time.perf_counter() - t0
    crit.outcome = request.node.stash.get(_outcome, "failed")
    _verdicts.append(crit)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    report = (yield).get_result()
    if report.when == "call":
        item.stash[_outcome] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for c in sorted(_verdicts, key=lambda c: c.number):
        verdict = "PASS" if c.outcome == "passed" else "FAIL"
        line = f"{verdict} {c.number}. {c.title} ({c.seconds:.1f}s)"
        if c.detail:
            line += f": {c.detail}"
        terminalreporter.write_line(line)

import time

import pytest

_acceptance: list[tuple[str, str, float]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call":
        item.call_report = report


@pytest.fixture
def criterion(request):
    """Times an acceptance test and logs one PASS/FAIL line for the summary."""
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    report = getattr(request.node, "call_report", None)
    status = "PASS" if report is not None and report.passed else "FAIL"
    title = (request.node.function.__doc__ or request.node.name).strip().splitlines()[0]
    _acceptance.append((status, title, elapsed))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for status, title, elapsed in _acceptance:
        terminalreporter.write_line(f"{status}  {title}  ({elapsed:.2f}s)")

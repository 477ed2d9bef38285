"""Collects one verdict line per acceptance criterion and prints them after the run."""
import pytest

CRITERIA: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    number = request.node.get_closest_marker("criterion").args[0]

    def record(ok: bool, detail: str = "") -> None:
        CRITERIA[number] = (ok, detail)
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}")
    yield record
    if number not in CRITERIA:
        CRITERIA[number] = (False, "test did not finish")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion covered by the test")


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        ok, detail = CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")

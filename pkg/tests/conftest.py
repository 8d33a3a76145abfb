import math

import pytest

from ellint2 import ToleranceConfig


def rel(x, ref):
    return abs(x - ref) / abs(ref) if ref else abs(x)


@pytest.fixture
def cfg():
    return ToleranceConfig()


def pytest_report_header(config):
    from ellint2 import BACKEND

    return f"ellint2 kernel backend: {BACKEND}"


PI2 = math.pi ** 2


ACCEPTANCE_LINES: dict[int, str] = {}


def record_criterion(number: int, ok: bool, detail: str, report_only: bool = False) -> None:
    status = "PASS" if ok else ("FAIL (report-only, not enforced)" if report_only else "FAIL")
    ACCEPTANCE_LINES[number] = f"criterion {number}: {status}  {detail}"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])

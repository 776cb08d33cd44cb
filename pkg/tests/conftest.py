import pytest

_ACCEPTANCE = []


@pytest.fixture
def record():
    """Record one acceptance criterion outcome; printed in the terminal summary."""

    def _record(number, ok, detail):
        _ACCEPTANCE.append((number, ok, detail))
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(_ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")

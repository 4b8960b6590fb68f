import pytest

# (label, passed, detail) lines collected by test_acceptance.py
ACCEPTANCE_LINES: list[tuple[str, bool, str]] = []


def _line(label: str, ok: bool, detail: str) -> str:
    return f"criterion {label:<10} {'PASS' if ok else 'FAIL'}  {detail}"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(_line(label, ok, detail))


@pytest.fixture
def acceptance():
    def record(label: str, ok: bool, detail: str) -> bool:
        print(_line(label, ok, detail))
        ACCEPTANCE_LINES.append((label, ok, detail))
        return ok

    return record

from importlib.resources import files

import pytest

SAMPLES = files("hermes") / "samples"

_acceptance_lines = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion, shown in the terminal summary."""

    def record(number, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
        _acceptance_lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)

import pathlib

import pytest

from cyclomap.gf_core import preset

FIXTURES = pathlib.Path(__file__).parent / "fixtures"

_acceptance_lines: list[str] = []


@pytest.fixture(scope="session")
def F9():
    return preset("F9")


@pytest.fixture(scope="session")
def F25():
    return preset("F25")


@pytest.fixture(scope="session")
def F64():
    return preset("F64")


@pytest.fixture
def criterion_report():
    """Record a one-line PASS/FAIL per acceptance criterion; printed at session end."""
    def record(label: str, ok: bool, detail: str = "") -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] {label}"
        if detail:
            line += f" ({detail})"
        _acceptance_lines.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)

from pathlib import Path

import pytest

from chroma.exactmat import IntMatrix

GOLDEN = Path(__file__).parent / "golden"


def golden_text(name):
    return (GOLDEN / name).read_text(encoding="utf-8")


def golden_matrix(name):
    return IntMatrix.from_rows(
        [[int(x) for x in line.split()] for line in golden_text(name).splitlines() if line.strip()]
    )


@pytest.fixture
def R5():
    return golden_matrix("R5.txt")


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok in sorted(RESULTS):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title}")

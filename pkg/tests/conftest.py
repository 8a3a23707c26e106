from fractions import Fraction as F

import pytest

from simlat.exact import LatticeSpec

# tau in {i, (1+i sqrt3)/2, 2i, i sqrt3, 3i/2, 3i, 5i, 7i, i sqrt6}
BATTERY = {
    "i": LatticeSpec.tau(0, 1),
    "rho": LatticeSpec.tau(F(1, 2), F(3, 4)),
    "2i": LatticeSpec.tau(0, 4),
    "i*sqrt3": LatticeSpec.tau(0, 3),
    "3i/2": LatticeSpec.tau(0, F(9, 4)),
    "3i": LatticeSpec.tau(0, 9),
    "5i": LatticeSpec.tau(0, 25),
    "7i": LatticeSpec.tau(0, 49),
    "i*sqrt6": LatticeSpec.tau(0, 6),
}

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def battery():
    return BATTERY


@pytest.fixture
def report():
    def record(number: int, text: str, ok: bool):
        ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {text}")

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

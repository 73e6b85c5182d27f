import pytest

from morse_dk.model import PotentialSpec

# filled by tests/test_acceptance.py, printed once at the end of the session
ACCEPTANCE_LINES: dict[str, str] = {}


@pytest.fixture(scope="session")
def morse3():
    """Hermitian Morse well with lambda = 3: levels -6.25, -2.25, -0.25."""
    return PotentialSpec.hermitian(1.0, 6.0, alpha=1.0, mass=0.5)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES, key=lambda k: int(k.split("-")[1])):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])

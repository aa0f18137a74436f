import sys
from contextlib import contextmanager
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from tmlambda.compiler import compile_machine  # noqa: E402
from tmlambda.machine import corpus  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"
CRITERIA = {}


@contextmanager
def criterion(number, label):
    """Record a pass/fail line for an acceptance criterion."""
    try:
        yield
    except BaseException as e:
        CRITERIA[number] = (False, label, str(e).splitlines()[0] if str(e) else type(e).__name__)
        raise
    CRITERIA.setdefault(number, (True, label, ""))


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        ok, label, why = CRITERIA[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n}. {label}" + (f" -- {why}" if why else ""))


@pytest.fixture(scope="session")
def machines():
    return {M.name: M for M in corpus()}


@pytest.fixture(scope="session")
def compiled(machines):
    return {name: compile_machine(M) for name, M in machines.items()}

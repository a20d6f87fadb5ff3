import random

import pytest

from braidseed.rootsys import build_dynkin, parse_type


@pytest.fixture(scope="session")
def types():
    return {name: parse_type(name) for name in ("A1", "A2", "A3", "B2", "C2", "G2", "B3", "C3", "D4", "F4")}


@pytest.fixture
def rng():
    return random.Random(20261016)


def T(name):
    return parse_type(name)


_ACCEPTANCE = []


@pytest.fixture
def record():
    """record(n, ok, text): one acceptance line, echoed in the terminal summary."""
    def _record(n, ok, text):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {n:>2}: {text}"
        _ACCEPTANCE.append((n, line))
        print(line)
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)

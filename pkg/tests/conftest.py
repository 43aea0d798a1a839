"""Shared fixtures: the acceptance criterion recorder.

Each acceptance test wraps its body in `criterion(name, budget)`; the
terminal summary then prints one pass/fail line per criterion with the
measured runtime.
"""

import time
from contextlib import contextmanager

import pytest

_CRITERIA = []


@pytest.fixture
def criterion():
    @contextmanager
    def run(name: str, budget: float):
        start = time.perf_counter()
        try:
            yield
        except BaseException:
            _CRITERIA.append((name, False, time.perf_counter() - start, budget))
            raise
        elapsed = time.perf_counter() - start
        within = elapsed < budget
        _CRITERIA.append((name, within, elapsed, budget))
        if not within:
            pytest.fail(f"{name}: {elapsed:.1f}s exceeds the {budget:.0f}s budget")

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, elapsed, budget in _CRITERIA:
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(
            f"{status}  {name}  ({elapsed:.2f}s, budget {budget:.0f}s)"
        )

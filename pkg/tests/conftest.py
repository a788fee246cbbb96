import time
from contextlib import contextmanager

import pytest

ACCEPTANCE: dict[int, tuple[str, str, float]] = {}


@pytest.fixture
def criterion():
    """Record one acceptance criterion: ``with criterion(n, title, limit):``.

    The body's wall time must stay under ``limit`` seconds.
    """

    @contextmanager
    def run(number, title, limit):
        start = time.perf_counter()
        ACCEPTANCE[number] = ("FAIL", title, 0.0)
        try:
            yield
        finally:
            elapsed = time.perf_counter() - start
            ACCEPTANCE[number] = ("FAIL", title, elapsed)
        assert elapsed < limit, f"criterion {number} took {elapsed:.2f}s, limit {limit}s"
        ACCEPTANCE[number] = ("PASS", title, elapsed)

    return run


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        status, title, elapsed = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d} {status}  {elapsed:6.2f}s  {title}")

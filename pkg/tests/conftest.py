import time
from contextlib import contextmanager

import pytest

_RESULTS = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Context manager that records one PASS/FAIL line per acceptance criterion."""
    results = request.config.stash.setdefault(_RESULTS, [])

    @contextmanager
    def check(label):
        start = time.perf_counter()
        try:
            yield
        except BaseException as exc:
            line = f"FAIL  {label}  ({time.perf_counter() - start:.1f}s): {type(exc).__name__}"
            results.append(line)
            print(line)
            raise
        line = f"PASS  {label}  ({time.perf_counter() - start:.1f}s)"
        results.append(line)
        print(line)

    return check


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS, [])
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results:
            terminalreporter.write_line(line)

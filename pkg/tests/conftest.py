import pytest
from hypothesis import settings

settings.register_profile("pisimp", deadline=None, max_examples=200)
settings.load_profile("pisimp")

VERDICTS = pytest.StashKey[list]()


@pytest.fixture
def verdict(request):
    """Record a one-line PASS/FAIL for an acceptance criterion.

    Usage: ``with verdict(3, "rewriting"): ...``; the line is printed
    immediately and again in the terminal summary.
    """
    import contextlib
    import time

    lines = request.config.stash.setdefault(VERDICTS, [])

    @contextlib.contextmanager
    def record(number, title):
        start = time.perf_counter()
        status = "FAIL"
        try:
            yield
            status = "PASS"
        finally:
            line = f"criterion {number}: {status}  {title}  ({time.perf_counter() - start:.1f} s)"
            lines.append(line)
            print(line)

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(VERDICTS, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)

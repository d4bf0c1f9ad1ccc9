import time

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
    derandomize=True,
)
settings.load_profile("default")

# acceptance criteria report here; printed once at the end of the session
CRITERIA = {}


class Criterion:
    """Times one acceptance criterion and records its outcome."""

    def __init__(self, number: int, title: str, limit: float):
        self.number, self.title, self.limit = number, title, limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and elapsed < self.limit
        CRITERIA[self.number] = (self.title, ok, elapsed, self.limit)
        if exc_type is None:
            assert elapsed < self.limit, f"criterion {self.number} took {elapsed:.1f}s (limit {self.limit}s)"
        return False


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        title, ok, elapsed, limit = CRITERIA[n]
        terminalreporter.write_line(
            f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s, limit {limit:g}s)")

import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line per criterion; call before asserting."""

    def record(label: str, passed: bool, detail: str = "") -> bool:
        _ACCEPTANCE.append((label, bool(passed), detail))
        return bool(passed)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for label, passed, detail in sorted(_ACCEPTANCE, key=lambda t: _key(t[0])):
        tr.write_line(f"{'PASS' if passed else 'FAIL'}  {label:<34} {detail}")


def _key(label: str):
    head = label.split()[0].rstrip("abcdefgh")
    try:
        return (int(head), label)
    except ValueError:
        return (999, label)

from __future__ import annotations

from collections.abc import Callable

import pytest

#: criterion number -> (title, passed, detail), filled by the acceptance tests
RESULTS: dict[int, tuple[str, bool, str]] = {}
TITLES: dict[int, str] = {}


@pytest.fixture
def criterion(request: pytest.FixtureRequest) -> Callable[[bool, str], None]:
    marker = request.node.get_closest_marker("criterion")
    assert marker is not None, "acceptance tests need @pytest.mark.criterion(n, title)"
    number, title = marker.args
    TITLES[number] = title

    def record(passed: bool, detail: str) -> None:
        RESULTS[number] = (title, bool(passed), detail)

    return record


def pytest_configure(config: pytest.Config) -> None:
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter, exitstatus, config) -> None:  # noqa: ARG001
    if not TITLES:
        return

    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(TITLES):
        title, passed, detail = RESULTS.get(number, (TITLES[number], False, "no result recorded"))
        tr.write_line(f"[{'PASS' if passed else 'FAIL'}] {number:2d}. {title}: {detail}")

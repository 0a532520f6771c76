"""Shared pytest plumbing.

The acceptance tests record one pass line per criterion; the terminal
summary hook replays them after the run, outside output capture, so they
are visible in plain `pytest` output and in teed logs.
"""

_CRITERION_LINES = []


def record_criterion(line: str) -> None:
    print(line)
    _CRITERION_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERION_LINES:
            terminalreporter.write_line(line)

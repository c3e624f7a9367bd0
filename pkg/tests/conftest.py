"""Shared pytest wiring for the suite.

The acceptance tests record one verdict line per criterion; this hook
replays them in the terminal summary so they are visible even under
output capture.
"""

acceptance_lines = []


def pytest_terminal_summary(terminalreporter):
    if not acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance_lines:
        terminalreporter.write_line(line)

"""Shared test plumbing.

The acceptance module registers one human-readable line per criterion;
they are echoed after the run so `pytest -v` output always ends with
the full pass/fail slate regardless of output capturing.
"""

acceptance_lines: list[str] = []


def record_acceptance(line: str) -> None:
    acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not acceptance_lines:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for line in acceptance_lines:
        terminalreporter.write_line(line)

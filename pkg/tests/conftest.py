"""Shared pytest plumbing: surfaces the acceptance-criterion pass/fail lines
in the terminal summary, where capture cannot swallow them."""

CRITERION_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERION_LINES:
            terminalreporter.write_line(line)

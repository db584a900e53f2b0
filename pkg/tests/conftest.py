from helpers import ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    # surface the acceptance-criteria verdicts even when every test passes
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

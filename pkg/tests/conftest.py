def pytest_terminal_summary(terminalreporter):
    # Acceptance verdicts are collected by test_acceptance and echoed here so
    # they show up even when pytest captures stdout.
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "VERDICTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)

import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    outcomes = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            match = _CRITERION.search(report.nodeid)
            if not match or report.when not in ("call", "setup"):
                continue
            key = (int(match.group(1)), match.group(2))
            ok = status == "passed"
            outcomes[key] = outcomes.get(key, True) and ok
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for (number, name), ok in sorted(outcomes.items()):
        terminalreporter.write_line(f"criterion {number} {name.replace('_', ' ')}: {'PASS' if ok else 'FAIL'}")

from __future__ import annotations

import re

_CRITERION = re.compile(r"test_criterion_(\d+)")
_results: dict[int, bool] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if m and report.when == "call":
        k = int(m.group(1))
        _results[k] = _results.get(k, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_results):
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if _results[k] else 'FAIL'}")

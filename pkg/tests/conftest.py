import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_criteria: dict[str, list[str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for mark in report.user_properties:
        if mark[0] == "criterion":
            _criteria.setdefault(mark[1], []).append(report.outcome)


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_setup(item):
    for m in item.iter_markers("criterion"):
        item.user_properties.append(("criterion", m.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")

    def order(key):
        num = "".join(ch for ch in key if ch.isdigit())
        return (int(num), key)

    for key in sorted(_criteria, key=order):
        outcomes = _criteria[key]
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {key}: {status} ({len(outcomes)} test{'s' if len(outcomes) != 1 else ''})")

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[str, list[bool]] = {}


def pytest_runtest_logreport(report):
    marker = "test_acceptance.py::test_criterion_"
    if marker not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split(marker, 1)[1]
        number = name.split("_", 1)[0]
        _criteria.setdefault(number, []).append(report.outcome == "passed")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria, key=int):
        results = _criteria[number]
        status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status} ({sum(results)}/{len(results)} checks)")

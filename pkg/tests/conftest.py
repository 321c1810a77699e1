import pytest

from commprob.verify import (
    property_groups,
    table_groups,
    verify_char_table,
    verify_properties,
    verify_rusin_corrections,
)

_CRITERIA: dict[str, tuple[str, str]] = {}


@pytest.fixture(scope="session")
def property_report():
    return verify_properties(property_groups(100))


@pytest.fixture(scope="session")
def table_report():
    return verify_char_table(table_groups(100))


@pytest.fixture(scope="session")
def remarks_report():
    return verify_rusin_corrections()


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or report.failed:
        name = report.nodeid.split("::")[-1]
        prev = _CRITERIA.get(name)
        if prev is None or prev[0] == "PASS":
            _CRITERIA[name] = ("PASS" if report.passed else "FAIL", report.nodeid)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA, key=lambda n: int(n.split("_")[2])):
        status, _ = _CRITERIA[name]
        number = name.split("_")[2]
        label = " ".join(name.split("_")[3:])
        terminalreporter.write_line(f"criterion {number}: {status}  {label}")

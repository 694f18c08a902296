import pytest
from hypothesis import settings

from signedshift.words import Signature

settings.register_profile("repo", derandomize=True, deadline=None, max_examples=200)
settings.load_profile("repo")


# acceptance summary: one line per criterion at the end of the run
_CRITERIA = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if "test_acceptance" not in report.nodeid or not name.startswith("test_criterion_"):
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA, key=lambda s: int(s.split("_")[2])):
        status = "PASS" if _CRITERIA[name] == "passed" else "FAIL"
        number = name.split("_")[2]
        label = " ".join(name.split("_")[3:])
        terminalreporter.write_line(f"criterion {number}: {status}  ({label})")


@pytest.fixture
def tent():
    return Signature("+-")

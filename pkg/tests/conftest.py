import json

import pytest

from qfisher.cli import main

ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE_KEY] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(line)


@pytest.fixture
def record_criterion(request):
    """Append a one-line PASS/FAIL verdict to the end-of-run summary (and stdout)."""

    def record(number, title, passed, detail):
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title}  [{detail}]"
        print(line)
        request.config.stash[ACCEPTANCE_KEY].append(line)
        return passed

    return record


def _run_verify(tmp_path_factory, *extra):
    out = tmp_path_factory.mktemp("verify") / "report.json"
    code = main(["verify", "--json", "--output", str(out), *extra])
    return code, json.loads(out.read_text())


@pytest.fixture(scope="session")
def verify_default(tmp_path_factory):
    """Exit code and JSON report of ``qfisher verify`` with default settings."""
    return _run_verify(tmp_path_factory)


@pytest.fixture(scope="session")
def verify_fault(tmp_path_factory):
    """Exit code and JSON report of ``qfisher verify --fault real-phi``."""
    return _run_verify(tmp_path_factory, "--fault", "real-phi")

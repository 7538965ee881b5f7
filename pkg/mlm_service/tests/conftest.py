import pytest
from fastapi.testclient import TestClient

from mlm_service import MaskedBigramBackend, create_app

_ACCEPTANCE_RESULTS: list[tuple[str, str]] = []


@pytest.fixture(scope="session")
def backend():
    return MaskedBigramBackend()


@pytest.fixture
def client(backend):
    with TestClient(create_app(backend=backend)) as c:
        yield c


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call":
        marker = item.get_closest_marker("acceptance")
        if marker is not None:
            _ACCEPTANCE_RESULTS.append((marker.args[0], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("service acceptance")
    for label, outcome in _ACCEPTANCE_RESULTS:
        word = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{word}] {label}")

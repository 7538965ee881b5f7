import pytest

from slotperturb.corpus import Token, Utterance
from slotperturb.resources import default_bundle

_ACCEPTANCE_RESULTS: list[tuple[str, str]] = []


@pytest.fixture(scope="session")
def bundle():
    return default_bundle()


@pytest.fixture
def reference_sentence():
    """The worked example used throughout the docs: an AddToPlaylist
    command with a one-token and a multi-token chunk."""
    return Utterance(
        id="ref-1",
        intent="AddToPlaylist",
        tokens=(
            Token("add", "O"),
            Token("tune", "B-music_item"),
            Token("to", "O"),
            Token("sxsw", "B-playlist"),
            Token("fresh", "I-playlist"),
            Token("playlist", "I-playlist"),
        ),
    )


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
    terminalreporter.section("acceptance criteria")
    for label, outcome in _ACCEPTANCE_RESULTS:
        word = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{word}] {label}")

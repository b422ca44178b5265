"""Run the NF oracle gate first; verifier tests refuse to run if it failed."""
import pytest

_gate_failures = []


def pytest_collection_modifyitems(session, config, items):
    items.sort(key=lambda item: item.get_closest_marker("gate") is None)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.get_closest_marker("gate") and report.when == "call" and report.failed:
        _gate_failures.append(item.nodeid)


def pytest_runtest_setup(item):
    if item.get_closest_marker("needs_gate") and _gate_failures:
        pytest.fail(f"NF oracle gate failed earlier: {_gate_failures[0]}")


# -- acceptance summary ----------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

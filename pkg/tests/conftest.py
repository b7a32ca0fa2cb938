"""Shared pytest plumbing: collects acceptance results and prints one
pass/fail line per headline claim at the end of the run."""
import pytest

_acceptance_log: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def acceptance_recorder():
    def record(name: str, passed: bool, detail: str) -> None:
        _acceptance_log.append((name, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_log:
        return
    terminalreporter.write_sep("-", "acceptance checks")
    for name, passed, detail in _acceptance_log:
        tag = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{tag}] {name}: {detail}")
    n_pass = sum(1 for _, p, _ in _acceptance_log if p)
    terminalreporter.write_line(f"acceptance: {n_pass}/{len(_acceptance_log)} passed")

import pytest

_RESULTS = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_RESULTS] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(number, title, failures)``."""
    log = request.config.stash[_RESULTS]

    def record(number: int, title: str, failures: list[str]) -> None:
        status = "PASS" if not failures else "FAIL"
        detail = f" -- {failures[0]}" + (f" (+{len(failures) - 1} more)" if len(failures) > 1 else "") \
            if failures else ""
        line = f"criterion {number}: {status} {title}{detail}"
        log.append((number, line))
        print(line)
        assert not failures, "\n".join(failures)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    log = config.stash.get(_RESULTS, [])
    if not log:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(log):
        terminalreporter.write_line(line)

import pytest

_ACCEPTANCE: list[tuple[str, bool, str]] = []


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="also run slow tests (n = 8 enumeration)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def criterion():
    """Record one acceptance line; the summary hook prints them all."""

    def record(label: str, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE.append((label, bool(ok), detail))
        assert ok, f"{label} failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _ACCEPTANCE:
        line = f"{'PASS' if ok else 'FAIL'}  {label}"
        terminalreporter.write_line(f"{line}  ({detail})" if detail else line)

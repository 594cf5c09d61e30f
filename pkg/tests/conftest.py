import pytest

RESULTS: dict[int, str] = {}


def record(criterion: int, ok: bool, detail: str = "") -> None:
    line = f"CRITERION {criterion:2d}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip()
    RESULTS[criterion] = line
    print(line)


@pytest.fixture
def criterion():
    return record


def pytest_terminal_summary(terminalreporter):
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])

import pytest

_criteria = []


@pytest.fixture
def criterion():
    def record(number, description, ok):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {description}"
        _criteria.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.section("acceptance criteria")
        for line in _criteria:
            terminalreporter.write_line(line)

import pytest

from tianji.racing import Permutation

CRITERIA: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; the outcome is printed at session end."""
    name = request.node.name
    CRITERIA[name] = (False, "did not finish")

    def record(detail: str):
        CRITERIA[name] = (True, detail)

    yield record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in CRITERIA.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


def all_permutations(n):
    import itertools

    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]

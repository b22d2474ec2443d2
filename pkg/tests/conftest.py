import pytest

from quadzeta.base import CaseKind, QuadraticSetup

CASES = list(CaseKind)

_criteria: list[tuple[int, str, bool]] = []


@pytest.fixture
def criterion():
    """Record one acceptance verdict; the summary prints one line per criterion."""
    def record(number: int, text: str, ok: bool) -> bool:
        _criteria.append((number, text, ok))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, ok in sorted(_criteria):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} [{number}] {text}")


@pytest.fixture(params=CASES, ids=lambda c: c.value)
def case(request):
    return request.param


@pytest.fixture(params=[(c, p) for c in CASES for p in (3, 5)],
                ids=lambda cp: f"{cp[0].value}-p{cp[1]}")
def setup(request):
    kind, p = request.param
    return QuadraticSetup.preset(kind, p)

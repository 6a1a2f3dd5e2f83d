import pytest

from subnim.game import SubtractionSet

# small and structured subtraction sets used by the cross-checks
CORPUS = [
    (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (2, 5), (1, 2, 3), (1, 3, 4),
    (1, 4, 5), (2, 3, 5), (2, 4, 6), (2, 5, 7), (3, 4, 7), (2, 8, 10),
    (2, 12, 14), (2, 16, 18), (1, 3, 5), (1, 5, 9), (3, 9, 15), (4, 7, 11),
    (1, 2, 4, 8), (2, 7, 9, 13), (5, 6, 11),
]


@pytest.fixture(params=CORPUS, ids=lambda s: ",".join(map(str, s)))
def corpus_rule(request):
    return SubtractionSet(request.param)


@pytest.fixture
def paper3():
    return SubtractionSet.paper_family(3)


ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def acceptance():
    def record(label: str, ok: bool, detail: str = "") -> bool:
        ACCEPTANCE.append((label, ok, detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in ACCEPTANCE:
        line = f"{'PASS' if ok else 'FAIL'}  {label}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)

import pytest

from rectperm.genrect import gamma
from rectperm.perm import Permutation, all_permutations

EXAMPLE_PERM = Permutation.parse("8,13,7,5,11,2,14,6,15,9,10,3,1,4,12")


@pytest.fixture(scope="session")
def example_perm():
    return EXAMPLE_PERM


@pytest.fixture(scope="session")
def gamma_fibers():
    """n -> {GenRect: [permutations]} for n <= 7, computed once."""
    cache = {}

    def get(n):
        if n not in cache:
            fibers = {}
            for p in all_permutations(n):
                fibers.setdefault(gamma(p), []).append(p)
            cache[n] = fibers
        return cache[n]

    return get


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record and print one pass/fail line for an acceptance criterion, then assert it."""

    def check(label, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return check


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import itertools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fdiff.sets import ForbiddenSet, forbidden_distances  # noqa: E402

FIVE_FAMILIES = {
    "S": ForbiddenSet.squares(),
    "S+1": ForbiddenSet.squares_shift(1),
    "S+2": ForbiddenSet.squares_shift(2),
    "P": ForbiddenSet.primes(),
    "P-1": ForbiddenSet.primes_shift(-1),
}

_criteria: dict[int, tuple[str, bool, str]] = {}


def record_criterion(number: int, title: str, passed: bool, detail: str = "") -> None:
    _criteria[number] = (title, passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_criteria):
        title, passed, detail = _criteria[k]
        line = f"[{'PASS' if passed else 'FAIL'}] {k}. {title}"
        terminalreporter.write_line(line + (f" -- {detail}" if detail else ""))


def subset_search_d(X: ForbiddenSet, N: int) -> int:
    """D(X, N) by testing subsets of [N] from largest size down (tiny N only)."""
    bad = forbidden_distances(X, max(N - 1, 1))
    for k in range(N, 0, -1):
        for A in itertools.combinations(range(1, N + 1), k):
            if all(b - a not in bad for a, b in itertools.combinations(A, 2)):
                return k
    return 0


@pytest.fixture(params=sorted(FIVE_FAMILIES), ids=str)
def family(request):
    return FIVE_FAMILIES[request.param]

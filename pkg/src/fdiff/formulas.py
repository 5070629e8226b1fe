"""Closed forms and constructive lower bounds for D(X, N)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .sets import ForbiddenSet, contains, elements_in_range, forbidden_distances, residues_mod

Kind = Literal["exact", "lower_bound"]

# D(P, N) = ceil(N/4) + 1_E(N)
PRIMES_EXCEPTIONS = frozenset({2, 3, 4, 11, 12})
# D(S+1, N) = ceil(N/3) + 1_E(N) + 1_{9,24}(N)
SQUARES_PLUS_ONE_EXCEPTIONS = frozenset({2, 3, 5, 6, 8, 9, 10, 11, 12, 17, 18, 20, 21, 23, 24, 25, 26, 27})
SQUARES_PLUS_ONE_DOUBLE = frozenset({9, 24})

# Extremal (S+1)-sets for N = 24; every prefix A ∩ [N] is optimal for N in E.
_SQUARES_PLUS_ONE_24 = (1, 2, 5, 8, 9, 16, 17, 20, 23, 24)

_S2 = ForbiddenSet.squares_shift(2)


@dataclass(frozen=True)
class FormulaResult:
    n: int
    value: int
    kind: Kind
    witness: tuple[int, ...] | None = None


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_n(N: int) -> None:
    if N < 1:
        raise ValueError("N must be >= 1")


def primes_formula(N: int) -> FormulaResult:
    _check_n(N)
    if N in (2, 3, 4):
        witness = (1, 2)
    elif N in (11, 12):
        witness = (1, 2, 10, 11)
    else:
        witness = tuple(range(1, N + 1, 4))
    value = _ceil_div(N, 4) + (N in PRIMES_EXCEPTIONS)
    return FormulaResult(N, value, "exact", witness)


def squares_plus_one_formula(N: int) -> FormulaResult:
    _check_n(N)
    value = _ceil_div(N, 3) + (N in SQUARES_PLUS_ONE_EXCEPTIONS) + (N in SQUARES_PLUS_ONE_DOUBLE)
    if N in SQUARES_PLUS_ONE_EXCEPTIONS:
        witness = tuple(a for a in _SQUARES_PLUS_ONE_24 if a <= N)
    else:
        witness = tuple(range(1, N + 1, 3))
    return FormulaResult(N, value, "exact", witness)


def _s2_construction(j: int, limit: int) -> list[int]:
    """{1, 2, 6, ..., 4j-6} plus 4j-5 when that keeps it an (S+2)-set inside [limit]."""
    A = [1] + list(range(2, 4 * j - 5, 4))
    extra = 4 * j - 5
    if 1 < extra <= limit and not contains(_S2, 4 * j - 6):
        A.append(extra)
    return A


def squares_plus_two_lower_bound(N: int) -> FormulaResult:
    """Constructive lower bound on D(S+2, N), exceeding ceil(N/4) unless N = 4k^2 + 5."""
    _check_n(N)
    j = _ceil_div(N, 4)
    r = N % 4
    if r == 2:
        A = [1] + list(range(2, 4 * j - 5, 4)) + [N]
    elif r == 1:
        A = _s2_construction(j, N)
    else:
        # N+1 or N+2 is 1 mod 4 with ceiling j+1; its set already lies in [N]
        A = _s2_construction(j + 1, N)
    return FormulaResult(N, len(A), "lower_bound", tuple(A))


def greedy_construct(X: ForbiddenSet, N: int) -> FormulaResult:
    """Scan 1..N keeping n unless it differs from a kept element by a member of X."""
    _check_n(N)
    bad = sorted(forbidden_distances(X, N - 1))
    blocked = bytearray(N + 1)
    kept = []
    for n in range(1, N + 1):
        if blocked[n]:
            continue
        kept.append(n)
        for d in bad:
            if n + d > N:
                break
            blocked[n + d] = 1
    return FormulaResult(N, len(kept), "lower_bound", tuple(kept))


def greedy_bound(X: ForbiddenSet, N: int) -> float:
    """(N - 1) / (|X ∩ [N]| + 1), the guarantee met by ``greedy_construct``."""
    return (N - 1) / (len(elements_in_range(X, 1, N)) + 1)


def find_m_star(X: ForbiddenSet, cap: int) -> int | None:
    """Least m <= cap such that X holds no nonzero multiple of m."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    for m in range(1, cap + 1):
        if 0 not in residues_mod(X, m):
            return m
    return None


FORMULAS = {
    "primes": (primes_formula, ForbiddenSet.primes()),
    "squares+1": (squares_plus_one_formula, ForbiddenSet.squares_shift(1)),
    "squares+2-lb": (squares_plus_two_lower_bound, _S2),
}

"""Exact D(X, N) via the zero-neighborhood graph."""

from __future__ import annotations

from dataclasses import dataclass

from .clique import Budget, BudgetExhausted, CliqueOutcome, brute_force_max_clique, max_clique
from .formulas import greedy_construct
from .graph import zero_neighborhood_graph
from .sets import ForbiddenSet


@dataclass
class DValue:
    n: int
    d: int
    witness: list[int]
    outcome: CliqueOutcome


def clique_to_set(clique: list[int]) -> list[int]:
    """Offsets from 0 to the normal-form set {1} ∪ (C + 1)."""
    return [1] + sorted(c + 1 for c in clique)


def set_to_clique(A: list[int]) -> list[int]:
    """Normal-form set containing 1 to zero-neighborhood clique offsets."""
    return sorted(a - 1 for a in A if a != 1)


def compute_d(
    X: ForbiddenSet,
    N: int,
    budget: Budget | None = None,
    *,
    threads: int = 1,
    oracle: bool = False,
    seed: list[int] | None = None,
    upper: int | None = None,
    dynamic: bool = True,
) -> DValue:
    """D(X, N) with an optimal witness in normal form (contains 1).

    ``seed`` is an optional known X-set in [N] containing 1; the greedy set is
    used when it is larger.  ``upper`` is a known upper bound on D(X, N).
    """
    G = zero_neighborhood_graph(N, X)
    if oracle:
        out = brute_force_max_clique(G)
    else:
        best = list(greedy_construct(X, N).witness)
        if seed is not None and len(seed) > len(best):
            best = sorted(seed)
        try:
            out = max_clique(
                G,
                budget,
                initial=set_to_clique(best) or None,
                upper=None if upper is None else upper - 1,
                dynamic=dynamic,
                threads=threads,
            )
        except BudgetExhausted as exc:
            exc.best_set = clique_to_set(exc.best.witness)
            raise
    return DValue(N, out.size + 1, clique_to_set(out.witness), out)

"""Exact maximum clique search.

``max_clique`` is a bitset branch and bound in the MCQ/MaxCliqueDyn family:
candidates are greedily colored, color classes bound the clique that can
still be reached, and vertices are branched on in reverse color order.  At
levels where little of the search has happened so far, candidates are first
re-sorted by degree inside the candidate set (the "dynamic" ordering).

``brute_force_max_clique`` is a deliberately naive Bron-Kerbosch enumeration
on plain Python sets, kept separate as an oracle.
"""

from __future__ import annotations

import logging
import os
import time
from dataclasses import dataclass, field

from .graph import DiffGraph

log = logging.getLogger(__name__)

# Fraction of total steps under which a level gets degree re-sorting.
DEFAULT_TLIMIT = 0.025
BRUTE_FORCE_CAP = 32


@dataclass
class CliqueOutcome:
    size: int
    witness: list[int]
    nodes_expanded: int = 0
    elapsed: float = 0.0
    complete: bool = True


class BudgetExhausted(RuntimeError):
    """The node or time budget ran out; ``best`` holds the incumbent so far."""

    def __init__(self, best: CliqueOutcome, reason: str):
        super().__init__(f"clique search incomplete ({reason}); best size so far {best.size}")
        self.best = best
        self.reason = reason


@dataclass
class Budget:
    nodes: int | None = None
    seconds: float | None = None

    @classmethod
    def parse(cls, text: str | None) -> Budget:
        """``"5000"`` / ``"5000n"`` is a node budget, ``"30s"`` a time budget."""
        if not text:
            return cls()
        text = text.strip().lower()
        if text.endswith("s"):
            return cls(seconds=float(text[:-1]))
        return cls(nodes=int(text.rstrip("n")))

    @classmethod
    def from_env(cls) -> Budget:
        return cls.parse(os.environ.get("FDIFF_BUDGET"))


class _Stop(Exception):
    pass


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


@dataclass
class _Search:
    adj: list[int]
    best: list[int]
    upper: int | None = None
    node_limit: int | None = None
    deadline: float | None = None
    dynamic: bool = True
    tlimit: float = DEFAULT_TLIMIT
    shared: object = None  # multiprocessing Value holding the global incumbent size
    shared_nodes: object = None  # multiprocessing Value counting nodes across workers
    nodes: int = 0
    stop_reason: str | None = None
    _inv: list[int] = field(default_factory=list)
    _steps: list[int] = field(default_factory=list)
    _prev: list[int] = field(default_factory=list)
    _pk: int = 0

    def __post_init__(self) -> None:
        self._inv = [~(row | (1 << v)) for v, row in enumerate(self.adj)]
        depth = len(self.adj) + 2
        self._steps = [0] * depth
        self._prev = [0] * depth
        self._best_size = len(self.best)

    # coloring ------------------------------------------------------------

    def color(self, P: int, kmin: int) -> tuple[list[int], list[int]]:
        """Greedy coloring in fixed vertex order; only colors >= kmin returned."""
        inv = self._inv
        order: list[int] = []
        colors: list[int] = []
        k = 0
        U = P
        while U:
            k += 1
            Q = U
            if k >= kmin:
                while Q:
                    low = Q & -Q
                    v = low.bit_length() - 1
                    Q &= inv[v]
                    U ^= low
                    order.append(v)
                    colors.append(k)
            else:
                while Q:
                    low = Q & -Q
                    Q &= inv[low.bit_length() - 1]
                    U ^= low
        return order, colors

    def color_by_degree(self, P: int, kmin: int) -> tuple[list[int], list[int]]:
        """Coloring after re-sorting candidates by degree within P."""
        adj = self.adj
        verts = _bits(P)
        verts.sort(key=lambda v: -(adj[v] & P).bit_count())
        masks: list[int] = []
        members: list[list[int]] = []
        for v in verts:
            # first class with no neighbor of v
            row = adj[v]
            for k, mask in enumerate(masks):
                if not mask & row:
                    masks[k] = mask | (1 << v)
                    members[k].append(v)
                    break
            else:
                masks.append(1 << v)
                members.append([v])
        order: list[int] = []
        colors: list[int] = []
        for k in range(max(kmin, 1) - 1, len(members)):
            order.extend(members[k])
            colors.extend([k + 1] * len(members[k]))
        return order, colors

    # search --------------------------------------------------------------

    def _tick(self) -> None:
        self.nodes += 1
        if self.shared_nodes is None and self.node_limit is not None and self.nodes > self.node_limit:
            self.stop_reason = "node budget"
            raise _Stop
        if self.nodes & 1023 == 0:
            if self.shared_nodes is not None:
                with self.shared_nodes.get_lock():
                    self.shared_nodes.value += 1024
                    total = self.shared_nodes.value
                if self.node_limit is not None and total > self.node_limit:
                    self.stop_reason = "node budget"
                    raise _Stop
            if self.deadline is not None and time.monotonic() > self.deadline:
                self.stop_reason = "time budget"
                raise _Stop
            if self.shared is not None and self.shared.value > self._best_size:
                self._best_size = self.shared.value
                if self.upper is not None and self._best_size >= self.upper:
                    raise _Stop

    def _improve(self, clique: list[int]) -> None:
        self.best = list(clique)
        self._best_size = len(clique)
        if self.shared is not None:
            with self.shared.get_lock():
                if self.shared.value < self._best_size:
                    self.shared.value = self._best_size
                else:
                    self._best_size = self.shared.value
        if self.upper is not None and len(clique) >= self.upper:
            raise _Stop

    def expand(self, C: list[int], P: int, order: list[int], colors: list[int], level: int) -> None:
        steps, prev = self._steps, self._prev
        steps[level] += steps[level - 1] - prev[level]
        prev[level] = steps[level - 1]
        adj = self.adj
        depth = len(C)
        for idx in range(len(order) - 1, -1, -1):
            if depth + colors[idx] <= self._best_size:
                return
            v = order[idx]
            NP = P & adj[v]
            C.append(v)
            if NP:
                self._tick()
                kmin = self._best_size - depth  # child colors must exceed best - |C|
                self._pk += 1
                if self.dynamic and steps[level] < self.tlimit * self._pk:
                    o, c = self.color_by_degree(NP, kmin)
                else:
                    o, c = self.color(NP, kmin)
                steps[level] += 1
                if o:
                    self.expand(C, NP, o, c, level + 1)
            elif depth + 1 > self._best_size:
                self._improve(C)
            C.pop()
            P &= ~(1 << v)


def _initial_order(G: DiffGraph) -> list[int]:
    """Non-increasing degree, ties broken by smaller label."""
    return sorted(range(len(G)), key=lambda i: (-G.adj[i].bit_count(), G.labels[i]))


def _permute(G: DiffGraph, perm: list[int]) -> list[int]:
    pos = {old: new for new, old in enumerate(perm)}
    rows = []
    for old in perm:
        row = 0
        for j in _bits(G.adj[old]):
            row |= 1 << pos[j]
        rows.append(row)
    return rows


def _root(search: _Search, n: int) -> tuple[int, list[int], list[int]]:
    P = (1 << n) - 1
    kmin = len(search.best) + 1
    if search.dynamic:
        order, colors = search.color_by_degree(P, kmin)
    else:
        order, colors = search.color(P, kmin)
    return P, order, colors


def max_clique(
    G: DiffGraph,
    budget: Budget | None = None,
    *,
    initial: list[int] | None = None,
    upper: int | None = None,
    dynamic: bool = True,
    threads: int = 1,
) -> CliqueOutcome:
    """Maximum clique of ``G``.

    ``initial`` is a known clique (labels) used as the starting incumbent.
    ``upper`` is a caller-guaranteed upper bound on the clique number; the
    search stops as soon as a clique that large is found.  With ``threads > 1``
    top-level branches are spread over worker processes sharing the incumbent
    size; the size is scheduling independent but the witness is not.

    Raises ``BudgetExhausted`` (carrying the incumbent) if the budget runs out.
    In sequential mode the witness is the first maximum clique met in the
    deterministic search order (vertices by non-increasing degree, ties by
    smaller label), or the seed if nothing larger exists.
    """
    budget = budget or Budget()
    start = time.monotonic()
    n = len(G)
    if initial is not None and not G.is_clique(initial):
        raise ValueError("initial incumbent is not a clique of G")
    if n == 0:
        return CliqueOutcome(0, [], 0, 0.0)
    perm = _initial_order(G)
    rows = _permute(G, perm)
    pos = {G.labels[old]: new for new, old in enumerate(perm)}
    seed = [pos[lab] for lab in initial] if initial else [0]

    deadline = start + budget.seconds if budget.seconds is not None else None
    search = _Search(rows, seed, upper=upper, node_limit=budget.nodes, deadline=deadline, dynamic=dynamic)

    def outcome(best: list[int], nodes: int, complete: bool = True) -> CliqueOutcome:
        return CliqueOutcome(
            len(best), sorted(G.labels[perm[v]] for v in best), nodes, time.monotonic() - start, complete
        )

    if upper is not None and len(seed) >= upper:
        return outcome(seed, 0)
    if threads > 1 and n > 1:
        from ._parallel import run_parallel

        best, nodes, reason = run_parallel(search, threads)
        if reason:
            raise BudgetExhausted(outcome(best, nodes, False), reason)
        return outcome(best, nodes)
    try:
        P, order, colors = _root(search, n)
        search.expand([], P, order, colors, 1)
    except _Stop:
        if search.stop_reason:
            raise BudgetExhausted(outcome(search.best, search.nodes, False), search.stop_reason) from None
    return outcome(search.best, search.nodes)


def brute_force_max_clique(G: DiffGraph, cap: int = BRUTE_FORCE_CAP) -> CliqueOutcome:
    """Clique number by listing every maximal clique (Bron-Kerbosch, no pivot)."""
    if cap > BRUTE_FORCE_CAP:
        raise ValueError(f"cap may not exceed {BRUTE_FORCE_CAP}")
    n = len(G)
    if n > cap:
        raise ValueError(f"brute force oracle limited to {cap} vertices, got {n}")
    start = time.monotonic()
    nbrs = [set(_bits(row)) for row in G.adj]
    best: list[int] = []
    calls = 0

    def bk(R: list[int], P: set[int], X: set[int]) -> None:
        nonlocal best, calls
        calls += 1
        if not P and not X:
            if len(R) > len(best) or (len(R) == len(best) and sorted(R) < sorted(best)):
                best = list(R)
            return
        for v in sorted(P):
            bk(R + [v], P & nbrs[v], X & nbrs[v])
            P = P - {v}
            X = X | {v}

    bk([], set(range(n)), set())
    return CliqueOutcome(len(best), sorted(G.labels[v] for v in best), calls, time.monotonic() - start)

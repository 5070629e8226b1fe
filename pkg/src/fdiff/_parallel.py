"""Top-level branch splitting for ``max_clique`` across worker processes.

Workers share two synchronized cells: the incumbent size (monotone, only
grows) and a node counter for the budget.  The graph rows are inherited by
fork and never written.
"""

from __future__ import annotations

import multiprocessing as mp
from concurrent.futures import ProcessPoolExecutor

from .clique import _root, _Search, _Stop

_state: dict = {}


def _init(adj, upper, node_limit, deadline, dynamic, shared, shared_nodes) -> None:
    _state.update(
        adj=adj, upper=upper, node_limit=node_limit, deadline=deadline,
        dynamic=dynamic, shared=shared, shared_nodes=shared_nodes,
    )


def _branch(v: int, P: int, bound: int) -> tuple[list[int], int, str | None]:
    st = _state
    shared = st["shared"]
    if bound <= shared.value or (st["upper"] is not None and shared.value >= st["upper"]):
        return [], 0, None
    search = _Search(
        st["adj"], [], upper=st["upper"], node_limit=st["node_limit"], deadline=st["deadline"],
        dynamic=st["dynamic"], shared=shared, shared_nodes=st["shared_nodes"],
    )
    search._best_size = shared.value
    # replay one iteration of the root loop of _Search.expand
    order = [v]
    colors = [bound]
    try:
        search.expand([], P | (1 << v), order, colors, 1)
    except _Stop:
        pass
    return search.best, search.nodes, search.stop_reason


def run_parallel(search: _Search, threads: int) -> tuple[list[int], int, str | None]:
    n = len(search.adj)
    P, order, colors = _root(search, n)
    ctx = mp.get_context("fork")
    shared = ctx.Value("i", len(search.best))
    shared_nodes = ctx.Value("q", 0)
    best = list(search.best)
    nodes = 0
    reason = None
    tasks = []
    remaining = P
    for idx in range(len(order) - 1, -1, -1):
        v = order[idx]
        tasks.append((v, remaining & search.adj[v], colors[idx]))
        remaining &= ~(1 << v)
    with ProcessPoolExecutor(
        max_workers=threads,
        mp_context=ctx,
        initializer=_init,
        initargs=(search.adj, search.upper, search.node_limit, search.deadline, search.dynamic, shared, shared_nodes),
    ) as pool:
        for clique, used, why in pool.map(_branch, *zip(*tasks)) if tasks else ():
            nodes += used
            if len(clique) > len(best):
                best = clique
            reason = reason or why
    return best, nodes, reason

"""Compatibility graphs for difference-avoiding sets.

Adjacency rows are Python ints used as bitsets over vertex indices: bit ``j``
of ``adj[i]`` is set iff vertices ``i`` and ``j`` are adjacent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from .sets import ForbiddenSet, forbidden_distances


@dataclass(frozen=True)
class DiffGraph:
    labels: tuple[int, ...]
    adj: tuple[int, ...]
    kind: Literal["zero_neighborhood", "circulant", "plain"]
    param: int

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def index_of(self, label: int) -> int:
        return self.labels.index(label)

    def neighbors(self, i: int) -> list[int]:
        return _bits(self.adj[i])

    def is_clique(self, labels: Iterable[int]) -> bool:
        where = {lab: i for i, lab in enumerate(self.labels)}
        try:
            idx = [where[lab] for lab in labels]
        except KeyError:
            return False
        if len(set(idx)) != len(idx):
            return False
        for k, i in enumerate(idx):
            for j in idx[k + 1 :]:
                if not self.adj[i] >> j & 1:
                    return False
        return True

    def subgraph(self, indices: Iterable[int]) -> DiffGraph:
        keep = sorted(set(indices))
        pos = {old: new for new, old in enumerate(keep)}
        rows = []
        for old in keep:
            row = 0
            for j in _bits(self.adj[old]):
                if j in pos:
                    row |= 1 << pos[j]
            rows.append(row)
        return DiffGraph(tuple(self.labels[i] for i in keep), tuple(rows), self.kind, self.param)

    def to_dimacs(self) -> str:
        """DIMACS ascii clique format, vertices numbered 1..|V| in label order."""
        lines = [f"c labels {' '.join(map(str, self.labels))}", f"p edge {len(self)} {self.edge_count}"]
        for i, row in enumerate(self.adj):
            lines.extend(f"e {i + 1} {j + 1}" for j in _bits(row >> (i + 1) << (i + 1)))
        return "\n".join(lines) + "\n"


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def from_edges(labels: Iterable[int], edges: Iterable[tuple[int, int]]) -> DiffGraph:
    """Graph on the given labels with edges given as label pairs."""
    labels = tuple(labels)
    where = {lab: i for i, lab in enumerate(labels)}
    rows = [0] * len(labels)
    for a, b in edges:
        i, j = where[a], where[b]
        if i == j:
            raise ValueError("self-loops are not allowed")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return DiffGraph(labels, tuple(rows), "plain", len(labels))


def _distance_graph(labels: list[int], kind, param: int, ok_distance) -> DiffGraph:
    rows = [0] * len(labels)
    for i, a in enumerate(labels):
        for j in range(i):
            if ok_distance(a - labels[j]):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return DiffGraph(tuple(labels), tuple(rows), kind, param)


def zero_neighborhood_graph(N: int, X: ForbiddenSet) -> DiffGraph:
    """Neighbors of 0 in the compatibility graph on {0, ..., N-1}.

    Vertices are offsets i in [1, N-1] with neither i nor -i in X; i and j are
    adjacent when neither i-j nor j-i is in X.  A maximum clique C gives the
    optimal set {1} | {c + 1 for c in C} inside [N].
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    bad = forbidden_distances(X, N - 1)
    labels = [i for i in range(1, N) if i not in bad]
    return _distance_graph(labels, "zero_neighborhood", N, lambda d: d not in bad)


def circulant_graph(m: int, residues: Iterable[int]) -> DiffGraph:
    """Graph on Z/mZ joining i, j when neither i-j nor j-i lies in ``residues``."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    res = frozenset(residues)
    if any(not 0 <= r < m for r in res):
        raise ValueError(f"residues must lie in [0, {m - 1}]")
    return _distance_graph(
        list(range(m)), "circulant", m, lambda d: d % m not in res and -d % m not in res
    )

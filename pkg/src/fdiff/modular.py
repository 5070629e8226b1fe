"""Local densities d_X(m) on Z/mZ and the lower bounds they give on mu(X)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .clique import Budget, max_clique
from .graph import circulant_graph
from .sets import ForbiddenSet, residues_mod

DEFAULT_MODULUS_CAP = 512


@dataclass(frozen=True)
class DensityRecord:
    m: int
    residues: frozenset[int]
    d: int
    witness: tuple[int, ...]

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.d, self.m)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "d": self.d,
            "ratio": f"{self.ratio.numerator}/{self.ratio.denominator}",
            "witness": list(self.witness),
            "residues": sorted(self.residues),
        }


def density_from_residues(m: int, residues, budget: Budget | None = None, threads: int = 1) -> DensityRecord:
    """d for an explicit residue set; the search pins 0 into the clique.

    Pinning is safe because the graph is circulant: any maximum clique can be
    translated to contain 0.
    """
    residues = frozenset(residues)
    if 0 in residues:
        return DensityRecord(m, residues, 0, ())
    G = circulant_graph(m, residues)
    if m == 1:
        return DensityRecord(m, residues, 1, (0,))
    around_zero = G.subgraph(G.neighbors(0))
    out = max_clique(around_zero, budget, threads=threads)
    return DensityRecord(m, residues, out.size + 1, tuple([0] + out.witness))


def local_density(
    X: ForbiddenSet, m: int, *, cap: int = DEFAULT_MODULUS_CAP, budget: Budget | None = None, threads: int = 1
) -> DensityRecord:
    """Largest A in Z/mZ with (A - A) avoiding the residues X_m."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if m > cap:
        raise ValueError(f"modulus {m} exceeds cap {cap}")
    return density_from_residues(m, residues_mod(X, m), budget, threads)


def mu_lower_scan(X: ForbiddenSet, max_m: int, *, cap: int = DEFAULT_MODULUS_CAP) -> DensityRecord:
    """The m <= max_m maximizing d_X(m)/m (smallest m on ties)."""
    if max_m < 1:
        raise ValueError("max_m must be >= 1")
    best = None
    for m in range(1, max_m + 1):
        rec = local_density(X, m, cap=cap)
        if best is None or rec.ratio > best.ratio:
            best = rec
    return best


def density_scan(X: ForbiddenSet, max_m: int, *, cap: int = DEFAULT_MODULUS_CAP) -> list[DensityRecord]:
    return [local_density(X, m, cap=cap) for m in range(1, max_m + 1)]


def locally_intersective_up_to(X: ForbiddenSet, max_m: int) -> tuple[bool, int | None]:
    """Whether X has a nonzero multiple of every m <= max_m; else the least failure."""
    for m in range(1, max_m + 1):
        if 0 not in residues_mod(X, m):
            return False, m
    return True, None


def lift_witness(rec: DensityRecord, k: int) -> list[int]:
    """The union-of-classes set {r + 1 + m*i} inside [m*k]; an X-set when d > 0."""
    return sorted(r + 1 + rec.m * i for r in rec.witness for i in range(k))


def density_csv(records) -> str:
    rows = ["m,d,ratio,witness"]
    for rec in records:
        r = rec.ratio
        rows.append(f"{rec.m},{rec.d},{r.numerator}/{r.denominator},\"{' '.join(map(str, rec.witness))}\"")
    return "\n".join(rows) + "\n"

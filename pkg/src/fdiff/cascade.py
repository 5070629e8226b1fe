"""Top-down sweep resolving D(X, n) over a range, with a resumable JSONL log.

Solving at N gives an optimal set A with max(A) = n_lo, and A stays optimal
for every n in [n_lo, N], so the sweep jumps straight to n_lo - 1.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .clique import Budget, BudgetExhausted
from .exact import compute_d
from .sets import ForbiddenSet, first_violation, parse_set_spec

log = logging.getLogger(__name__)


class ConsistencyError(ValueError):
    """Records or values that do not tile a range, or that fail revalidation."""


class LogMismatchError(ValueError):
    """A resume log written for a different forbidden set or range."""


@dataclass(frozen=True)
class CascadeRecord:
    set_spec: str
    n_lo: int
    n_hi: int
    d: int
    witness: tuple[int, ...]

    def to_json(self) -> str:
        return json.dumps(
            {"set": self.set_spec, "n_lo": self.n_lo, "n_hi": self.n_hi, "d": self.d, "witness": list(self.witness)}
        )

    @classmethod
    def from_json(cls, line: str) -> CascadeRecord:
        obj = json.loads(line)
        return cls(obj["set"], int(obj["n_lo"]), int(obj["n_hi"]), int(obj["d"]), tuple(obj["witness"]))


@dataclass(frozen=True)
class TableRow:
    n_lo: int
    n_hi: int
    d: int


def validate_record(rec: CascadeRecord, X: ForbiddenSet) -> None:
    w = rec.witness
    problems = []
    if len(w) != rec.d:
        problems.append(f"|witness| = {len(w)} != d = {rec.d}")
    if list(w) != sorted(set(w)):
        problems.append("witness not sorted/distinct")
    if w and (w[0] != 1 or w[-1] != rec.n_lo):
        problems.append("witness not in normal form (min 1, max n_lo)")
    if rec.n_lo > rec.n_hi:
        problems.append("n_lo > n_hi")
    bad = first_violation(X, w)
    if bad:
        problems.append(f"{bad[1]} - {bad[0]} is a forbidden difference")
    if problems:
        raise ConsistencyError(f"record [{rec.n_lo}, {rec.n_hi}]: " + "; ".join(problems))


def merge_records(records: Iterable[CascadeRecord]) -> list[CascadeRecord]:
    """Sort descending and fuse touching records with equal d (lower witness kept)."""
    out: list[CascadeRecord] = []
    for rec in sorted(records, key=lambda r: -r.n_hi):
        if out:
            top = out[-1]
            if rec.n_hi != top.n_lo - 1:
                raise ConsistencyError(f"records [{rec.n_lo}, {rec.n_hi}] and [{top.n_lo}, {top.n_hi}] do not touch")
            if rec.d == top.d:
                out[-1] = CascadeRecord(top.set_spec, rec.n_lo, top.n_hi, top.d, rec.witness)
                continue
        out.append(rec)
    return out


def load_log(path: str | Path, X: ForbiddenSet | None = None) -> list[CascadeRecord]:
    """Read, revalidate, and merge a cascade log (newest range first)."""
    records = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        try:
            rec = CascadeRecord.from_json(line)
        except (ValueError, KeyError) as exc:
            raise ConsistencyError(f"{path}:{lineno}: malformed record") from exc
        if X is None:
            X = parse_set_spec(rec.set_spec)
        if parse_set_spec(rec.set_spec) != X:
            raise LogMismatchError(f"{path}:{lineno}: log is for {rec.set_spec!r}, not {X.spec!r}")
        validate_record(rec, X)
        records.append(rec)
    return merge_records(records)


def cascade(
    X: ForbiddenSet,
    lo: int,
    hi: int,
    resume_log: str | Path | None = None,
    *,
    resume: bool = True,
    budget: Budget | None = None,
    threads: int = 1,
) -> list[CascadeRecord]:
    """Records covering [lo, hi] (the last may extend below lo), highest first.

    With ``resume_log`` every record is appended and flushed as soon as it is
    solved; if ``resume`` is set an existing log is revalidated and the sweep
    continues below its smallest n_lo.  Budget exhaustion re-raises after the
    completed records are on disk.
    """
    if not 1 <= lo < hi:
        raise ValueError("cascade needs 1 <= min < max")
    records: list[CascadeRecord] = []
    path = Path(resume_log) if resume_log is not None else None
    if path is not None and resume and path.exists() and path.stat().st_size:
        records = load_log(path, X)
        if records[0].n_hi < hi:
            raise LogMismatchError(f"log covers n <= {records[0].n_hi}, below requested max {hi}")
        log.info("resuming %s from n = %d", X.spec, records[-1].n_lo - 1)
    elif path is not None:
        path.write_text("", encoding="utf-8")

    N = records[-1].n_lo - 1 if records else hi
    while N >= lo:
        seed = upper = None
        if records:
            prev = records[-1]
            # D(N) is d_prev or d_prev - 1; dropping max(A) gives the lower end
            seed, upper = list(prev.witness[:-1]), prev.d
        try:
            res = compute_d(X, N, budget, threads=threads, seed=seed, upper=upper)
        except BudgetExhausted:
            log.error("budget exhausted at N = %d; %d records kept", N, len(records))
            raise
        rec = CascadeRecord(X.spec, res.witness[-1], N, res.d, tuple(res.witness))
        validate_record(rec, X)
        log.info("N=%d  D=%d  certified down to %d  (%d nodes, %.2fs)", N, res.d, rec.n_lo,
                 res.outcome.nodes_expanded, res.outcome.elapsed)
        if path is not None:
            with path.open("a", encoding="utf-8") as fh:
                fh.write(rec.to_json() + "\n")
                fh.flush()
        records = merge_records(records + [rec])
        N = rec.n_lo - 1
    return records


def compress_table(
    data: Iterable[CascadeRecord] | Mapping[int, int] | Iterable[tuple[int, int]],
    lo: int | None = None,
    hi: int | None = None,
) -> list[TableRow]:
    """Maximal constant-D ranges, ascending, optionally clipped to [lo, hi].

    Accepts cascade records or per-N values (a mapping or (n, d) pairs).
    """
    items = list(data.items()) if isinstance(data, Mapping) else list(data)
    if items and isinstance(items[0], CascadeRecord):
        spans = sorted((r.n_lo, r.n_hi, r.d) for r in items)
    else:
        spans = sorted((n, n, d) for n, d in items)
    if lo is not None or hi is not None:
        lo = spans[0][0] if lo is None else lo
        hi = spans[-1][1] if hi is None else hi
        spans = [(max(a, lo), min(b, hi), d) for a, b, d in spans if b >= lo and a <= hi]
    rows: list[TableRow] = []
    for a, b, d in spans:
        if rows:
            last = rows[-1]
            if a != last.n_hi + 1:
                kind = "overlap" if a <= last.n_hi else "gap"
                raise ConsistencyError(f"{kind} between {last.n_hi} and {a}")
            if d == last.d:
                rows[-1] = TableRow(last.n_lo, b, d)
                continue
        rows.append(TableRow(a, b, d))
    return rows


def expand_table(rows: Iterable[TableRow]) -> dict[int, int]:
    return {n: r.d for r in rows for n in range(r.n_lo, r.n_hi + 1)}


def table_csv(rows: Iterable[TableRow]) -> str:
    return "n_lo,n_hi,d\n" + "".join(f"{r.n_lo},{r.n_hi},{r.d}\n" for r in rows)


def table_markdown(rows: Iterable[TableRow], label: str = "D(X,N)") -> str:
    lines = [f"| N | {label} |", "|---|---|"]
    lines += [f"| {r.n_lo} ≤ N ≤ {r.n_hi} | {r.d} |" for r in rows]
    return "\n".join(lines) + "\n"


def table_json(rows: Iterable[TableRow]) -> list[dict]:
    return [asdict(r) for r in rows]

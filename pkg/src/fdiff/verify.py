"""Check closed-form formulas against solver-computed D(X, N)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .cascade import cascade, compress_table, expand_table
from .clique import Budget
from .formulas import FORMULAS, FormulaResult
from .sets import ForbiddenSet, is_x_set


@dataclass(frozen=True)
class VerifyRow:
    n: int
    formula_value: int
    computed_d: int
    status: str  # match | lower_bound_ok | MISMATCH


@dataclass
class VerifyReport:
    formula: str
    set_spec: str
    rows: list[VerifyRow]

    @property
    def mismatches(self) -> list[VerifyRow]:
        return [r for r in self.rows if r.status == "MISMATCH"]

    @property
    def slack(self) -> list[VerifyRow]:
        return [r for r in self.rows if r.status == "lower_bound_ok"]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_csv(self) -> str:
        lines = ["N,formula_value,computed_D,status"]
        lines += [f"{r.n},{r.formula_value},{r.computed_d},{r.status}" for r in self.rows]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "formula": self.formula,
            "set": self.set_spec,
            "checked": len(self.rows),
            "mismatches": [r.n for r in self.mismatches],
            "slack": [r.n for r in self.slack],
            "ok": self.ok,
        }


def solver_values(X: ForbiddenSet, lo: int, hi: int, budget: Budget | None = None, threads: int = 1) -> dict[int, int]:
    # cascade needs min < max; a one-point range is widened and clipped back
    records = cascade(X, lo, max(hi, lo + 1), budget=budget, threads=threads)
    return expand_table(compress_table(records, lo, hi))


def verify_formula(
    formula: str | Callable[[int], FormulaResult],
    X: ForbiddenSet | None,
    lo: int,
    hi: int,
    budget: Budget | None = None,
    threads: int = 1,
) -> VerifyReport:
    """Compare a formula with exact D(X, N) for lo <= N <= hi (solver is ground truth).

    ``formula`` is a callable or a key of ``FORMULAS`` ("primes", "squares+1",
    "squares+2-lb"); for a key, ``X`` defaults to the matching set.
    """
    name = formula if isinstance(formula, str) else getattr(formula, "__name__", "formula")
    if isinstance(formula, str):
        fn, default_X = FORMULAS[formula]
        X = X or default_X
    else:
        fn = formula
    if X is None:
        raise ValueError("a forbidden set is required for a custom formula")
    truth = solver_values(X, lo, hi, budget, threads)
    rows = []
    for n in range(lo, hi + 1):
        res = fn(n)
        d = truth[n]
        if res.witness is not None and (len(res.witness) != res.value or not is_x_set(X, res.witness)
                                        or not all(1 <= a <= n for a in res.witness)):
            status = "MISMATCH"
        elif res.value == d:
            status = "match"
        elif res.kind == "lower_bound" and res.value < d:
            status = "lower_bound_ok"
        else:
            status = "MISMATCH"
        rows.append(VerifyRow(n, res.value, d, status))
    return VerifyReport(name, X.spec, rows)

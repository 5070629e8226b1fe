"""Command-line entry point.  Data goes to stdout, progress to stderr.

Exit codes: 0 success, 1 argument error, 2 budget exhausted, 3 validation failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .cascade import (
    ConsistencyError, LogMismatchError, cascade, compress_table, load_log, table_csv, table_json, table_markdown,
)
from .clique import Budget, BudgetExhausted
from .exact import compute_d
from .formulas import FORMULAS, greedy_bound, greedy_construct
from .modular import density_csv, local_density, mu_lower_scan
from .sets import SetSpecError, first_violation, parse_set_spec, read_int_lines
from .verify import verify_formula

EXIT_OK, EXIT_ARGS, EXIT_BUDGET, EXIT_INVALID = 0, 1, 2, 3

log = logging.getLogger("fdiff")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ARGS)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _emit(obj) -> None:
    print(json.dumps(obj))


def _budget(args) -> Budget:
    return Budget.parse(args.budget) if getattr(args, "budget", None) else Budget.from_env()


def _read_witness(text: str) -> list[int]:
    path = Path(text)
    if path.exists():
        raw = path.read_text(encoding="utf-8")
        if "," in raw:
            return [int(tok) for tok in raw.replace("\n", "").split(",") if tok.strip()]
        return read_int_lines(path)
    return [int(tok) for tok in text.split(",") if tok.strip()]


# commands ---------------------------------------------------------------


def cmd_compute(args) -> int:
    X = parse_set_spec(args.set)
    res = compute_d(X, args.n, _budget(args), threads=args.threads, oracle=args.oracle)
    _emit({"set": X.spec, "n": args.n, "d": res.d, "witness": res.witness,
           "nodes": res.outcome.nodes_expanded, "elapsed": round(res.outcome.elapsed, 6)})
    return EXIT_OK


def cmd_cascade(args) -> int:
    X = parse_set_spec(args.set)
    if args.min >= args.max:
        raise SetSpecError("--min must be smaller than --max")
    records = cascade(X, args.min, args.max, args.out, resume=args.resume, budget=_budget(args), threads=args.threads)
    rows = compress_table(records, args.min, args.max)
    _emit({"set": X.spec, "log": args.out, "table": table_json(rows)})
    return EXIT_OK


def cmd_table(args) -> int:
    records = load_log(args.log)
    rows = compress_table(records, args.min, args.max)
    if args.format == "csv":
        sys.stdout.write(table_csv(rows))
    elif args.format == "md":
        label = f"D({records[0].set_spec},N)" if records else "D(X,N)"
        sys.stdout.write(table_markdown(rows, label))
    else:
        _emit(table_json(rows))
    return EXIT_OK


def cmd_density(args) -> int:
    rec = local_density(parse_set_spec(args.set), args.m)
    if args.format == "csv":
        sys.stdout.write(density_csv([rec]))
    else:
        _emit(rec.to_dict())
    return EXIT_OK


def cmd_mu_lower(args) -> int:
    rec = mu_lower_scan(parse_set_spec(args.set), args.max_m)
    if args.format == "csv":
        sys.stdout.write(density_csv([rec]))
    else:
        _emit(rec.to_dict())
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.min > args.max:
        raise SetSpecError("--min must not exceed --max")
    report = verify_formula(args.formula, None, args.min, args.max, _budget(args), args.threads)
    if args.format == "csv":
        sys.stdout.write(report.to_csv())
    else:
        _emit(report.to_dict())
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_greedy(args) -> int:
    X = parse_set_spec(args.set)
    res = greedy_construct(X, args.n)
    _emit({"set": X.spec, "n": args.n, "value": res.value, "witness": list(res.witness),
           "guarantee": greedy_bound(X, args.n)})
    return EXIT_OK


def cmd_validate(args) -> int:
    X = parse_set_spec(args.set)
    try:
        A = _read_witness(args.witness)
    except ValueError as exc:
        print(f"malformed witness: {exc}", file=sys.stderr)
        return EXIT_ARGS
    bad = first_violation(X, A)
    out = {"set": X.spec, "valid": bad is None, "size": len(set(A))}
    if A:
        out["span"] = [min(A), max(A)]
    if bad:
        out["violation"] = list(bad)
    _emit(out)
    return EXIT_OK if bad is None else EXIT_INVALID


# parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fdiff", description="Exact forbidden-difference computations.")
    p.add_argument("-v", "--verbose", action="store_true", help="progress logging on stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def solver_opts(sp):
        sp.add_argument("--budget", help="node budget (e.g. 100000) or time budget (e.g. 30s); env FDIFF_BUDGET")
        sp.add_argument("--threads", type=_positive, default=os.cpu_count() or 1,
                        help="worker processes for the clique search; 1 gives deterministic witnesses")

    sp = sub.add_parser("compute", help="exact D(X,N) with a witness")
    sp.add_argument("--set", required=True)
    sp.add_argument("--n", type=_positive, required=True)
    sp.add_argument("--oracle", action="store_true", help="use the brute-force oracle (small N only)")
    solver_opts(sp)
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("cascade", help="top-down sweep over [min, max] with a JSONL log")
    sp.add_argument("--set", required=True)
    sp.add_argument("--min", type=_positive, required=True)
    sp.add_argument("--max", type=_positive, required=True)
    sp.add_argument("--out", required=True, help="JSONL record log")
    sp.add_argument("--resume", action="store_true", help="continue an existing log")
    solver_opts(sp)
    sp.set_defaults(func=cmd_cascade)

    sp = sub.add_parser("table", help="range table from a cascade log")
    sp.add_argument("--log", required=True)
    sp.add_argument("--format", choices=["json", "csv", "md"], default="json")
    sp.add_argument("--min", type=_positive)
    sp.add_argument("--max", type=_positive)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("density", help="local density d_X(m)")
    sp.add_argument("--set", required=True)
    sp.add_argument("--m", type=_positive, required=True)
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.set_defaults(func=cmd_density)

    sp = sub.add_parser("mu-lower", help="best d_X(m)/m over m <= max-m")
    sp.add_argument("--set", required=True)
    sp.add_argument("--max-m", type=_positive, required=True)
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.set_defaults(func=cmd_mu_lower)

    sp = sub.add_parser("verify", help="check a closed form against the solver")
    sp.add_argument("--formula", choices=sorted(FORMULAS), required=True)
    sp.add_argument("--min", type=_positive, required=True)
    sp.add_argument("--max", type=_positive, required=True)
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    solver_opts(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("greedy", help="greedy X-set in [N]")
    sp.add_argument("--set", required=True)
    sp.add_argument("--n", type=_positive, required=True)
    sp.set_defaults(func=cmd_greedy)

    sp = sub.add_parser("validate-witness", help="check that a set has no forbidden differences")
    sp.add_argument("--set", required=True)
    sp.add_argument("--witness", required=True, help="file (one per line or comma-separated) or csv list")
    sp.set_defaults(func=cmd_validate)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(asctime)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except BudgetExhausted as exc:
        best = getattr(exc, "best_set", exc.best.witness)
        _emit({"status": "incomplete", "reason": exc.reason, "best_size": len(best), "best_witness": best})
        return EXIT_BUDGET
    except (ConsistencyError, LogMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (SetSpecError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS

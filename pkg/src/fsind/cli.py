"""Command line: ``fsind indicators|verify|zeros|chunked|gamma|chartab``."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from .chartab import character_table
from .checkpoint import TimeBudgetExceeded, run_chunked
from .engine import get_engine
from .perm import Permutation, class_reps, centralizer
from .report import ReportConfig, emit, zeros_report

DEFAULT_BUDGET = 3600.0
LARGE_N = (9, 10)


def _columns(values: list[str] | None) -> tuple[int, ...] | None:
    if not values:
        return None
    out = []
    for v in values:
        out += [int(x) for x in v.split(",") if x.strip()]
    return tuple(out)


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _matrix(n: int, jobs: int, budget: float):
    if n in LARGE_N:
        raise SystemExit(f"n = {n} needs the chunked command (fsind chunked --n {n} --store DIR)")
    if not 3 <= n <= 10:
        raise SystemExit("n must lie between 3 and 10")
    start = time.monotonic()
    m = get_engine(n).matrix(jobs=jobs)
    if time.monotonic() - start > budget:
        raise SystemExit(f"time budget of {budget}s exceeded")
    return m


def cmd_indicators(args) -> int:
    matrix = _matrix(args.n, args.jobs, args.time_budget)
    cfg = ReportConfig(args.format, _columns(args.columns), args.rows_per_table)
    try:
        text = emit(matrix, cfg)
    except ValueError as exc:
        raise SystemExit(str(exc))
    _write(text, args.out)
    return 0


def cmd_verify(args) -> int:
    from .verify import run_verification

    inject = tuple(int(x) for x in args.inject.split(",")) if args.inject else None
    rep = run_verification(args.n, inject)
    for d in rep.disagreements:
        print(f"FAIL {d}")
    status = "pass" if rep.ok else "fail"
    print(f"{status}: n={rep.n}, {rep.characters} characters, {rep.compared} (character, m) pairs compared")
    return 0 if rep.ok else 1


def cmd_zeros(args) -> int:
    matrix = _matrix(args.n, args.jobs, args.time_budget)
    _write(zeros_report(matrix, args.format), args.out)
    return 0


def cmd_chunked(args) -> int:
    store = os.environ.get("FSIND_STORE") or args.store
    if not store:
        raise SystemExit("a store directory is needed (--store or FSIND_STORE)")

    def progress(done: int, total: int) -> None:
        if args.verbose:
            print(f"{done}/{total}", file=sys.stderr)

    try:
        run = run_chunked(args.n, store, resume=args.resume, jobs=args.jobs, max_tasks=args.max_tasks,
                          time_budget=args.time_budget, progress=progress)
    except TimeBudgetExceeded as exc:
        print(f"stopped: {exc}; rerun with --resume to continue", file=sys.stderr)
        return 3
    print(f"n={args.n}: computed {len(run.computed)} task(s), skipped {len(run.skipped)} verified task(s)")
    if run.matrix is None:
        print("incomplete; rerun with --resume to finish")
        return 2
    if args.out:
        cfg = ReportConfig(args.format, None, 38)
        Path(args.out).write_text(emit(run.matrix, cfg))
    print(zeros_report(run.matrix), end="")
    return 0


def cmd_gamma(args) -> int:
    u = Permutation.parse(args.u, args.n)
    gs = get_engine(args.n).gamma_set(u, args.m)
    body = ", ".join(f"[ {c}, {y} ]" for c, y in gs.pairs())
    print("{ " + body + " }" if body else "{ }")
    return 0


def cmd_chartab(args) -> int:
    u = Permutation.parse(args.u, args.n) if args.u else Permutation.identity(args.n)
    tab = character_table(centralizer(class_reps(args.n), u), ceiling=None)
    text = json.dumps(tab.to_json(), indent=2) + "\n" if args.format == "json" else tab.to_latex() + "\n"
    _write(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fsind", description="Higher Frobenius-Schur indicators of D(S_n).")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmts, default):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--format", choices=fmts, default=default)
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--out")
        sp.add_argument("--time-budget", type=float, default=DEFAULT_BUDGET)

    sp = sub.add_parser("indicators", help="indicator tables and I-equivalence classes")
    common(sp, ["latex", "csv", "json"], "latex")
    sp.add_argument("--columns", nargs="+", help="columns per table, e.g. 6 6 or 6,6")
    sp.add_argument("--rows-per-table", type=int, default=38)
    sp.set_defaults(func=cmd_indicators)

    sp = sub.add_parser("verify", help="cross-check against the Hopf-algebra oracle (n = 3, 4)")
    sp.add_argument("--n", type=int, required=True, choices=[3, 4])
    sp.add_argument("--inject", help="test mode: perturb engine value i,j,m")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("zeros", help="unexpected zero audit")
    common(sp, ["text", "latex", "json"], "text")
    sp.set_defaults(func=cmd_zeros)

    sp = sub.add_parser("chunked", help="resumable per-(i, m) run with a checkpoint store")
    common(sp, ["latex", "csv", "json"], "json")
    sp.add_argument("--store")
    sp.add_argument("--resume", action="store_true")
    sp.add_argument("--max-tasks", type=int)
    sp.add_argument("--verbose", action="store_true")
    sp.set_defaults(func=cmd_chunked, time_budget=None)

    sp = sub.add_parser("gamma", help="the summation set for one u and m")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--u", required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.set_defaults(func=cmd_gamma)

    sp = sub.add_parser("chartab", help="character table of a centralizer")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--u")
    sp.add_argument("--format", choices=["json", "latex"], default="json")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_chartab)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line entry point: bounds, exact search, profiles, suites and sweeps.

Exit codes: 0 success, 1 verification failure or bound/search mismatch,
2 invalid configuration, 3 search budget exhausted.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence

from . import bounds as B
from .oracle import BudgetExceeded, classify_extremal, exact_M, f_profile, search_space
from .subsets import Params, fmt_set, iter_range_Ri
from .verify import SUITES, mixed_params, nonmixed_params, run_suite, summarize

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_BUDGET = 0, 1, 2, 3
CSV_COLUMNS = ["n", "t", "ks", "regime", "lambda1", "lambda2", "bound", "oracle",
               "match", "classes", "elapsed_ms"]


class ConfigError(ValueError):
    pass


def parse_ks(text: str) -> tuple:
    try:
        ks = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ConfigError(f"--ks must be a comma list of integers, got {text!r}")
    if len(ks) < 2:
        raise ConfigError("--ks needs at least two sizes")
    ordered = sorted(ks, reverse=True)
    if ordered != ks:
        print(f"warning: reordered ks {ks} to non-increasing {ordered}", file=sys.stderr)
    return tuple(ordered)


def make_params(args) -> Params:
    if args.n is None or args.ks is None:
        raise ConfigError("--n and --ks are required")
    try:
        return Params(args.n, parse_ks(args.ks))
    except ConfigError:
        raise
    except ValueError as e:
        raise ConfigError(str(e))


def report(params: Optional[Params] = None, regime: Optional[str] = None, values=None,
           tuples=None, classes=None, checks: int = 0, failures: int = 0,
           runtime_ms: int = 0) -> dict:
    return {
        "params": {"n": params.n, "ks": list(params.ks)} if params else None,
        "regime": regime,
        "values": values or {},
        "tuples": tuples or [],
        "classes": classes or [],
        "checks": checks,
        "failures": failures,
        "runtime_ms": runtime_ms,
    }


def _ms(start: float) -> int:
    return int((time.monotonic() - start) * 1000)


def _branch_label(first: int, second: int, names: Sequence[str]) -> str:
    if first == second:
        return "tie"
    return names[0] if first > second else names[1]


def bound_row(P: Params) -> dict:
    """The closed-form part of a CSV row."""
    if P.is_mixed:
        l1, l2 = B.lambda_values(P)
    elif P.is_nonmixed:
        l1, l2 = B.nonmixed_branches(P)
    else:
        raise ConfigError(f"n={P.n}, ks={P.ks}: neither n >= k1+k2 nor k1+k3 <= n < k1+k2")
    return {"n": P.n, "t": P.t, "ks": ",".join(map(str, P.ks)), "regime": P.regime_label,
            "lambda1": l1, "lambda2": l2, "bound": max(l1, l2)}


# ---------------------------------------------------------------------------
# commands


def cmd_bound(args):
    start = time.monotonic()
    P = make_params(args)
    row = bound_row(P)
    l1, l2 = row["lambda1"], row["lambda2"]
    if P.is_mixed:
        values = {"lambda1": l1, "lambda2": l2, "bound": row["bound"],
                  "branch": _branch_label(l1, l2, ("λ₁", "λ₂"))}
    else:
        values = {"star": l1, "kernel": l2, "bound": row["bound"],
                  "branch": _branch_label(l1, l2, ("star", "kernel"))}
    return report(P, P.regime_label, values, runtime_ms=_ms(start)), [row], EXIT_OK


def _run_oracle(P: Params, args):
    max_space = args.max_space or None
    return exact_M(P, budget_nodes=args.budget_nodes, budget_seconds=args.budget_seconds,
                   max_space=max_space, workers=args.workers)


def cmd_oracle(args):
    start = time.monotonic()
    P = make_params(args)
    try:
        res = _run_oracle(P, args)
    except BudgetExceeded as e:
        rep = report(P, P.regime_label, {"status": "budget-exhausted", "reason": str(e)},
                     runtime_ms=_ms(start))
        return rep, [], EXIT_BUDGET
    tuples = [[fmt_set(I) for I in ids] for ids in res.tuples]
    classes = sorted({classify_extremal(ids, P).label for ids in res.tuples})
    values = {"M": res.value, "nodes": res.nodes, "status": "complete"}
    checks = failures = 0
    row = {"n": P.n, "t": P.t, "ks": ",".join(map(str, P.ks)), "regime": P.regime_label,
           "lambda1": "", "lambda2": "", "bound": "", "oracle": res.value, "match": "",
           "classes": ";".join(classes), "elapsed_ms": res.elapsed_ms}
    if P.is_mixed or P.is_nonmixed:
        row.update(bound_row(P))
        values["bound"] = row["bound"]
        checks = 1
        failures = int(res.value != row["bound"])
        row["match"] = "yes" if not failures else "no"
    rep = report(P, P.regime_label, values, tuples, classes, checks, failures, _ms(start))
    return rep, [row], EXIT_FAIL if failures else EXIT_OK


def profile_verdict(P: Params, prof: List[int]) -> str:
    if P.is_exceptional and len(set(prof)) == 1:
        return "exceptional-flat"
    top = max(prof)
    if all(v < top for v in prof[1:-1]):
        return "endpoint-max"
    return "interior-max"


def cmd_profile(args):
    start = time.monotonic()
    P = make_params(args)
    if not P.is_mixed:
        raise ConfigError(f"n={P.n}, ks={P.ks} is not in the range k1+k3 <= n < k1+k2")
    prof = f_profile(P)
    ids = [fmt_set(R) for R in iter_range_Ri(1, P)]
    l1, l2 = B.lambda_values(P)
    verdict = profile_verdict(P, prof)
    values = {"profile": prof, "ids": ids, "lambda1": l1, "lambda2": l2,
              "first": prof[0], "last": prof[-1], "verdict": verdict}
    failures = int(verdict == "interior-max" or prof[0] != l1 or prof[-1] != l2)
    rows = [{"index": i + 1, "id": R, "f": v} for i, (R, v) in enumerate(zip(ids, prof))]
    rep = report(P, P.regime_label, values, checks=1, failures=failures, runtime_ms=_ms(start))
    return rep, rows, EXIT_FAIL if failures else EXIT_OK


def cmd_verify(args):
    start = time.monotonic()
    if args.suite not in SUITES:
        raise ConfigError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    n_max = args.n_max if args.n_max is not None else (8 if args.suite == "kk" else 9)
    results = run_suite(args.suite, n_max=n_max, seed=args.seed, trials=args.trials)
    checks, failures = summarize(results)
    values = {"suite": args.suite, "n_max": n_max, "seed": args.seed,
              "results": [r.as_dict() for r in results]}
    rows = [{"name": r.name, "checks": r.checks, "failures": r.failures} for r in results]
    rep = report(None, None, values, checks=checks, failures=failures, runtime_ms=_ms(start))
    return rep, rows, EXIT_FAIL if failures else EXIT_OK


def _sweep_row(P: Params, max_space, budget_nodes, budget_seconds) -> dict:
    row = bound_row(P)
    start = time.monotonic()
    try:
        if max_space is not None and search_space(P) > max_space:
            raise BudgetExceeded("space")
        res = exact_M(P, budget_nodes=budget_nodes, budget_seconds=budget_seconds,
                      max_space=None)
    except BudgetExceeded:
        row.update(oracle="", match="skipped", classes="", elapsed_ms=_ms(start))
        return row
    classes = sorted({classify_extremal(ids, P).label for ids in res.tuples})
    row.update(oracle=res.value, match="yes" if res.value == row["bound"] else "no",
               classes=";".join(classes), elapsed_ms=res.elapsed_ms)
    return row


def sweep_params(n_max: int, t_max: int, regime: str) -> List[Params]:
    out = []
    if regime in ("mixed", "all"):
        out += mixed_params(n_max, tuple(range(3, t_max + 1)), kt_min=1)
    if regime in ("nonmixed", "all"):
        out += nonmixed_params(n_max, tuple(range(2, t_max + 1)))
    return sorted(out, key=lambda P: (P.n, P.t, P.ks))


def cmd_sweep(args):
    start = time.monotonic()
    n_max = args.n_max if args.n_max is not None else 7
    if n_max < 2 or args.t_max < 2:
        raise ConfigError("--n-max and --t-max must be at least 2")
    grid = sweep_params(n_max, args.t_max, args.regime)
    max_space = args.max_space or None
    jobs = [(P, max_space, args.budget_nodes, args.budget_seconds) for P in grid]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            rows = list(pool.map(_sweep_row_star, jobs))
    else:
        rows = [_sweep_row(*job) for job in jobs]
    rows.sort(key=lambda r: (r["n"], r["t"], [-int(k) for k in r["ks"].split(",")]))
    compared = [r for r in rows if r["match"] in ("yes", "no")]
    failures = sum(1 for r in compared if r["match"] == "no")
    values = {"n_max": n_max, "t_max": args.t_max, "rows": rows,
              "skipped": len(rows) - len(compared)}
    rep = report(None, args.regime, values, checks=len(compared), failures=failures,
                 runtime_ms=_ms(start))
    return rep, rows, EXIT_FAIL if failures else EXIT_OK


def _sweep_row_star(job):
    return _sweep_row(*job)


COMMANDS = {"bound": cmd_bound, "oracle": cmd_oracle, "profile": cmd_profile,
            "verify": cmd_verify, "sweep": cmd_sweep}


# ---------------------------------------------------------------------------
# output


def render(rep: dict, rows: List[dict], fmt: str, command: str) -> str:
    if fmt == "json":
        return json.dumps(rep, indent=2, ensure_ascii=False) + "\n"
    buf = io.StringIO()
    if command in ("bound", "oracle", "sweep"):
        fields = CSV_COLUMNS
    else:
        fields = list(rows[0]) if rows else []
    writer = csv.DictWriter(buf, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: r.get(k, "") for k in fields})
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="crossint",
        description="Maximum total size of pairwise cross-intersecting uniform families.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--n", type=int, help="ground set size")
    p.add_argument("--ks", help="family sizes as a comma list, e.g. 3,3,2")
    p.add_argument("--suite", default="partners", help=f"one of {', '.join(SUITES)}")
    p.add_argument("--n-max", type=int, help="largest n for verify and sweep")
    p.add_argument("--t-max", type=int, default=4, help="most families in a sweep")
    p.add_argument("--regime", choices=["mixed", "nonmixed", "all"], default="all",
                   help="which parameter range a sweep covers")
    p.add_argument("--budget-nodes", type=int, help="search node limit")
    p.add_argument("--budget-seconds", type=float, help="search time limit")
    p.add_argument("--max-space", type=int, default=10**7,
                   help="skip searches over more ID tuples than this (0: no limit)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--trials", type=int, default=10_000, help="random trials per n (kk suite)")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the report here instead of stdout")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("budget_nodes", "budget_seconds", "workers", "trials"):
        v = getattr(args, name)
        if v is not None and v <= 0:
            print(f"error: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return EXIT_CONFIG
    if args.max_space < 0:
        print("error: --max-space must be non-negative", file=sys.stderr)
        return EXIT_CONFIG
    try:
        rep, rows, code = COMMANDS[args.command](args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    text = render(rep, rows, args.format, args.command)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if code == EXIT_BUDGET:
        print(f"budget exhausted: {rep['values'].get('reason')}", file=sys.stderr)
    elif code == EXIT_FAIL:
        print(f"{rep['failures']} failure(s)", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line campaign runner.

Every subcommand expands into a list of independent targets, runs them
(optionally in worker processes) and writes one JSON report. Exit status is
0 when nothing the literature asserts was refuted, 1 otherwise, and 2 for
usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .campaigns import Task, run_task
from .certificate import CERTIFIED, INCONCLUSIVE, REFUTED

SUBCOMMANDS = ("rows", "columns", "lines", "diagonal", "boros-moll", "region-sample",
               "gauss-rows", "gauss-lines", "quantum-rows", "quantum-lines", "llq-resolve",
               "symfunc", "realroots", "tnn", "tnn-counterexample", "all")


def _positive(value: str) -> int:
    v = int(value)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonneg(value: str) -> int:
    v = int(value)
    if v < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return v


def _rational(value: str) -> str:
    try:
        f = Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {value}") from exc
    if f < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return str(f)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", default=None, help="report path (default: stdout)")
    common.add_argument("--jobs", "-j", type=_positive, default=1, help="worker processes")
    common.add_argument("--timing", action="store_true",
                        help="include wall-clock timings (reports are then not reproducible)")

    p = argparse.ArgumentParser(prog="ilc", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"ilc {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("rows", parents=[common], help="certify rows of Pascal's triangle")
    s.add_argument("--min-n", type=_nonneg, default=0)
    s.add_argument("--max-n", type=_nonneg, default=300)
    s.add_argument("--max-depth", type=_positive, default=12)

    s = sub.add_parser("columns", parents=[common], help="column closed forms and small-i nonnegativity")
    s.add_argument("--max-k", type=_nonneg, default=6)
    s.add_argument("--max-n", type=_positive, default=60)

    s = sub.add_parser("lines", parents=[common], help="finite lines binom(n+mu, mv), u < v")
    s.add_argument("--max-n", type=_nonneg, default=50)
    s.add_argument("--max-v", type=_positive, default=6)
    s.add_argument("--max-u", type=_positive, default=10, help="range of the only-if check")
    s.add_argument("--max-depth", type=_positive, default=12)

    s = sub.add_parser("diagonal", parents=[common], help="diagonal lines u = v")
    s.add_argument("--n", type=_nonneg, default=2)
    s.add_argument("--max-u", type=_positive, default=8)
    s.add_argument("--length", type=_positive, default=9)
    s.add_argument("--max-depth", type=_positive, default=4)

    s = sub.add_parser("boros-moll", parents=[common], help="Boros-Moll coefficient sequences")
    s.add_argument("--max-m", type=_nonneg, default=40)
    s.add_argument("--max-depth", type=_positive, default=12)

    s = sub.add_parser("region-sample", parents=[common], help="points near the region's boundary")
    s.add_argument("--max-m", type=_positive, default=4)
    s.add_argument("--count", type=_positive, default=25, help="samples per (m, parity)")
    s.add_argument("--seed", type=int, default=0)

    for name, n_default, what in (("gauss-rows", 20, "Gaussian"), ("quantum-rows", 30, "quantum")):
        s = sub.add_parser(name, parents=[common], help=f"rows of {what} binomial polynomials")
        s.add_argument("--max-n", type=_nonneg, default=n_default)
        s.add_argument("--max-depth", type=_positive, default=3 if name == "gauss-rows" else 12)

    for name, what in (("gauss-lines", "Gaussian"), ("quantum-lines", "quantum")):
        s = sub.add_parser(name, parents=[common], help=f"lines of {what} binomial polynomials")
        s.add_argument("--max-n", type=_nonneg, default=12)
        s.add_argument("--max-v", type=_positive, default=5)
        s.add_argument("--max-u", type=_positive, default=4, help="u range for u >= v")
        s.add_argument("--length", type=_positive, default=8, help="window for infinite lines")
        s.add_argument("--max-depth", type=_positive, default=12)

    s = sub.add_parser("llq-resolve", parents=[common], help="second column iterate of Gaussian polynomials")
    s.add_argument("--max-n", type=_positive, default=10)

    s = sub.add_parser("symfunc", parents=[common], help="symmetric function identities")
    s.add_argument("mode", choices=("kirillov", "l4-witness", "identities"))
    s.add_argument("--max-k", type=_positive, default=4)
    s.add_argument("--max-r", type=_positive, default=4)
    s.add_argument("--k", type=_positive, nargs="+", default=[2, 3], help="l4-witness indices")

    s = sub.add_parser("realroots", parents=[common], help="real-rootedness under L")
    s.add_argument("mode", choices=("pascal", "fuzz"))
    s.add_argument("--max-n", type=_nonneg, default=20)
    s.add_argument("--depth", type=_nonneg, default=None)
    s.add_argument("--seeds", type=_positive, default=200)
    s.add_argument("--max-degree", type=_positive, default=8)
    s.add_argument("--seed", type=int, default=0, help="first fuzz seed")

    s = sub.add_parser("tnn", parents=[common], help="total nonnegativity and PSD checks")
    s.add_argument("mode", choices=("fallat", "small", "psd", "asw"))
    s.add_argument("--t", type=_rational, default="3/2")
    s.add_argument("--count", type=_positive, default=None)
    s.add_argument("--max-size", type=_positive, default=6)
    s.add_argument("--max-n", type=_nonneg, default=8)
    s.add_argument("--truncation-size", type=_positive, default=12)
    s.add_argument("--max-minor-order", type=_positive, default=None)
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("tnn-counterexample", parents=[common], help="the 5x5 counterexample at one t")
    s.add_argument("--t", type=_rational, default="3/2")
    s.add_argument("--max-minor-order", type=_positive, default=None)

    sub.add_parser("all", parents=[common], help="every campaign at default bounds")
    return p


def _tasks(cmd: str, a) -> list[Task]:
    C, R = CERTIFIED, REFUTED
    if cmd == "rows":
        return [Task("row_target", (n, a.max_depth), C) for n in range(a.min_n, a.max_n + 1)]
    if cmd == "columns":
        return [Task("column_target", (k, a.max_n), C) for k in range(a.max_k + 1)]
    if cmd == "lines":
        out = [Task("line_target", (n, u, v, a.max_depth), C)
               for n in range(a.max_n + 1) for v in range(2, a.max_v + 1) for u in range(v)]
        out += [Task("vandermonde_target", (u, v), R)
                for u in range(2, a.max_u + 1) for v in range(1, u)]
        return out
    if cmd == "diagonal":
        return [Task("diagonal_target", (a.n, u, a.length, a.max_depth), R if a.n == 2 else None)
                for u in range(2, a.max_u + 1)]
    if cmd == "boros-moll":
        return [Task("boros_moll_target", (m, a.max_depth), C) for m in range(a.max_m + 1)]
    if cmd == "region-sample":
        return [Task("region_target", (m, parity, a.seed, i), C)
                for m in range(1, a.max_m + 1) for parity in ("even", "odd") for i in range(a.count)]
    if cmd == "gauss-rows":
        return [Task("gauss_row_target", (n, a.max_depth), R) for n in range(2, a.max_n + 1)]
    if cmd == "quantum-rows":
        return [Task("quantum_row_target", (n, a.max_depth), C) for n in range(a.max_n + 1)]
    if cmd in ("gauss-lines", "quantum-lines"):
        func = "gauss_line_target" if cmd == "gauss-lines" else "quantum_line_target"
        out = []
        for v in range(1, a.max_v + 1):
            for u in range(v):
                # Gaussian lines with u < v are only observed to fail, not asserted
                exp = C if cmd == "quantum-lines" else None
                out += [Task(func, (n, u, v, a.max_depth, a.length), exp) for n in range(a.max_n + 1)]
        for u in range(2, a.max_u + 1):
            for v in range(1, u):
                out += [Task(func, (n, u, v, 1, a.length), R) for n in range(a.max_n + 1)]
        for u in range(2, a.max_u + 1):
            out.append(Task(func, (2, u, u, 4, a.length), R))
        return out
    if cmd == "llq-resolve":
        return [Task("llq_target", (n, k), C) for n in range(2, a.max_n + 1) for k in range(2, n + 1)]
    if cmd == "symfunc":
        if a.mode == "kirillov":
            return [Task("kirillov_target", (k, r), C)
                    for k in range(1, a.max_k + 1) for r in range(1, a.max_r + 1)]
        if a.mode == "l4-witness":
            return [Task("l4_witness_target", (k,), R) for k in a.k]
        return [Task("identities_target", (k,), C) for k in range(a.max_k + 1)]
    if cmd == "realroots":
        if a.mode == "pascal":
            depth = 6 if a.depth is None else a.depth
            return [Task("pla_row_target", (n, depth), C) for n in range(a.max_n + 1)]
        depth = 3 if a.depth is None else a.depth
        return [Task("pla_fuzz_target", (s, a.max_degree, depth), C)
                for s in range(a.seed, a.seed + a.seeds)]
    if cmd == "tnn":
        if a.mode == "fallat":
            return _fallat_tasks(a.t, a.max_minor_order)
        if a.mode == "small":
            return [Task("small_tnn_target", (a.seed, i), C) for i in range(a.count or 1000)]
        if a.mode == "psd":
            return [Task("psd_target", (a.seed, i, a.max_size), C) for i in range(a.count or 100)]
        return [Task("asw_target", (n, a.truncation_size), C) for n in range(a.max_n + 1)]
    if cmd == "tnn-counterexample":
        return _fallat_tasks(a.t, a.max_minor_order)
    raise ValueError(cmd)


def _fallat_tasks(t: str, max_order):
    # only t >= sqrt(2) is asserted to break total nonnegativity of L(A)
    tt = Fraction(t)
    expect_l = REFUTED if tt * tt >= 2 else None
    return [Task("fallat_target", (t, "A", max_order), CERTIFIED),
            Task("fallat_target", (t, "L", max_order), expect_l)]


ALL_COMMANDS = [
    ["rows"], ["columns"], ["lines"], ["diagonal"], ["boros-moll"], ["region-sample"],
    ["gauss-rows"], ["gauss-lines"], ["quantum-rows"], ["quantum-lines"], ["llq-resolve"],
    ["symfunc", "kirillov"], ["symfunc", "l4-witness"], ["symfunc", "identities"],
    ["realroots", "pascal"], ["realroots", "fuzz"],
    ["tnn", "fallat"], ["tnn", "small"], ["tnn", "psd"], ["tnn", "asw"],
]


def _config(a) -> dict:
    skip = {"output", "jobs", "timing"}
    return {k: (v if isinstance(v, (str, bool)) or v is None else
                [str(x) for x in v] if isinstance(v, list) else str(v))
            for k, v in sorted(vars(a).items()) if k not in skip}


def execute(tasks: list[Task], jobs: int = 1) -> list[tuple[Task, list]]:
    """Run tasks and return results in task order regardless of ``jobs``."""
    if jobs == 1 or len(tasks) < 2:
        return [(t, run_task(t)) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(zip(tasks, pool.map(run_task, tasks, chunksize=1)))


def run(args) -> tuple[dict, int]:
    """Build the report for parsed ``args``; return it with the exit status."""
    start = time.perf_counter()
    if args.command == "all":
        parser = build_parser()
        sections, status = [], 0
        for argv in ALL_COMMANDS:
            sub_args = parser.parse_args(argv + ["--jobs", str(args.jobs)] + (["--timing"] if args.timing else []))
            rep, code = run(sub_args)
            sections.append(rep)
            status = max(status, code)
        report = {"tool": "ilc", "version": __version__, "command": "all", "sections": sections,
                  "summary": _merge_summaries(s["summary"] for s in sections)}
        if args.timing:
            report["elapsed"] = f"{time.perf_counter() - start:.6f}"
        return report, status

    tasks = _tasks(args.command, args)
    records, unexpected = [], 0
    for task, certs in execute(tasks, args.jobs):
        for cert in certs:
            rec = cert.to_record(timing=args.timing)
            rec["expected"] = task.expected
            if task.expected == CERTIFIED and cert.status == REFUTED:
                unexpected += 1
            records.append(rec)
    summary = {CERTIFIED: 0, REFUTED: 0, INCONCLUSIVE: 0}
    for rec in records:
        summary[rec["status"]] += 1
    summary["unexpected_refutations"] = unexpected
    name = args.command + (f" {args.mode}" if hasattr(args, "mode") else "")
    report = {"tool": "ilc", "version": __version__, "command": name,
              "config": _config(args), "records": records, "summary": summary}
    if args.timing:
        report["elapsed"] = f"{time.perf_counter() - start:.6f}"
    return report, 1 if unexpected else 0


def _merge_summaries(summaries) -> dict:
    out: dict[str, int] = {}
    for s in summaries:
        for k, v in s.items():
            out[k] = out.get(k, 0) + v
    return out


def render(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    report, status = run(args)
    text = render(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())

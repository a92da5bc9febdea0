"""Command-line front end.

Every subcommand emits a RunReport JSON object (stdout, or --out) whose
payload is reproducible bit-exactly from the same parameters and seed;
wall time and node counters live outside the payload.  `wsk` emits CSV
instead.  Exit codes: 0 ok, 1 invariant violation, 2 usage error,
3 budget exceeded.

Flags can be preset through environment variables with the KEMPETORUS_
prefix (e.g. KEMPETORUS_THREADS=4, KEMPETORUS_SPILL_DIR=/tmp/spill).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
import time

from . import verify as verify_mod
from .coloring import (Coloring, load_grid, nonsingular_coloring,
                       random_proper_coloring, three_coloring, write_grid)
from .construct import construct_deg6, construct_deg6_symmetric
from .degree import degree
from .kempe import wsk_trajectory
from .lattice import parse_descriptor
from .nonsingular import check_ns_minimal_structure, ns_minimal_reduce
from .statespace import BudgetExceeded, enumerate_colorings, kempe_classes

EXIT_INVARIANT = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _env_default(name, fallback=None, cast=str):
    raw = os.environ.get(f"KEMPETORUS_{name}")
    return cast(raw) if raw is not None else fallback


def _grid_text(c: Coloring) -> str:
    buf = io.StringIO()
    write_grid(c, buf)
    return buf.getvalue()


def _emit_report(args, command, payload, counters=None, seed=None):
    report = {
        "command": command,
        "parameters": {k: v for k, v in sorted(vars(args).items())
                       if k not in ("func", "out") and v is not None},
        "triangulation": getattr(args, "tri", None),
        "payload": payload,
        "wall_time_s": round(time.perf_counter() - args._t0, 3),
        "counters": counters or {},
        "seed": seed,
    }
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _budget_states(args):
    if args.budget_mem is None:
        return None
    # a visited packed state costs roughly 120 bytes in a Python set
    return max(1, int(args.budget_mem * 1e6 / 120))


def cmd_build(args):
    tri = parse_descriptor(args.tri)
    _emit_report(args, "build", json.loads(tri.to_json()))
    return 0


def cmd_enumerate(args):
    tri = parse_descriptor(args.tri)
    res = enumerate_colorings(tri, args.q, budget_nodes=args.budget_nodes,
                              threads=args.threads)
    payload = {"total": res.total,
               "histogram": ({str(k): v for k, v in sorted(res.histogram.items())}
                             if res.histogram is not None else None)}
    _emit_report(args, "enumerate", payload, counters={"nodes": res.nodes})
    return 0


def cmd_classes(args):
    tri = parse_descriptor(args.tri)
    dec = kempe_classes(tri, args.q, budget_nodes=args.budget_nodes,
                        budget_states=_budget_states(args),
                        threads=args.threads, spill_dir=args.spill_dir)
    payload = {
        "total": dec.total,
        "num_classes": dec.num_classes,
        "classes": [{"size": c.size, "residue": c.residue,
                     "degree_abs_counts": {str(k): v for k, v in
                                           sorted(c.degree_abs_counts.items())},
                     "representative_grid": _grid_text(c.representative)}
                    for c in dec.classes],
    }
    _emit_report(args, "classes", payload)
    return 0


def cmd_construct(args):
    if args.M is None or args.M == args.L:
        c, trace = construct_deg6_symmetric(args.L)
    else:
        c = construct_deg6(args.L, args.M)
        trace = None
    rep = degree(c.tri, c)
    payload = {"triangulation": c.tri.descriptor(),
               "degree": rep.degree, "degree_abs": rep.degree_abs,
               "degree_mod12": rep.mod12, "grid": _grid_text(c)}
    if args.trace and trace is not None:
        payload["trace"] = [{"step": e.label, "diagonals": e.diagonals,
                             "partial_degree": e.partial_degree}
                            for e in trace.steps]
    if args.grid_out:
        with open(args.grid_out, "w") as fh:
            fh.write(payload["grid"])
    _emit_report(args, "construct", payload)
    return 0


def _start_coloring(tri, start, seed):
    if start == "three":
        return Coloring(tri, 4, three_coloring(tri).colors)
    if start == "nonsingular":
        return nonsingular_coloring(tri)
    if start == "random":
        return random_proper_coloring(tri, 4, random.Random(seed ^ 0x5EED))
    return load_grid(start)


def cmd_wsk(args):
    tri = parse_descriptor(args.tri)
    start = args.start
    if start == "auto":
        start = "three" if tri.is_three_colorable() else "random"
    c = _start_coloring(tri, start, args.seed)
    rng = random.Random(args.seed)
    out = open(args.out, "w", newline="") if args.out else sys.stdout

    def row(step, state):
        if args.record == "states":
            return [step, "".join(map(str, state.colors))]
        rep = degree(tri, state)
        return [step, rep.degree_abs, rep.mod12]

    try:
        w = csv.writer(out)
        w.writerow(["step", "state"] if args.record == "states"
                   else ["step", "degree_abs", "degree_mod12"])
        w.writerow(row(0, c))
        for step, state in enumerate(wsk_trajectory(tri, c, args.steps, rng), 1):
            w.writerow(row(step, state))
    finally:
        if args.out:
            out.close()
    return 0


def cmd_degree(args):
    c = load_grid(args.grid)
    rep = degree(c.tri, c)
    args.tri = c.tri.descriptor()
    _emit_report(args, "degree", rep.to_dict())
    return 0


def cmd_reduce(args):
    c = load_grid(args.grid)
    reduced, moves = ns_minimal_reduce(c.tri, c)
    report = check_ns_minimal_structure(c.tri, reduced)
    if "homotopy" in report:
        report = dict(report)
        report["homotopy"] = {f"{i}{j}": list(h) for (i, j), h
                              in report["homotopy"].items()}
        report["cycle_lengths"] = {f"{i}{j}": v for (i, j), v
                                   in report["cycle_lengths"].items()}
    payload = {
        "triangulation": c.tri.descriptor(),
        "reduced_grid": _grid_text(reduced),
        "moves": [{"a": m.a, "b": m.b, "component": sorted(m.component)}
                  for m in moves],
        "structure": report,
    }
    if args.grid_out:
        with open(args.grid_out, "w") as fh:
            fh.write(payload["reduced_grid"])
    if args.log_out:
        with open(args.log_out, "w") as fh:
            json.dump(payload["moves"], fh, indent=2)
    args.tri = c.tri.descriptor()
    _emit_report(args, "reduce", payload)
    return 0


def cmd_verify(args):
    records = verify_mod.run_suite(level=args.level, threads=args.threads,
                                   spill_dir=args.spill_dir)
    for rec in records:
        status = "PASS" if rec["ok"] else "FAIL"
        print(f"{status} [{rec['id']}] {rec['name']} "
              f"({rec['elapsed']:.1f}s) {rec['details']}")
    ok = all(rec["ok"] for rec in records)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"level": args.level, "ok": ok, "criteria": records},
                      fh, indent=2)
    return 0 if ok else EXIT_INVARIANT


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="kempetorus",
        description="Kempe dynamics of 4-colorings on torus triangulations T(r,s,t)")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, tri=False, q=False, budget=False):
        p.add_argument("--out", default=_env_default("OUT"),
                       help="write the JSON report (or CSV for wsk) here")
        if tri:
            p.add_argument("--tri", required=True,
                           help="triangulation descriptor, e.g. 'T(6,6,0)'")
        if q:
            p.add_argument("--q", type=int,
                           default=_env_default("Q", 4, int))
        if budget:
            p.add_argument("--budget-nodes", type=int,
                           default=_env_default("BUDGET_NODES", None, int))
            p.add_argument("--budget-mem", type=float, metavar="MB",
                           default=_env_default("BUDGET_MEM", None, float))
            p.add_argument("--threads", type=int,
                           default=_env_default("THREADS", 1, int))
            p.add_argument("--spill-dir",
                           default=_env_default("SPILL_DIR"))

    p = sub.add_parser("build", help="construct T(r,s,t), dump tables")
    common(p, tri=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("enumerate", help="count canonical proper colorings")
    common(p, tri=True, q=True, budget=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classes", help="decompose into Kempe classes")
    common(p, tri=True, q=True, budget=True)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("construct", help="build a degree-6 (mod 12) witness")
    common(p)
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--M", type=int, default=None)
    p.add_argument("--trace", action="store_true",
                   help="include the per-step partial-degree trace")
    p.add_argument("--grid-out", help="also write the coloring grid file here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("wsk", help="run the zero-temperature WSK chain")
    common(p, tri=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, default=_env_default("SEED", 0, int))
    p.add_argument("--record", choices=("degrees", "states"), default="degrees")
    p.add_argument("--start", default="auto",
                   help="'auto', 'three', 'nonsingular', 'random', or a grid file")
    p.set_defaults(func=cmd_wsk)

    p = sub.add_parser("degree", help="degree report of a grid file")
    common(p)
    p.add_argument("--grid", required=True)
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("reduce", help="NS-minimal reduction of a grid file")
    common(p)
    p.add_argument("--grid", required=True)
    p.add_argument("--grid-out", help="write the reduced grid file here")
    p.add_argument("--log-out", help="write the Kempe move log here")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="run the acceptance suite")
    common(p)
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--threads", type=int,
                   default=_env_default("THREADS", 1, int))
    p.add_argument("--spill-dir", default=_env_default("SPILL_DIR"))
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    args._t0 = time.perf_counter()
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, KeyError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"invariant violation (bug): {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())

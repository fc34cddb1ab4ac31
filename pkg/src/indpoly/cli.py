"""Command-line front end.

    indpoly compute "join(K(70), union(4*K(3)))"
    indpoly compute --g6 graphs5.g6 --jobs 4
    indpoly analyze "C(7)"
    indpoly certify "KM(3,3,3)"
    indpoly scan h 1 3000 [--format csv]
    indpoly family counterexample 9 --connected

Records are written as JSON lines.  Every number is emitted as a decimal
string because coefficients outgrow 64-bit integers.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import islice

from . import __version__
from .analysis import is_well_covered
from .certify import certify_unimodal
from .engine import DEFAULT_BUDGET, MemoCache, audit_cache, indpoly_branch, indpoly_expr
from .expr import BudgetExceeded, Explicit, ExprSyntaxError, expand, parse_expr, render, vertex_count
from .families import (
    counterexample_for_alpha,
    family_report,
    gq_corrected,
    gq_literal,
    h_family,
    lemma3_poly,
    scan_h_family,
    scan_rows,
)
from .graph6 import GraphFormatError, parse_graph6
from .poly import shape
from .structure import EXPANSION_BUDGET, well_covered_expr


class UsageError(Exception):
    pass


def _timing(start: float) -> dict:
    return {"elapsed_ms": f"{(time.perf_counter() - start) * 1000:.3f}"}


def _record_input(source: str, text: str) -> dict:
    return {"kind": source, "text": text}


def _polynomial(e, opts):
    if isinstance(e, Explicit):
        cache = MemoCache()
        p = indpoly_branch(e.graph, cache)
        if opts.get("audit"):
            audit_cache(e.graph, cache, opts["audit"], random.Random(opts.get("seed")))
        return p
    return indpoly_expr(e, opts["budget"])


def run_record(task: tuple) -> dict:
    """Process one input record; never raises for per-record failures."""
    command, source, text, opts = task
    start = time.perf_counter()
    out: dict = {"input": _record_input(source, text)}
    try:
        e = Explicit(parse_graph6(text)) if source == "graph6" else parse_expr(text)
        out["vertices"] = str(vertex_count(e))
        p = _polynomial(e, opts)
        out["polynomial"] = p.to_json()
        out["shape"] = shape(p, with_roots=opts.get("roots", False)).to_json()
        if command == "analyze":
            out["well_cover"] = _analyze(e, opts)
        elif command == "certify":
            cert = certify_unimodal(e, budget=opts["enum_budget"], poly_budget=opts["budget"])
            out["certified"] = cert is not None
            out["certificate"] = None if cert is None else cert.to_json()
    except (BudgetExceeded, GraphFormatError, ExprSyntaxError) as exc:
        out["error"] = str(exc)
    out["timing"] = _timing(start)
    return out


def _analyze(e, opts) -> dict:
    if vertex_count(e) <= opts["enum_budget"]:
        report = is_well_covered(expand(e, opts["enum_budget"])).to_json()
        report["structural"] = False
        return report
    verdict = well_covered_expr(e, opts["enum_budget"])
    return verdict.to_json()


def _emit(records, stream) -> int:
    failures = 0
    for rec in records:
        if "error" in rec:
            failures += 1
        stream.write(json.dumps(rec) + "\n")
        stream.flush()
    return failures


def _tasks(args, command, opts):
    if args.g6:
        with open(args.g6, encoding="ascii", errors="replace") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    yield (command, "graph6", line, opts)
    for text in args.expr or []:
        yield (command, "expr", text, opts)


def _run_stream(args, command) -> int:
    if not args.g6 and not args.expr:
        raise UsageError("give an expression or --g6 FILE")
    for text in args.expr or []:
        # fail fast on malformed command-line expressions
        parse_expr(text)
    opts = {
        "budget": args.budget,
        "enum_budget": args.enum_budget,
        "audit": getattr(args, "audit", 0),
        "seed": args.seed,
        "roots": getattr(args, "roots", False),
    }
    tasks = _tasks(args, command, opts)
    if args.jobs <= 1:
        _emit(map(run_record, tasks), sys.stdout)
        return 0
    with ProcessPoolExecutor(max_workers=args.jobs) as pool:
        while True:
            batch = list(islice(tasks, args.jobs * 64))
            if not batch:
                break
            _emit(pool.map(run_record, batch), sys.stdout)
    return 0


def cmd_scan(args) -> int:
    if args.family != "h":
        raise UsageError(f"unknown scan family {args.family!r} (only 'h' is scannable)")
    if args.lo > args.hi or args.lo < 1:
        raise UsageError(f"malformed range [{args.lo}, {args.hi}]")
    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["n", "s0", "s1", "s2", "s3", "s4", "unimodal", "log_concave", "dip", "lc_violation"])
        for n, p, rep in scan_rows(args.lo, args.hi):
            w.writerow([n, *p.coeffs, int(rep.unimodal), int(rep.log_concave),
                        "" if rep.dip_witness is None else rep.dip_witness,
                        "" if rep.lc_witness is None else rep.lc_witness])
        return 0
    start = time.perf_counter()
    out = scan_h_family(args.lo, args.hi).to_json()
    out["timing"] = _timing(start)
    print(json.dumps(out))
    return 0


_CALL = re.compile(r"^\s*([a-z_0-9]+)\s*\((.*)\)\s*$")


def _family_args(name: str, params: list[str]) -> tuple[str, list[str]]:
    m = _CALL.match(name)
    if m:
        name = m.group(1)
        params = [p.strip() for p in m.group(2).split(",") if p.strip()] + params
    return name, params


def cmd_family(args) -> int:
    name, params = _family_args(args.name, args.params)
    connected = args.connected
    try:
        if name == "counterexample" and len(params) == 2:
            connected = connected or params[1].lower() in ("true", "1", "connected")
            params = params[:1]
        values = [int(p) for p in params]
    except ValueError:
        raise UsageError(f"malformed parameters {params!r}") from None
    if len(values) != 1:
        raise UsageError(f"family {name!r} takes one integer parameter")
    (v,) = values
    start = time.perf_counter()
    try:
        if name == "h":
            rep = family_report("h", h_family(v), {"n": v})
        elif name == "gq":
            rep = family_report("gq", gq_corrected(v), {"q": v})
        elif name == "gq_literal":
            rep = family_report("gq_literal", gq_literal(v), {"q": v})
        elif name == "lemma3":
            p = lemma3_poly(v)
            out = {"family": "lemma3", "params": {"k": str(v)}, "polynomial": p.to_json(), "shape": shape(p).to_json()}
            out["timing"] = _timing(start)
            print(json.dumps(out))
            return 0
        elif name == "counterexample":
            rep = counterexample_for_alpha(v, connected)
        else:
            raise UsageError(f"unknown family {name!r}; expected h, gq, gq_literal, lemma3 or counterexample")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = rep.to_json()
    out["expression"] = render(rep.expr) if rep.expr is not None else None
    out["timing"] = _timing(start)
    print(json.dumps(out))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for record streams")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised audits")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="max vertices materialised for polynomial computation")
    common.add_argument("--enum-budget", type=int, default=EXPANSION_BUDGET,
                        help="max vertices for stable-set enumeration")

    parser = argparse.ArgumentParser(prog="indpoly", description="Independence polynomials of graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in [
        ("compute", "independence polynomial and its shape"),
        ("analyze", "polynomial plus well-coveredness report"),
        ("certify", "polynomial plus a unimodality certificate"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("expr", nargs="*", help="graph expression(s)")
        p.add_argument("--g6", metavar="FILE", help="graph6 file, one graph per line")
        p.add_argument("--roots", action="store_true", help="also decide real-rootedness")
        if name == "compute":
            p.add_argument("--audit", type=int, default=0, metavar="K",
                           help="re-check K random memo entries by brute force (graph6 input)")

    p = sub.add_parser("scan", parents=[common], help="non-unimodality windows of a family")
    p.add_argument("family")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)

    p = sub.add_parser("family", parents=[common], help="report on a named family member")
    p.add_argument("name", help="h, gq, gq_literal, lemma3, counterexample (or e.g. 'h(1800)')")
    p.add_argument("params", nargs="*")
    p.add_argument("--connected", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in ("compute", "analyze", "certify"):
            return _run_stream(args, args.command)
        if args.command == "scan":
            return cmd_scan(args)
        return cmd_family(args)
    except ExprSyntaxError as exc:
        print(f"indpoly: parse error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, OSError) as exc:
        print(f"indpoly: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

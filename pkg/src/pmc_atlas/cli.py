"""Command line front end.

Exit codes: 0 all assertions hold, 1 an assertion failed, 2 usage or input
error, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .bounds import bound_report, verify_theorem_inequality
from .errors import BudgetError, InputError, PmcAtlasError
from .harness import Instance, choose_cover, fuzz, parse_family, verify_instance
from .io import read_graph, serialize_edge_list, to_graph6, write_graph
from .pmc import check_pmc, enumerate_pmcs, summarize
from .vertexset import iter_members, members, vset

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _load(args) -> Instance:
    if (args.input is None) == (args.family is None):
        raise InputError("give exactly one of --input or --family")
    if args.input is not None:
        return Instance(args.input, read_graph(args.input))
    return parse_family(args.family)


def _emit(obj, fmt: str, rows=None, fields=None) -> None:
    if fmt == "csv" and rows is not None:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def cmd_enumerate(args) -> int:
    inst = _load(args)
    g = inst.graph
    records = enumerate_pmcs(g, args.limit, args.jobs)
    counts = summarize(records)
    pmcs = [
        {
            "vertices": [g.label(v) for v in iter_members(r.omega)],
            "free": r.free,
            "center": None if r.nonfree_center is None else g.label(r.nonfree_center),
        }
        for r in records
    ]
    out = {"input": inst.descriptor, "n": g.n, "m": g.m, "counts": counts._asdict(), "pmcs": pmcs}
    if args.cover is not None or inst.cover is not None:
        vk = choose_cover(inst, args.cover)
        out["cover"] = vk.members()
        out["report"] = bound_report(vk.k, g.n, counts).as_dict()
    rows = [{"vertices": " ".join(p["vertices"]), "free": p["free"], "center": p["center"]} for p in pmcs]
    _emit(out, args.format, rows, ["vertices", "free", "center"])
    return EXIT_OK


def cmd_check(args) -> int:
    inst = _load(args)
    try:
        omega = vset(int(t) for t in args.omega.replace(" ", "").split(",") if t)
    except ValueError:
        raise InputError(f"bad vertex list {args.omega!r}") from None
    res = check_pmc(inst.graph, omega)
    _emit(
        {
            "input": inst.descriptor,
            "omega": members(omega),
            "is_pmc": res.is_pmc,
            "no_full_component": res.no_full_component,
            "cliquish": res.cliquish,
            "full_component": None if res.full_component is None else members(res.full_component),
            "unjoined_pair": None if res.unjoined_pair is None else list(res.unjoined_pair),
        },
        "json",
    )
    return EXIT_OK


def cmd_family(args) -> int:
    inst = parse_family(args.family)
    if args.output:
        write_graph(inst.graph, args.output)
    elif args.graph_format == "graph6":
        sys.stdout.write(to_graph6(inst.graph) + "\n")
    else:
        sys.stdout.write(serialize_edge_list(inst.graph))
    return EXIT_OK


def cmd_verify_bounds(args) -> int:
    inst = _load(args)
    subset = None
    if args.subset is not None:
        try:
            subset = vset(int(t) for t in args.subset.split(",") if t)
        except ValueError:
            raise InputError(f"bad vertex list {args.subset!r}") from None
        if subset & ~inst.graph.vertices:
            raise InputError("--subset has vertices outside the graph")
    result = verify_instance(
        inst, cover=args.cover, with_m=args.with_m, subset=subset,
        limit=args.limit, jobs=args.jobs, seed=args.seed,
    )
    _emit(result.as_dict(), "json")
    return EXIT_OK if result.passed else EXIT_FAIL


def cmd_fuzz(args) -> int:
    summary = fuzz(args.k, args.n, args.trials, args.seed, args.with_m, args.limit, args.jobs)
    _emit(summary, "json")
    return EXIT_FAIL if summary["failed"] else EXIT_OK


def cmd_theorem_table(args) -> int:
    if args.k_max < 1:
        raise InputError("--k-max must be at least 1")
    rows = verify_theorem_inequality(args.k_max)
    flat = [
        {
            "k": r.k,
            "three_parts": r.terms.three_parts,
            "inner_one_part": r.terms.inner_one_part,
            "inner_two_parts": r.terms.inner_two_parts,
            "inner_three_parts": r.terms.inner_three_parts,
            "added_vertices": r.added_vertices,
            "four_k": r.four_k,
            "total_ok": r.total_ok,
            "tail_ok": r.tail_ok,
        }
        for r in rows
    ]
    _emit(flat, args.format, flat, list(flat[0]))
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pmc-atlas", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p, cover=True):
        p.add_argument("--input", metavar="FILE", help="edge-list file (.g6 for graph6)")
        p.add_argument("--family", metavar="SPEC", help="star:N, gk:K, m:FILE:COVER, random:K:N:P:SEED")
        if cover:
            p.add_argument("--cover", metavar="V1,V2,...", help="vertex cover to use instead of the minimum")
        p.add_argument("--limit", type=int, help="brute-force vertex cap (default 26 or $PMC_ATLAS_LIMIT)")
        p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("enumerate", help="list all PMCs")
    graph_args(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="test one vertex set")
    graph_args(p, cover=False)
    p.add_argument("--omega", required=True, metavar="V1,V2,...")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("family", help="write a family graph")
    p.add_argument("--family", required=True, metavar="SPEC")
    p.add_argument("--output", metavar="FILE")
    p.add_argument("--graph-format", choices=("edges", "graph6"), default="edges")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify-bounds", help="enumerate and assert every applicable bound")
    graph_args(p)
    p.add_argument("--with-m", action="store_true", help="also check the extended graph")
    p.add_argument("--subset", metavar="V1,V2,...", help="check induced-subgraph monotonicity on this set")
    p.add_argument("--seed", type=int)
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_verify_bounds)

    p = sub.add_parser("fuzz", help="seeded random instances")
    p.add_argument("--k", default="1..3", metavar="LO..HI")
    p.add_argument("--n", default="4..10", metavar="LO..HI")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--with-m", action="store_true")
    p.add_argument("--limit", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("theorem-table", help="exact bound arithmetic per k")
    p.add_argument("--k-max", type=int, default=8)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_theorem_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"pmc-atlas: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, OSError) as exc:
        print(f"pmc-atlas: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PmcAtlasError as exc:
        print(f"pmc-atlas: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

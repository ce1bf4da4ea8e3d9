"""Command-line front end.

Exit codes: 0 success, 1 a checked property failed, 2 usage or input error,
3 search budget exhausted without an answer.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import atlas, constructions as cons
from .coloring import Coloring, exists_equitable_k_coloring, exists_k_coloring, SearchStats
from .formats import (FormatError, coloring_to_json, graph_to_json, read_coloring, read_graph, to_dot,
                      to_graph6)
from .graph import GraphError
from .invariants import CageParams, bipartition
from .report import verify_graph
from .search import SearchBudget, min_order
from .verify import run_claim

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=1) + "\n")


def _load_graph(path: str):
    try:
        return read_graph(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except (FormatError, GraphError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _load_coloring(path: str, n: int) -> Coloring:
    try:
        return read_coloring(path, n)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _write_outputs(out_dir: Path, stem: str, graph, coloring, provenance) -> dict:
    out_dir.mkdir(parents=True, exist_ok=True)
    files = {"graph": out_dir / f"{stem}.g6", "coloring": out_dir / f"{stem}.coloring.json"}
    files["graph"].write_text(to_graph6(graph) + "\n")
    files["coloring"].write_text(json.dumps(coloring_to_json(coloring)) + "\n")
    if provenance is not None:
        files["provenance"] = out_dir / f"{stem}.provenance.json"
        files["provenance"].write_text(json.dumps(provenance, sort_keys=True, indent=1) + "\n")
    return {k: str(v) for k, v in files.items()}


# -- subcommands ---------------------------------------------------------------

def cmd_construct(args) -> int:
    out_dir = Path(args.out)
    if args.what == "pg":
        try:
            g = cons.projective_incidence_graph(args.q)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        sides = Coloring(bipartition(g).sides, 2)
        files = _write_outputs(out_dir, f"pg2-{args.q}", g, sides, {"construction": "pg-incidence", "q": args.q})
        _emit({"order": g.n, "files": files})
        return EXIT_OK
    try:
        if args.what == "r33":
            out = cons.r33_cage(args.r)
            stem = f"r33-{args.r}"
        else:
            g = _load_graph(args.input)
            stem = Path(args.input).name.split(".")[0]
            if args.what == "odd-girth":
                fn = cons.odd_from_even_vertex if args.mode == "vertex" else cons.odd_from_even_edge
                out = fn(g)
                stem += f"-odd-{args.mode}"
            elif args.what == "glue":
                out = cons.subdivide_and_glue(g)
                stem += "-glue"
            else:
                out = cons.equitable_triple(g, _load_coloring(args.coloring, g.n))
                stem += "-triple"
    except cons.ConstructionError as exc:
        _emit({"error": str(exc)})
        return EXIT_FAIL
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    files = _write_outputs(out_dir, stem, out.graph, out.coloring, out.provenance)
    _emit({"claimed": out.claimed.as_dict(), "order": out.graph.n, "files": files,
           "report": out.report.as_dict(args.timing) if out.report else None})
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.claim:
        kwargs = {"r_max": args.r_max, "jobs": args.jobs} if args.claim == "r33" else {}
        reports = run_claim(args.claim, **kwargs)
    else:
        if not (args.input and args.r and args.g and args.chi):
            raise UsageError("verify needs --claim, or --input with --r, --g and --chi")
        g = _load_graph(args.input)
        c = _load_coloring(args.coloring, g.n) if args.coloring else None
        try:
            params = CageParams(args.r, args.g, args.chi, args.equitable)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        reports = [verify_graph(g, params, c, claim=Path(args.input).name)]
    if args.text:
        for rep in reports:
            sys.stdout.write(rep.text() + "\n")
    else:
        _emit({"passed": all(r.passed for r in reports), "reports": [r.as_dict(args.timing) for r in reports]})
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_color(args) -> int:
    g = _load_graph(args.input)
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    if args.equitable:
        w = exists_equitable_k_coloring(g, args.k, node_limit=args.node_limit)
        result = {"k": args.k, "equitable": True, "search": w.as_dict()}
        coloring, inconclusive = w.coloring, w.inconclusive
    else:
        stats = SearchStats()
        coloring = exists_k_coloring(g, args.k, node_limit=args.node_limit, stats=stats)
        result = {"k": args.k, "equitable": False, "search": {"nodes": stats.nodes, "exhausted": stats.complete}}
        inconclusive = coloring is None and not stats.complete
    result["found"] = coloring is not None
    if coloring is not None:
        result["coloring"] = coloring_to_json(coloring)
        result["census"] = list(coloring.census)
        if args.out:
            Path(args.out).write_text(json.dumps(coloring_to_json(coloring)) + "\n")
    _emit(result)
    if inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_OK if coloring is not None else EXIT_FAIL


def cmd_search(args) -> int:
    try:
        params = CageParams(args.r, args.g, args.chi, args.equitable)
        budget = SearchBudget(args.max_n, args.node_limit, args.time_limit)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    res = min_order(params, budget, use_constructions=not args.no_constructions)
    _emit(res.as_dict())
    if res.inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_OK if res.order is not None else EXIT_FAIL


def cmd_atlas(args) -> int:
    try:
        if args.action == "list":
            eq = True if args.equitable else None
            _emit(atlas.list_entries(r=args.r, g=args.g, equitable_coloring=eq))
            return EXIT_OK
        entry = atlas.load(args.name)
    except atlas.AtlasError as exc:
        raise UsageError(str(exc)) from exc
    _emit({**entry.summary(), "graph6": to_graph6(entry.graph),
           "colorings_data": {lab: coloring_to_json(c) for lab, c in entry.colorings}})
    return EXIT_OK


def cmd_export(args) -> int:
    g = _load_graph(args.input)
    c = _load_coloring(args.coloring, g.n) if args.coloring else None
    if args.format == "g6":
        text = to_graph6(g) + "\n"
    elif args.format == "dot":
        text = to_dot(g, c)
    else:
        obj = graph_to_json(g)
        if c is not None:
            obj["coloring"] = coloring_to_json(c)
        text = json.dumps(obj) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rgcages", description="Construct, color and verify (r,g,chi)-graphs.")
    p.add_argument("--timing", action="store_true", help="include runtimes in JSON reports")
    p.add_argument("--seedless", action="store_true",
                   help="accepted for compatibility; output is always deterministic unless --timing is set")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="run a construction")
    csub = c.add_subparsers(dest="what", required=True)
    r33 = csub.add_parser("r33")
    r33.add_argument("--r", type=int, required=True)
    odd = csub.add_parser("odd-girth")
    odd.add_argument("--input", required=True)
    odd.add_argument("--mode", choices=["vertex", "edge"], required=True)
    glue = csub.add_parser("glue")
    glue.add_argument("--input", required=True)
    tri = csub.add_parser("triple")
    tri.add_argument("--input", required=True)
    tri.add_argument("--coloring", required=True)
    pg = csub.add_parser("pg")
    pg.add_argument("--q", type=int, required=True)
    for sp in (r33, odd, glue, tri, pg):
        sp.add_argument("--out", default=".", help="output directory")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="run a named check or verify a graph file")
    v.add_argument("--claim", choices=["r33", "robertson", "eq453", "equitable-list"])
    v.add_argument("--r-max", type=int, default=12)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--input")
    v.add_argument("--coloring")
    v.add_argument("--r", type=int)
    v.add_argument("--g", type=int)
    v.add_argument("--chi", type=int)
    v.add_argument("--equitable", action="store_true")
    v.add_argument("--text", action="store_true", help="one human-readable line per report")
    v.set_defaults(func=cmd_verify)

    col = sub.add_parser("color", help="exact k-coloring search")
    col.add_argument("--input", required=True)
    col.add_argument("--k", type=int, required=True)
    col.add_argument("--equitable", action="store_true")
    col.add_argument("--node-limit", type=int)
    col.add_argument("--out")
    col.set_defaults(func=cmd_color)

    s = sub.add_parser("search", help="exhaustive minimum-order search")
    ssub = s.add_subparsers(dest="what", required=True)
    mo = ssub.add_parser("min-order")
    mo.add_argument("--r", type=int, required=True)
    mo.add_argument("--g", type=int, required=True)
    mo.add_argument("--chi", type=int, required=True)
    mo.add_argument("--equitable", action="store_true")
    mo.add_argument("--max-n", type=int, required=True)
    mo.add_argument("--node-limit", type=int, default=50_000_000)
    mo.add_argument("--time-limit", type=float, default=600.0)
    mo.add_argument("--no-constructions", action="store_true", help="settle every order by enumeration")
    s.set_defaults(func=cmd_search)

    a = sub.add_parser("atlas", help="bundled named graphs")
    asub = a.add_subparsers(dest="action", required=True)
    al = asub.add_parser("list")
    al.add_argument("--r", type=int)
    al.add_argument("--g", type=int)
    al.add_argument("--equitable", action="store_true", help="only entries with a bundled equitable coloring")
    ag = asub.add_parser("get")
    ag.add_argument("name")
    a.set_defaults(func=cmd_atlas)

    e = sub.add_parser("export", help="convert a graph file")
    e.add_argument("--input", required=True)
    e.add_argument("--format", choices=["g6", "dot", "json"], required=True)
    e.add_argument("--coloring")
    e.add_argument("--out")
    e.set_defaults(func=cmd_export)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"rgcages: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""``subcolor`` command-line interface.

Exit codes: 0 success, 1 negative answer (UNSAT, invalid colouring, failed
certificate, absent gadget), 2 usage or input error, 3 integrity error.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path

from .core.generators import random_grid_subgraph
from .core.graph import Graph, GraphFormatError, load_graph_text, save_adjlist, save_graph6, to_dot
from .gadgets import (EdgeGadgetSpec, GadgetSpecError, VertexGadgetSpec, assemble_vertex_gadget,
                      builtin_gadget, default_gadgets, dump_gadget, gadget_from_json,
                      synthesize_edge_gadget, synthesize_vertex_gadget, verify_edge_gadget,
                      verify_vertex_gadget)
from .gadgets.synth import SynthesisRefused
from .reduction import (ReductionIntegrityError, ReductionRefused, check_class_membership,
                        equivalence_experiment, export_gprime, project_coloring, reduce)
from .subcoloring import (PartialAssignment, Subcoloring, monochromatic_p3, solve_2_subcoloring,
                          verify_2_subcoloring)

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INTEGRITY = 0, 1, 2, 3
log = logging.getLogger("subcolor")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# input / output helpers

def _read(path: str | None) -> str:
    if path is None:
        raise UsageError("missing --in")
    if path == "-":
        return sys.stdin.read()
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"no such file: {path}")
    return p.read_text()


def _graph(path: str | None) -> Graph:
    return load_graph_text(_read(path))


def _json_file(path: str) -> dict:
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc})") from exc


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, data) -> None:
    _emit(args, json.dumps(data, indent=1, sort_keys=True) + "\n")


def _table(rows: list[tuple]) -> str:
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    return "".join("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in rows)


def _gadgets(args) -> tuple[VertexGadgetSpec, EdgeGadgetSpec]:
    h, e = default_gadgets(args.pairs)
    if getattr(args, "vertex_gadget", None):
        h = gadget_from_json(_json_file(args.vertex_gadget))
    if getattr(args, "edge_gadget", None):
        e = gadget_from_json(_json_file(args.edge_gadget))
    if not isinstance(h, VertexGadgetSpec) or not isinstance(e, EdgeGadgetSpec):
        raise UsageError("gadget files have the wrong kind")
    return h, e


# ---------------------------------------------------------------------------
# subcommands

def cmd_solve(args) -> int:
    g = _graph(args.input)
    cons = PartialAssignment.from_json(_json_file(args.constraints)) if args.constraints else PartialAssignment()
    try:
        c = solve_2_subcoloring(g, cons)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if c is None:
        _emit(args, "UNSAT\n" if args.human else json.dumps({"status": "UNSAT"}) + "\n")
        return EXIT_NO
    if args.human:
        _emit(args, f"SAT\nred:  {c.color_class(0)}\nblue: {c.color_class(1)}\n")
    else:
        _emit_json(args, {"status": "SAT", "coloring": c.to_json()})
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _graph(args.input)
    data = _json_file(args.coloring)
    data = data.get("coloring", data)
    try:
        c = Subcoloring.from_json(data, g.n)
    except (ValueError, IndexError) as exc:
        raise UsageError(f"bad colouring: {exc}") from exc
    ok = verify_2_subcoloring(g, c)
    witness = None if ok else list(monochromatic_p3(g, c))
    if args.human:
        _emit(args, "valid\n" if ok else f"invalid: monochromatic induced P3 {witness}\n")
    else:
        _emit_json(args, {"valid": ok, "p3": witness})
    return EXIT_OK if ok else EXIT_NO


def cmd_class(args) -> int:
    report = check_class_membership(_graph(args.input))
    if args.human:
        rows = [("predicate", "holds", "witness")]
        rows += [(k, v.holds, "" if v.witness is None else v.witness) for k, v in report.verdicts.items()]
        rows += [(f"p3-removal ({k})", v["bipartite"], f"removed {v['removed']}")
                 for k, v in report.p3_removal.items()]
        _emit(args, _table(rows))
    else:
        _emit_json(args, report.to_json())
    return EXIT_OK if report.all_pass else EXIT_NO


def _load_gadget_arg(args):
    if args.builtin:
        return builtin_gadget(args.builtin)
    return gadget_from_json(_json_file(args.input))


def cmd_gadget(args) -> int:
    if args.action == "verify":
        spec = _load_gadget_arg(args)
        if isinstance(spec, EdgeGadgetSpec):
            report = verify_edge_gadget(spec)
        else:
            report = verify_vertex_gadget(spec)
        if args.human:
            rows = [("property", "status", "detail")]
            rows += [(k, v.status, v.detail) for k, v in report.verdicts.items()]
            _emit(args, _table(rows))
        else:
            _emit_json(args, report.to_json())
        return EXIT_OK if report.all_pass else EXIT_NO
    if args.action == "assemble":
        e = builtin_gadget("edge-w4") if not args.edge_gadget else gadget_from_json(_json_file(args.edge_gadget))
        _emit(args, dump_gadget(assemble_vertex_gadget(e, args.pairs)) + "\n")
        return EXIT_OK
    budget = None if args.budget_ms is None else args.budget_ms / 1000
    try:
        if args.kind == "edge":
            result = synthesize_edge_gadget(args.nmax, time_budget=budget, require_class=args.require_class)
        else:
            e = builtin_gadget("edge-w4") if not args.edge_gadget else gadget_from_json(_json_file(args.edge_gadget))
            result = synthesize_vertex_gadget(e, args.nmax, args.pairs, time_budget=budget)
    except SynthesisRefused as exc:
        raise UsageError(str(exc)) from exc
    _emit_json(args, result.to_json())
    return EXIT_OK if result.found is not None else EXIT_NO


def cmd_reduce(args) -> int:
    g = _graph(args.input)
    h, e = _gadgets(args)
    r = reduce(g, h, e)
    fmt = args.format or "graph6"
    if fmt == "json":
        body, side = export_gprime(r, "graph6")
        _emit_json(args, {"graph6": body.strip(), "n": r.gprime.n, "m": r.gprime.m,
                          "provenance": json.loads(side)})
        return EXIT_OK
    if fmt not in ("graph6", "dot"):
        raise UsageError(f"reduce supports graph6, dot or json, not {fmt}")
    body, side = export_gprime(r, fmt)
    _emit(args, body)
    if args.out:
        Path(args.out + ".provenance.json").write_text(side + "\n")
    return EXIT_OK


def cmd_project(args) -> int:
    g = _graph(args.input)
    h, e = _gadgets(args)
    r = reduce(g, h, e)
    data = _json_file(args.coloring)
    cprime = Subcoloring.from_json(data.get("coloring", data), r.gprime.n)
    c = project_coloring(r, cprime)
    if args.human:
        _emit(args, f"red:  {c.color_class(0)}\nblue: {c.color_class(1)}\n")
    else:
        _emit_json(args, {"coloring": c.to_json()})
    return EXIT_OK


def _grid(text: str) -> tuple[int, int]:
    try:
        w, h = text.lower().split("x")
        return int(w), int(h)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"grid must look like 4x4, got {text!r}") from exc


def cmd_experiment(args) -> int:
    h, e = _gadgets(args)
    grids = args.grid or [(4, 4)]
    result = equivalence_experiment(args.count, grids[0][0], grids[0][1], Fraction(args.keep_prob), args.seed,
                                    h, e, jobs=args.jobs, timings=args.timings, extra_grids=grids[1:])
    _emit(args, result.to_csv())
    summary = result.summary()
    if args.summary:
        Path(args.summary).write_text(json.dumps(summary, indent=1, sort_keys=True) + "\n")
    if args.human:
        sys.stderr.write(_table([("key", "value")] + [(k, v) for k, v in summary.items() if k != "errors"]))
    clean = summary["agreements"] == summary["instances"] and not summary["class_failures"] \
        and not summary["errors"]
    return EXIT_OK if clean else EXIT_NO


def cmd_gen(args) -> int:
    g = random_grid_subgraph(args.width, args.height, Fraction(args.keep_prob), args.seed)
    fmt = args.format or "graph6"
    if fmt == "graph6":
        _emit(args, save_graph6(g) + "\n")
    elif fmt == "adj":
        _emit(args, save_adjlist(g))
    elif fmt == "dot":
        _emit(args, to_dot(g))
    elif fmt == "json":
        _emit_json(args, {"n": g.n, "edges": [list(x) for x in g.edge_list()]})
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--human", action="store_true", help="tabular text instead of JSON")
    common.add_argument("--format", choices=["graph6", "adj", "dot", "json"])
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--budget-ms", type=int)
    common.add_argument("--nmax", type=int, default=9)
    common.add_argument("--pairs", type=int, choices=[3, 4], default=4)

    p = argparse.ArgumentParser(prog="subcolor", description="2-subcolouring solver and reduction toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common], help="decide 2-subcolourability")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--constraints")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", parents=[common], help="check a colouring")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--coloring", required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("class", parents=[common], help="certify membership in the target class")
    s.add_argument("--in", dest="input", required=True)
    s.set_defaults(func=cmd_class)

    s = sub.add_parser("gadget", parents=[common], help="verify, assemble or synthesise gadgets")
    s.add_argument("action", choices=["verify", "synth", "assemble"])
    s.add_argument("--in", dest="input")
    s.add_argument("--builtin", choices=["edge-w4", "vertex-h3", "vertex-h4"])
    s.add_argument("--kind", choices=["edge", "vertex"], default="edge")
    s.add_argument("--edge-gadget")
    s.add_argument("--require-class", action="store_true")
    s.set_defaults(func=cmd_gadget)

    s = sub.add_parser("reduce", parents=[common], help="build G' from G")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--vertex-gadget")
    s.add_argument("--edge-gadget")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("project", parents=[common], help="read a colouring of G' back onto G")
    s.add_argument("--in", dest="input", required=True, help="the source graph G")
    s.add_argument("--coloring", required=True, help="colouring of G' as produced by solve")
    s.add_argument("--vertex-gadget")
    s.add_argument("--edge-gadget")
    s.set_defaults(func=cmd_project)

    s = sub.add_parser("experiment", parents=[common], help="seeded equivalence experiment")
    s.add_argument("--count", type=int, default=10)
    s.add_argument("--grid", type=_grid, action="append", help="grid shape WxH; repeat to alternate")
    s.add_argument("--keep-prob", default="0.8")
    s.add_argument("--timings", action="store_true", help="fill the millis column (not reproducible)")
    s.add_argument("--summary", help="write the JSON summary here")
    s.add_argument("--vertex-gadget")
    s.add_argument("--edge-gadget")
    s.set_defaults(func=cmd_experiment)

    s = sub.add_parser("gen", parents=[common], help="random grid subgraph")
    s.add_argument("width", type=int)
    s.add_argument("height", type=int)
    s.add_argument("keep_prob")
    s.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=os.environ.get("SUBCOLOR_LOG", "WARNING").upper(),
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, GraphFormatError, GadgetSpecError, ReductionRefused, ValueError, KeyError) as exc:
        log.debug("usage error", exc_info=True)
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (ReductionIntegrityError, AssertionError) as exc:
        sys.stderr.write(f"integrity error: {exc}\n")
        return EXIT_INTEGRITY


if __name__ == "__main__":
    sys.exit(main())

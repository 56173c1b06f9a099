"""Command-line interface.

Exit status: 0 on success, 1 when a check fails (non-median input,
failed sweep, inconsistent cross-check), 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import io
from .barycenter import center_of_mass, psi, singleton_criterion
from .centroid import centroid, depth_table, majority_depth_halfspaces
from .chains import find_chains, median_core, validate_chain
from .errors import MedkitError, NotMedian, ParseError
from .generators import GENERATOR_PARAMS, generate
from .graph import MedianGraph, convex_hull, is_median_graph, median_hull
from .pocset import Pocset, dual_median_graph
from .sweeps import run_suite
from .walls import (
    decompose,
    dual_round_trip_isomorphic,
    fundamental_family,
    pocset_of,
    rank,
    separate,
    verify_factorization,
    wallspace,
)

COMMANDS = ("validate", "walls", "rank", "factors", "separate", "hull",
            "core", "chains", "barycenter", "psi", "centroid", "dualize",
            "sweep")


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--input", help="JSON input file (graph, or pocset for dualize)")
    p.add_argument("--generator", nargs="+", metavar="NAME_OR_K=V",
                   help="corpus generator name followed by k=v parameters")
    p.add_argument("--seed", type=int, default=0, help="default generator seed")
    p.add_argument("--out", help="write the structured report to this file")
    p.add_argument("--dot", help="write a DOT rendering to this file")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--timing", action="store_true",
                   help="include wall-clock timing in the report "
                        "(reports are byte-stable only without it)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="medkit",
        description="median-graph geometry: walls, chains, barycenters, "
                    "centroids, cores")
    sub = ap.add_subparsers(dest="command", required=True)
    ps = {}
    for cmd in COMMANDS:
        p = sub.add_parser(cmd)
        _add_common(p)
        ps[cmd] = p
    for cmd in ("separate", "hull", "centroid"):
        ps[cmd].add_argument("--set", action="append", default=[],
                             help="vertex-set literal, e.g. [0,2,5]")
    ps["chains"].add_argument("--spacing", type=int, default=0)
    ps["chains"].add_argument("--length", type=int, default=2)
    ps["chains"].add_argument("--limit", type=int, default=10_000)
    ps["barycenter"].add_argument("--measure", required=False,
                                  help="measure JSON file or inline array")
    ps["psi"].add_argument("--measure", action="append", default=[],
                           help="two measures: JSON files or inline arrays")
    ps["psi"].add_argument("--family", choices=("all", "fundamental"),
                           default="all")
    ps["sweep"].add_argument("--suite", default="default")
    return ap


def _load_generator_input(args):
    name = args.generator[0]
    params = {}
    for tok in args.generator[1:]:
        if "=" not in tok:
            raise ParseError(f"generator parameter {tok!r} is not k=v")
        k, v = tok.split("=", 1)
        params[k] = v
    obj = generate(name, params, default_seed=args.seed)
    detail = {"generator": name, "params": params, "seed": args.seed}
    return obj, detail


def _load_subject(args, want="graph"):
    """Returns (object, input-detail) where object is a graph or pocset."""
    if args.generator:
        return _load_generator_input(args)
    if args.input:
        obj = io.load_json(args.input)
        if want == "pocset" or (isinstance(obj, dict) and "elements" in obj):
            return io.parse_pocset(obj), {"file": args.input, "data": obj}
        return io.parse_graph(obj), {"file": args.input, "data": obj}
    raise ParseError("need --input or --generator")


def _need_graph(args) -> tuple[MedianGraph, dict]:
    obj, detail = _load_subject(args)
    if not isinstance(obj, MedianGraph):
        raise ParseError(f"{args.command} needs a graph input")
    return obj, detail


def _measure_arg(text, n):
    if text is None:
        raise ParseError("missing --measure")
    if text.strip().startswith("["):
        return io.parse_measure(json.loads(text), n)
    return io.parse_measure(io.load_json(text), n)


def _vertex_sets(args, graph, count):
    sets = [io.parse_vertex_set(s) for s in args.set]
    if len(sets) != count:
        raise ParseError(f"{args.command} needs exactly {count} --set")
    for s in sets:
        for v in s:
            if not 0 <= v < graph.n:
                raise ParseError(f"vertex {v} out of range")
    return sets


def _emit(args, report, graph=None, highlights=None) -> int:
    out = io.render_report(report, args.format)
    sys.stdout.write(out)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(io.render_report(report, "structured"))
    if args.dot and graph is not None:
        with open(args.dot, "w") as fh:
            fh.write(io.dot_graph(graph, highlights))
    return 0 if io.report_passed(report) else 1


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        return _dispatch(args, t0)
    except (ParseError, MedkitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _timing(args, t0):
    return (time.perf_counter() - t0) * 1e3 if args.timing else None


def _dispatch(args, t0) -> int:
    cmd = args.command

    if cmd == "sweep":
        results = run_suite(args.suite)
        report = io.make_report(
            "sweep", {"suite": args.suite},
            {r.suite: {"checks": r.checks, "failures": r.failures[:10],
                       "skipped": r.skipped}
             for r in results},
            [(r.suite, r.ok) for r in results],
            timing_ms=_timing(args, t0))
        return _emit(args, report)

    if cmd == "dualize":
        obj, detail = _load_subject(args, want="any")
        if isinstance(obj, Pocset):
            dual = dual_median_graph(obj)
            verdict = is_median_graph(dual.graph)
            report = io.make_report(
                "dualize", detail,
                {"dual": io.graph_to_obj(dual.graph),
                 "ultrafilters": [list(u) for u in dual.ultrafilters]},
                [("dual-is-median", verdict.ok)],
                timing_ms=_timing(args, t0))
            return _emit(args, report, dual.graph)
        graph = obj
        poc = pocset_of(graph)
        dual = dual_median_graph(poc)
        ok = dual_round_trip_isomorphic(graph, dual)
        report = io.make_report(
            "dualize", detail,
            {"pocset": io.pocset_to_obj(poc),
             "dual": io.graph_to_obj(dual.graph)},
            [("round-trip-isomorphic", ok)],
            timing_ms=_timing(args, t0))
        return _emit(args, report, graph)

    graph, detail = _need_graph(args)

    if cmd == "validate":
        verdict = is_median_graph(graph)
        report = io.make_report(
            "validate", detail,
            {"n": graph.n, "edges": len(graph.edges),
             "witness": list(verdict.witness) if verdict.witness else None},
            [("is-median", verdict.ok)],
            timing_ms=_timing(args, t0))
        return _emit(args, report, graph)

    if cmd == "walls":
        try:
            ws = wallspace(graph)
        except NotMedian as exc:
            report = io.make_report("walls", detail, {"error": str(exc)},
                                    [("walls-computed", False)],
                                    timing_ms=_timing(args, t0))
            return _emit(args, report, graph)
        report = io.make_report(
            "walls", detail,
            {"count": len(ws.walls),
             "walls": [{"id": w.id, "edge": list(w.rep_edge),
                        "side0": io.mask_list(w.side0),
                        "side1": io.mask_list(w.side1)}
                       for w in ws.walls]},
            [("walls-computed", True)],
            timing_ms=_timing(args, t0))
        return _emit(args, report, graph)

    if cmd == "rank":
        report = io.make_report("rank", detail, {"rank": rank(graph)},
                                [("rank-computed", True)],
                                timing_ms=_timing(args, t0))
        return _emit(args, report, graph)

    if cmd == "factors":
        dec = decompose(graph)
        ok = verify_factorization(graph, dec)
        report = io.make_report(
            "factors", detail,
            {"count": len(dec.factors),
             "factor_sizes": [f.n for f in dec.factors],
             "wall_groups": [list(g) for g in dec.wall_groups]},
            [("reconstruction-isomorphic", ok)],
            timing_ms=_timing(args, t0))
        return _emit(args, report, graph)

    if cmd == "separate":
        c1, c2 = _vertex_sets(args, graph, 2)
        h = separate(graph, c1, c2)
        ok = (all(h.mask[v] for v in c2)
              and not any(h.mask[v] for v in c1))
        report = io.make_report(
            "separate", detail,
            {"halfspace": {"wall": h.wall_id, "side": h.orientation,
                           "vertices": h.ids()}},
            [("separates", ok)],
            timing_ms=_timing(args, t0))
        return _emit(args, report, graph)

    if cmd == "hull":
        (s,) = _vertex_sets(args, graph, 1)
        ch = convex_hull(graph, s)
        mh = median_hull(graph, s)
        report = io.make_report(
            "hull", detail,
            {"convex_hull": io.mask_list(ch), "median_hull": io.mask_list(mh)},
            [("median-hull-inside-convex-hull", not (mh & ~ch).any())],
            timing_ms=_timing(args, t0))
        return _emit(args, report, graph,
                     highlights={"lightblue": ch})

    if cmd == "core":
        result = median_core(graph)
        report = io.make_report(
            "core", detail,
            {"core": io.mask_list(result.core),
             "generators": io.mask_list(result.generators),
             "flag": ("ok" if result.has_regular_directions
                      else "NoRegularDirections")},
            [("core-computed", True)],
            timing_ms=_timing(args, t0))
        return _emit(args, report, graph,
                     highlights={"orange": result.core})

    if cmd == "chains":
        chains = find_chains(graph, args.spacing, args.length,
                             limit=args.limit)
        for c in chains:
            validate_chain(graph, c)
        report = io.make_report(
            "chains", detail,
            {"spacing": args.spacing, "length": args.length,
             "count": len(chains),
             "chains": [{"halfspaces": list(c.halfspace_ids),
                         "gaps": list(c.gaps),
                         "certified": True}
                        for c in chains[:100]]},
            [("all-chains-revalidate", True)],
            timing_ms=_timing(args, t0))
        return _emit(args, report, graph)

    if cmd == "barycenter":
        mu = _measure_arg(args.measure, graph.n)
        result = center_of_mass(graph, mu)
        crit = singleton_criterion(graph, mu)
        report = io.make_report(
            "barycenter", detail,
            {"center": io.mask_list(result.center),
             "singleton": result.singleton,
             "majority_ids": list(result.majority_ids),
             "balanced_ids": list(result.balanced_ids),
             "criterion_witness": (list(crit.witness)
                                   if crit.witness else None)},
            [("criterion-matches-center", crit.holds == result.singleton)],
            timing_ms=_timing(args, t0))
        return _emit(args, report, graph,
                     highlights={"orange": result.center})

    if cmd == "psi":
        if len(args.measure) != 2:
            raise ParseError("psi needs exactly two --measure")
        mu1 = _measure_arg(args.measure[0], graph.n)
        mu2 = _measure_arg(args.measure[1], graph.n)
        family = None
        if args.family == "fundamental":
            family = fundamental_family(graph)
        value = psi(graph, mu1, mu2, family)
        report = io.make_report(
            "psi", detail,
            {"family": args.family,
             "value": {"num": value.numerator, "den": value.denominator}},
            [("psi-computed", True)],
            timing_ms=_timing(args, t0))
        return _emit(args, report, graph)

    if cmd == "centroid":
        (k,) = _vertex_sets(args, graph, 1)
        c = centroid(graph, k)
        depths = depth_table(graph, k)
        strict = majority_depth_halfspaces(graph, k, strict=True)
        loose = majority_depth_halfspaces(graph, k, strict=False)
        raw = np.ones(graph.n, dtype=bool)
        for h in loose:
            raw &= h.mask
        kmask = np.zeros(graph.n, dtype=bool)
        kmask[k] = True
        report = io.make_report(
            "centroid", detail,
            {"centroid": io.mask_list(c),
             "depths": [[int(depths[2 * w]), int(depths[2 * w + 1])]
                        for w in range(len(depths) // 2)],
             "strict_ids": [h.id for h in strict],
             "nonstrict_ids": [h.id for h in loose],
             "nonstrict_raw_intersection": io.mask_list(raw),
             "nonstrict_raw_empty": not raw.any()},
            [("centroid-nonempty", bool(c.any()))],
            timing_ms=_timing(args, t0))
        return _emit(args, report, graph,
                     highlights={"orange": c, "lightblue": kmask})

    raise ParseError(f"unknown command {cmd!r}")


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

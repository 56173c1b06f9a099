"""File formats, DOT export and report assembly.

All structured input and output is JSON (object/array notation).
Graph: {"n": int, "edges": [[u, v], ...]}.
Pocset: {"elements": [...], "complement": [[a, b], ...], "leq": [[a, b], ...]}.
Measure: [{"vertex": v, "num": a, "den": b}, ...].
Reports keep a stable field order and are byte-stable across runs for
fixed seeds and inputs (timing is opt-in for that reason).
"""

from __future__ import annotations

import hashlib
import json

import numpy as np

from .barycenter import ProbMeasure
from .errors import MedkitError, ParseError
from .graph import MedianGraph
from .pocset import Pocset, pocset_from_relations


def parse_graph(obj) -> MedianGraph:
    try:
        n = int(obj["n"])
        edges = [(int(u), int(v)) for u, v in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad graph object: {exc}") from exc
    try:
        return MedianGraph(n, edges)
    except (MedkitError, ValueError) as exc:
        raise ParseError(str(exc)) from exc


def graph_to_obj(graph: MedianGraph) -> dict:
    return {"n": graph.n, "edges": [list(e) for e in graph.edges]}


def parse_pocset(obj) -> Pocset:
    try:
        labels = list(obj["elements"])
        pos = {e: i for i, e in enumerate(labels)}
        if len(pos) != len(labels):
            raise ParseError("duplicate pocset elements")
        star = [(pos[a], pos[b]) for a, b in obj["complement"]]
        leq = [(pos[a], pos[b]) for a, b in obj.get("leq", [])]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad pocset object: {exc}") from exc
    try:
        return pocset_from_relations(len(labels), star, leq, labels=labels)
    except MedkitError as exc:
        raise ParseError(str(exc)) from exc


def pocset_to_obj(pocset: Pocset) -> dict:
    labels = list(pocset.labels) if pocset.labels else list(range(pocset.size))
    comp = [[labels[a], labels[int(pocset.star[a])]]
            for a in range(pocset.size) if a < pocset.star[a]]
    leq = [[labels[a], labels[b]]
           for a in range(pocset.size) for b in range(pocset.size)
           if a != b and pocset.leq[a, b]]
    return {"elements": labels, "complement": comp, "leq": leq}


def parse_measure(obj, n: int) -> ProbMeasure:
    try:
        triples = [(int(e["vertex"]), int(e["num"]), int(e["den"]))
                   for e in obj]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad measure object: {exc}") from exc
    try:
        return ProbMeasure.from_triples(n, triples)
    except MedkitError as exc:
        raise ParseError(str(exc)) from exc


def measure_to_obj(measure: ProbMeasure) -> list:
    return [{"vertex": v, "num": w.numerator, "den": w.denominator}
            for v, w in sorted(measure.weights.items())]


def parse_vertex_set(text) -> list[int]:
    """Vertex-set literal: a JSON array of ids."""
    try:
        data = json.loads(text) if isinstance(text, str) else text
        return [int(v) for v in data]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad vertex set {text!r}: {exc}") from exc


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def digest(obj) -> str:
    """Short stable hash of any JSON-serializable input description."""
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def mask_list(mask) -> list[int]:
    return [int(v) for v in np.flatnonzero(mask)]


def make_report(command: str, inputs, results, checks,
                timing_ms=None) -> dict:
    """Assemble a report with stable field order.

    ``checks`` is a list of (name, passed) pairs; ``timing_ms`` stays
    None unless explicitly requested, keeping reports byte-stable.
    """
    return {
        "command": command,
        "inputs": {"digest": digest(inputs), "detail": inputs},
        "results": results,
        "checks": [{"name": name, "pass": bool(ok)} for name, ok in checks],
        "timing_ms": timing_ms,
    }


def report_passed(report: dict) -> bool:
    return all(c["pass"] for c in report["checks"])


def _abbreviate(val):
    if isinstance(val, list) and len(val) > 8:
        return f"[{', '.join(repr(v) for v in val[:3])}, ... ({len(val)} total)]"
    return val


def render_report(report: dict, fmt: str = "text") -> str:
    if fmt == "structured":
        return json.dumps(report, indent=2) + "\n"
    lines = [f"command: {report['command']}",
             f"inputs:  {report['inputs']['digest']}"]
    for key, val in report["results"].items():
        lines.append(f"{key}: {_abbreviate(val)}")
    for chk in report["checks"]:
        lines.append(f"[{'pass' if chk['pass'] else 'FAIL'}] {chk['name']}")
    if report.get("timing_ms") is not None:
        lines.append(f"timing_ms: {report['timing_ms']:.1f}")
    return "\n".join(lines) + "\n"


def dot_graph(graph: MedianGraph, highlights=None, title="medkit") -> str:
    """Graphviz DOT text; ``highlights`` maps color -> vertex mask."""
    lines = [f'graph "{title}" {{', "  node [shape=circle];"]
    colors = {}
    if highlights:
        for color, mask in highlights.items():
            for v in np.flatnonzero(mask):
                colors.setdefault(int(v), []).append(color)
    for v in range(graph.n):
        if v in colors:
            lines.append(
                f'  {v} [style=filled, fillcolor="{colors[v][0]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in graph.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"

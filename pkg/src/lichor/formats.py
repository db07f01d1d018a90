"""Text formats for instances and reports.

An instance is one JSON document:

    {"vertices": 4,
     "edges": [[0, 1], [1, 2]],
     "lists": [[1, 2], [2, 3]]}

with lists positionally aligned to edges and colors non-negative
integers.  Duplicate colors inside one list are accepted and dropped.
A report is {"colors": [..], "trace": [..], "conformant": bool} with
colors positional by edge id.  Emission is canonical (sorted lists,
fixed key order, two-space indent), so equal values produce equal bytes.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import InputError, ParseError
from .multigraph import Multigraph
from .solver import BlockTraceEntry, Instance, SolveReport
from .transversal import ColorLists


def _load(text: str | bytes) -> Any:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"not valid JSON: {err.msg} at line {err.lineno} "
                         f"column {err.colno}") from None


def parse_instance(text: str | bytes) -> Instance:
    doc = _load(text)
    if not isinstance(doc, dict):
        raise ParseError("instance document must be a JSON object")
    for key in ("vertices", "edges", "lists"):
        if key not in doc:
            raise ParseError(f"missing field '{key}'")
    n = doc["vertices"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError("field 'vertices' must be a non-negative integer")
    raw_edges = doc["edges"]
    if not isinstance(raw_edges, list):
        raise ParseError("field 'edges' must be a list of [u, v] pairs")
    edges = []
    for i, pair in enumerate(raw_edges):
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)):
            raise ParseError(f"edges[{i}] must be a pair of integers")
        u, v = pair
        if u == v:
            raise ParseError(f"edges[{i}] is a loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edges[{i}]=[{u}, {v}] references a vertex "
                             f"outside 0..{n - 1}")
        edges.append((u, v))
    raw_lists = doc["lists"]
    if not isinstance(raw_lists, list) or len(raw_lists) != len(edges):
        raise ParseError(f"field 'lists' must hold exactly {len(edges)} lists, "
                         f"one per edge")
    lists = {}
    for i, colors in enumerate(raw_lists):
        if not isinstance(colors, list):
            raise ParseError(f"lists[{i}] must be a list of colors")
        for c in colors:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise ParseError(f"lists[{i}] holds a non-integer or negative color")
        lists[i] = frozenset(colors)
    try:
        return Instance(Multigraph(n, edges), ColorLists(lists))
    except InputError as err:
        raise ParseError(str(err)) from None


def emit_instance(inst: Instance) -> str:
    edges = json.dumps([[u, v] for u, v in inst.graph.edges])
    lists = json.dumps([sorted(inst.lists.of(e)) for e in inst.graph.edge_ids])
    return (
        "{\n"
        f'  "vertices": {inst.graph.vertex_count},\n'
        f'  "edges": {edges},\n'
        f'  "lists": {lists}\n'
        "}\n"
    )


def emit_report(report: SolveReport) -> str:
    colors = json.dumps([report.coloring[e] for e in range(report.edge_count)])
    entries = [
        json.dumps({"block": t.block, "class": t.kind, "entry": t.entry_vertex,
                    "forbidden": t.forbidden, "depth": t.depth})
        for t in report.trace
    ]
    if entries:
        trace = "[\n    " + ",\n    ".join(entries) + "\n  ]"
    else:
        trace = "[]"
    out = (
        "{\n"
        f'  "colors": {colors},\n'
        f'  "trace": {trace},\n'
        f'  "conformant": {json.dumps(report.conformant)}'
    )
    if report.diagnostics:
        out += f',\n  "diagnostics": {json.dumps(list(report.diagnostics))}'
    return out + "\n}\n"


def parse_report(text: str | bytes) -> SolveReport:
    doc = _load(text)
    if not isinstance(doc, dict):
        raise ParseError("report document must be a JSON object")
    if "colors" not in doc or not isinstance(doc["colors"], list):
        raise ParseError("missing or invalid field 'colors'")
    colors = doc["colors"]
    for i, c in enumerate(colors):
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise ParseError(f"colors[{i}] is not a non-negative integer")
    trace = []
    for i, t in enumerate(doc.get("trace", [])):
        if not isinstance(t, dict):
            raise ParseError(f"trace[{i}] must be an object")
        trace.append(BlockTraceEntry(
            block=t.get("block", i), kind=str(t.get("class", "")),
            entry_vertex=t.get("entry"), forbidden=int(t.get("forbidden", 0)),
            depth=int(t.get("depth", 0))))
    return SolveReport(
        coloring={e: c for e, c in enumerate(colors)},
        trace=tuple(trace),
        conformant=bool(doc.get("conformant", True)),
        edge_count=len(colors),
        diagnostics=tuple(str(d) for d in doc.get("diagnostics", [])),
    )

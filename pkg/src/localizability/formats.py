"""Reading and writing networks, reports and DOT drawings.

Edge-list text::

    # comments run to end of line
    nodes: 6          (optional; otherwise 1 + largest id seen)
    anchors: 0 1 2
    0 3
    1 3

JSON::

    {"node_count": 6, "anchors": [0, 1, 2], "edges": [[0, 3], [1, 3]],
     "positions": [[x, y], ...]}          (positions optional)

Writers emit edges sorted with ``u < v``, so equal networks serialize to
identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .network import GeneratedGraph, Network, NetworkError, build_network

__all__ = [
    "ParseError",
    "parse_edge_list",
    "format_edge_list",
    "parse_network_json",
    "format_network_json",
    "load_network",
    "save_network",
    "format_report_json",
    "graph_to_dot",
]

PathLike = Union[str, Path]


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_edge_list(text: str) -> Network:
    anchors: list[int] = []
    node_count = None
    edges = []
    seen_max = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if sep:
            key = key.strip().lower()
            if key == "anchors":
                ids = _ints(rest.split(), lineno)
                anchors.extend(ids)
                seen_max = max([seen_max, *ids])
            elif key == "nodes":
                vals = _ints(rest.split(), lineno)
                if len(vals) != 1:
                    raise ParseError("'nodes:' takes exactly one count", lineno)
                node_count = vals[0]
            else:
                raise ParseError(f"unknown header {key!r}", lineno)
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = _ints(tokens, lineno)
        if u < 0 or v < 0:
            raise ParseError(f"negative node id in {line!r}", lineno)
        edges.append((u, v))
        seen_max = max(seen_max, u, v)
    if node_count is None:
        node_count = seen_max + 1
    try:
        return build_network(edges, anchors, node_count)
    except NetworkError as exc:
        raise ParseError(str(exc)) from None


def format_edge_list(net: Network) -> str:
    lines = [
        f"nodes: {net.node_count}",
        "anchors: " + " ".join(str(a) for a in sorted(net.anchors)),
    ]
    lines += [f"{u} {v}" for u, v in net.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_network_json(text: str) -> Network:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    missing = {"node_count", "anchors", "edges"} - doc.keys()
    if missing:
        raise ParseError(f"missing keys: {', '.join(sorted(missing))}")
    try:
        edges = [tuple(e) for e in doc["edges"]]
        if any(len(e) != 2 for e in edges):
            raise ParseError("every edge must be a [u, v] pair")
        return build_network(edges, doc["anchors"], doc["node_count"], doc.get("positions"))
    except (NetworkError, TypeError) as exc:
        raise ParseError(str(exc)) from None


def format_network_json(net: Network) -> str:
    doc = {
        "node_count": net.node_count,
        "anchors": sorted(net.anchors),
        "edges": [list(e) for e in net.sorted_edges()],
    }
    if net.positions is not None:
        doc["positions"] = net.positions.tolist()
    return json.dumps(doc, indent=1) + "\n"


def _is_json(path: Path, text: str) -> bool:
    return path.suffix.lower() == ".json" or text.lstrip().startswith("{")


def load_network(path: PathLike) -> Network:
    path = Path(path)
    text = path.read_text()
    return parse_network_json(text) if _is_json(path, text) else parse_edge_list(text)


def save_network(net: Network, path: PathLike) -> None:
    path = Path(path)
    if path.suffix.lower() == ".json":
        path.write_text(format_network_json(net))
    else:
        path.write_text(format_edge_list(net))


def format_report_json(report) -> str:
    return json.dumps(report.to_dict(), indent=1) + "\n"


def graph_to_dot(graph: Network | GeneratedGraph, name: str = "G", positions=None) -> str:
    """Undirected DOT drawing; anchors are boxes, agents ellipses.

    Two-dimensional ``positions`` become pinned ``pos`` attributes.
    """
    if positions is None:
        positions = getattr(graph, "positions", None)
    lines = [f"graph {name} {{"]
    for v in range(graph.node_count):
        attrs = ["shape=box" if v in graph.anchors else "shape=ellipse"]
        if positions is not None and len(positions[v]) == 2:
            x, y = positions[v]
            attrs.append(f'pos="{x:.6g},{y:.6g}!"')
        lines.append(f"  v{v} [{', '.join(attrs)}];")
    for u, v in sorted(graph.edges):
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"

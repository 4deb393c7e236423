"""Text formats: edge lists, JSON graphs and comma-separated index patterns."""

from __future__ import annotations

import json
import os
import re

from .errors import GraphFormatError, PatternError
from .graph import Graph, make_family


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by m lines ``"u v"``; blank lines and ``#`` comments are skipped."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphFormatError("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
    except ValueError:
        raise GraphFormatError(f"bad header line {' '.join(rows[0])!r}") from None
    if len(header) != 2:
        raise GraphFormatError("header must be 'n m'")
    n, m = header
    body = rows[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for row in body:
        if len(row) != 2:
            raise GraphFormatError(f"edge line {' '.join(row)!r} must hold two vertices")
        try:
            edges.append((int(row[0]), int(row[1])))
        except ValueError:
            raise GraphFormatError(f"non-integer edge line {' '.join(row)!r}") from None
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.order} {g.size}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.order, "edges": [[u, v] for u, v in g.edges]}


def graph_from_dict(data) -> Graph:
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphFormatError("JSON graph must be an object with 'n' and 'edges'")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphFormatError("'n' must be an integer")
    edges = data["edges"]
    if not isinstance(edges, list):
        raise GraphFormatError("'edges' must be an array")
    pairs = []
    for e in edges:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise GraphFormatError(f"edge {e!r} must be a 2-element integer array")
        pairs.append(tuple(e))
    return Graph(n, pairs)


def parse_json_graph(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from None
    return graph_from_dict(data)


def format_json_graph(g: Graph) -> str:
    return json.dumps(graph_to_dict(g)) + "\n"


def parse_graph_text(text: str) -> Graph:
    if text.lstrip().startswith("{"):
        return parse_json_graph(text)
    return parse_edge_list(text)


_FAMILY_SPEC = re.compile(r"^([a-z_\-]+):(\d+(?:,\d+)*)$")


def load_graph(source: str) -> Graph:
    """Read a graph from a file path, or build one from a ``family:params`` spec like ``star:3``."""
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            return parse_graph_text(fh.read())
    match = _FAMILY_SPEC.match(source)
    if match:
        return make_family(match.group(1), *(int(x) for x in match.group(2).split(",")))
    raise GraphFormatError(f"no such graph file or family spec: {source!r}")


def parse_pattern(text: str, n=None):
    """Parse ``"2,1,3,4"`` into an :class:`~sproutlab.sprout.IndexPattern`."""
    from .sprout import IndexPattern

    try:
        values = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise PatternError(f"pattern {text!r} must be comma-separated integers") from None
    p = IndexPattern(values)
    if n is not None and len(p) != n:
        raise PatternError(f"pattern has length {len(p)}, graph has {n} vertices")
    return p

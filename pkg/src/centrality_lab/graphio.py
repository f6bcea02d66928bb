"""Reading and writing graphs.

Edge-list text::

    # comment lines and trailing comments are ignored
    5
    2 0
    2 1

The first non-comment line is the node count, every further line one
whitespace-separated 0-based edge. JSON is ``{"n": 5, "edges": [[0, 2], ...]}``.
"""

import json
from pathlib import Path

from .errors import CentralityLabError, ParseError
from .graph import Graph


def parse_edge_list(text):
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise ParseError(f"expected the node count, got {line!r}", lineno)
            n = _parse_int(fields[0], lineno)
            if n < 0:
                raise ParseError("node count must be non-negative", lineno)
            continue
        if len(fields) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = (_parse_int(f, lineno) for f in fields)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at node {u}", lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("empty graph description: missing node count")
    return Graph(n, edges)


def _parse_int(token, lineno):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"not an integer: {token!r}", lineno) from None


def graph_to_dict(g):
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_dict(obj):
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ParseError("JSON graph must be an object with 'n' and 'edges'")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParseError("'n' must be an integer")
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise ParseError("'edges' must be an array")
    pairs = []
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise ParseError(f"edge #{i} is not a pair of integers: {e!r}")
        pairs.append(tuple(e))
    try:
        return Graph(n, pairs)
    except CentralityLabError as exc:
        raise ParseError(str(exc)) from None


def parse_graph(text, fmt=None):
    """Parse ``text`` as edge-list (``fmt="edges"``) or JSON (``fmt="json"``).

    Without ``fmt`` the format is sniffed: a leading ``{`` means JSON.
    """
    if fmt is None:
        fmt = "json" if text.lstrip().startswith("{") else "edges"
    if fmt == "json":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
        return graph_from_dict(obj)
    if fmt == "edges":
        return parse_edge_list(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def serialize_graph(g, fmt="edges"):
    if fmt == "json":
        return json.dumps(graph_to_dict(g), separators=(", ", ": ")) + "\n"
    if fmt == "edges":
        return "".join([f"{g.n}\n"] + [f"{u} {v}\n" for u, v in g.edges])
    raise ValueError(f"unknown graph format {fmt!r}")


def read_graph(path):
    path = Path(path)
    fmt = "json" if path.suffix.lower() == ".json" else None
    return parse_graph(path.read_text(), fmt)


def write_graph(g, path):
    path = Path(path)
    fmt = "json" if path.suffix.lower() == ".json" else "edges"
    path.write_text(serialize_graph(g, fmt))

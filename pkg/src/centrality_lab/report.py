"""Plain-text, markdown and JSON rendering of every result type.

Output is deterministic: same input, same bytes. Exact values print as
reduced fractions unless ``decimal`` asks for fixed-point digits.
"""

import json

from .axioms import AxiomVerdict, Axiom, Witness, format_value
from .fixtures import FIXTURES
from .graphio import graph_to_dict
from .measures import CentralityVector
from .search import SatisfiabilityMatrix, SearchOutcome

FORMATS = ("plain", "markdown", "json")
CHECK = "✓"
CROSS = "✗"


def _dumps(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _table(header, rows):
    widths = [max(len(str(r[i])) for r in [header, *rows]) for i in range(len(header))]
    line = lambda r: "  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip()  # noqa: E731
    return "\n".join([line(header), line(["-" * w for w in widths]), *map(line, rows)]) + "\n"


def _md_table(header, rows):
    out = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    out += ["| " + " | ".join(str(c) for c in r) + " |" for r in rows]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# centralities


def render_centralities(g, vectors, fmt="plain", decimal=None, labels=None):
    """One row per node, one column per measure."""
    if fmt == "json":
        return _dumps({"graph": graph_to_dict(g), "measures": [v.to_json() for v in vectors]})
    names = [v.measure_name for v in vectors]
    header = ["node", *names]
    rows = []
    for u in range(g.n):
        name = labels[u] if labels else str(u)
        rows.append([name, *(format_value(v[u], decimal) for v in vectors)])
    if fmt == "markdown":
        return _md_table(header, rows)
    return _table(header, rows)


# ---------------------------------------------------------------------------
# verdicts and witnesses


def witness_lines(w, decimal=None, indent="  "):
    lines = [f"{indent}graph: n={w.graph.n} edges={[list(e) for e in w.graph.edges]}"]
    if w.added_edge is not None:
        lines.append(f"{indent}added edge: {list(w.added_edge)}")
    if w.permutation is not None:
        lines.append(f"{indent}permutation: {list(w.permutation)}")
    if w.layers is not None:
        lines.append(f"{indent}hop layers: {list(w.layers)}")
    lines.append(f"{indent}nodes: " + " ".join(f"{k}={v}" for k, v in w.nodes.items()))
    for k, v in w.values.items():
        lines.append(f"{indent}{k} = {format_value(v, decimal)}")
    lines.append(f"{indent}{w.description}")
    return lines


def _verdict_line(v):
    state = v.status.value + (" (vacuous)" if v.vacuous else "")
    return f"{v.measure_name} {v.axiom.label} {v.axiom.title}: {state}"


def render_verdicts(verdicts, fmt="plain", decimal=None):
    verdicts = list(verdicts)
    if fmt == "json":
        return _dumps({"verdicts": [v.to_json() for v in verdicts]})
    out = []
    for v in verdicts:
        if fmt == "markdown":
            out.append(f"- **{v.measure_name} {v.axiom.label}** {v.axiom.title}: {v.status.value}" + (" (vacuous)" if v.vacuous else ""))
            if v.witness is not None:
                out.append("")
                out.append("  ```")
                out.extend(witness_lines(v.witness, decimal, "  "))
                out.append("  ```")
        else:
            out.append(_verdict_line(v))
            if v.witness is not None:
                out.extend(witness_lines(v.witness, decimal))
    return "\n".join(out) + "\n"


def render_search(outcome, fmt="plain", decimal=None):
    if fmt == "json":
        return _dumps(
            {
                "measure": outcome.measure_name,
                "axiom": int(outcome.axiom),
                "status": outcome.status.value,
                "graphs_checked": outcome.graphs_checked,
                "vacuous_count": outcome.vacuous_count,
                "scope": outcome.scope,
                "witness": None if outcome.witness is None else outcome.witness.to_json(),
            }
        )
    head = f"{outcome.measure_name} {outcome.axiom.label} {outcome.axiom.title}: "
    if outcome.witness is None:
        head += f"no counterexample in {_scope_text(outcome.scope)}"
    else:
        head += f"counterexample after {outcome.graphs_checked} graphs"
    lines = [head]
    if outcome.witness is not None:
        if fmt == "markdown":
            lines = [head, "", "```", *witness_lines(outcome.witness, decimal, ""), "```"]
        else:
            lines.extend(witness_lines(outcome.witness, decimal))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# matrix


def _scope_text(scope):
    if scope.get("kind") == "exhaustive":
        dedup = ", one per isomorphism class" if scope.get("dedup_isomorphic") else ""
        return f"all graphs with {scope['n_min']}..{scope['n_max']} nodes{dedup} ({scope['graphs_checked']} checked)"
    if scope.get("kind") == "sampled":
        return (
            f"{scope['count']} random graphs with {scope['n_min']}..{scope['n_max']} nodes "
            f"(seed {scope['seed']}, p={scope['edge_probability']})"
        )
    return str(scope)


def _cell_evidence(c):
    if c.violated:
        source = c.evidence.get("source", "search")
        return f"witness from {source}"
    text = "verified on " + _scope_text(c.evidence)
    if c.vacuous:
        text += "; vacuous on every graph"
    return text


def render_matrix(matrix, fmt="plain", decimal=None):
    if fmt == "json":
        return _dumps(matrix.to_json())
    header = ["Measure", *(ax.label for ax in Axiom)]
    rows = []
    notes = []
    for name in matrix.measures:
        row = [matrix.abbrevs.get(name, name)]
        for c in matrix.row(name):
            mark = CROSS if c.violated else CHECK
            if c.vacuous:
                mark += "°"
            if c.matches_expected is False:
                notes.append(c)
                mark += f"[{len(notes)}]"
            row.append(mark)
        rows.append(row)
    body = _md_table(header, rows) if fmt == "markdown" else _table(header, rows)
    total = len(matrix.cells)
    lines = [body.rstrip("\n"), ""]
    lines.append(f"{matrix.match_count} of {total} cells agree with the expected table.")
    lines.append("° vacuously satisfied: the premise never held on any graph in scope.")
    for i, c in enumerate(notes, start=1):
        lines.append(f"[{i}] {matrix.abbrevs.get(c.measure_name, c.measure_name)} {c.axiom.label}: {c.note}")
    lines.append("")
    lines.append("Evidence:" if fmt == "plain" else "**Evidence**")
    lines.append("")
    for name in matrix.measures:
        for c in matrix.row(name):
            prefix = "- " if fmt == "markdown" else "  "
            lines.append(f"{prefix}{matrix.abbrevs.get(name, name)} {c.axiom.label}: {_cell_evidence(c)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# fixtures


def render_fixture_list(fmt="plain"):
    if fmt == "json":
        return _dumps(
            {
                "fixtures": [
                    {
                        "id": fx.id,
                        "n": fx.graph.n,
                        "edges": fx.graph.num_edges,
                        "added_edge": None if fx.added_edge is None else list(fx.added_edge),
                        "verdicts": [f"{e.measure} {e.axiom.label}" for e in fx.verdicts],
                        "caption": fx.caption,
                    }
                    for fx in FIXTURES.values()
                ]
            }
        )
    header = ["id", "n", "m", "claims", "caption"]
    rows = [
        [fx.id, fx.graph.n, fx.graph.num_edges, ", ".join(f"{e.measure} {e.axiom.label}" for e in fx.verdicts) or "-", fx.caption]
        for fx in FIXTURES.values()
    ]
    return _md_table(header, rows) if fmt == "markdown" else _table(header, rows)


def render_report(result, fmt="plain", decimal=None, graph=None):
    """Dispatch on the result type."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(result, SatisfiabilityMatrix):
        return render_matrix(result, fmt, decimal)
    if isinstance(result, SearchOutcome):
        return render_search(result, fmt, decimal)
    if isinstance(result, AxiomVerdict):
        return render_verdicts([result], fmt, decimal)
    if isinstance(result, CentralityVector):
        if graph is None:
            raise ValueError("rendering a centrality vector needs its graph")
        return render_centralities(graph, [result], fmt, decimal)
    if isinstance(result, (list, tuple)) and result and all(isinstance(r, AxiomVerdict) for r in result):
        return render_verdicts(result, fmt, decimal)
    if isinstance(result, (list, tuple)) and result and all(isinstance(r, CentralityVector) for r in result):
        if graph is None:
            raise ValueError("rendering centrality vectors needs their graph")
        return render_centralities(graph, result, fmt, decimal)
    if isinstance(result, Witness):
        return "\n".join(witness_lines(result, decimal, "")) + "\n"
    raise TypeError(f"cannot render {type(result).__name__}")

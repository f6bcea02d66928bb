"""Hand-built counterexample graphs with the values they are known to produce.

Each fixture is a small graph (plus, for the edge-addition axioms, the edge
to add) with human-readable node labels, the axiom verdicts it demonstrates
and the exact centrality values worked out by hand for it. They serve as
regression anchors independent of the counterexample miner.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt
from pathlib import Path
from typing import Optional

from .axioms import Axiom, check_axiom, json_value
from .errors import UnknownFixture
from .graph import Graph, add_edge
from .graphio import serialize_graph
from .measures import ddc_profile, eigenvector_centrality_result, get_measure

F = Fraction

# stages of an expected value
BEFORE = "before"  # measured on the fixture graph
AFTER = "after"  # measured after adding the fixture edge
DELTA = "delta"  # after - before
PROFILE = "profile"  # hop-wise degree sums (decaying degree)
LAMBDA = "lambda"  # largest adjacency eigenvalue

QUOTED_EC_TOL = 1e-3  # eigenvector values quoted to four decimals


@dataclass(frozen=True)
class ExpectedValue:
    measure: str
    label: str
    value: object
    stage: str = BEFORE
    tol: Optional[float] = None


@dataclass(frozen=True)
class ExpectedVerdict:
    measure: str
    axiom: Axiom
    violated: bool


@dataclass(frozen=True)
class Fixture:
    id: str
    graph: Graph
    label_map: dict
    caption: str
    added_edge: Optional[tuple] = None
    verdicts: tuple = ()
    values: tuple = ()

    def __post_init__(self):
        if len(set(self.label_map.values())) != len(self.label_map):
            raise ValueError(f"fixture {self.id}: label map is not injective")

    def node(self, label):
        return self.label_map[label]

    def label(self, node):
        for k, v in self.label_map.items():
            if v == node:
                return k
        return str(node)

    @property
    def graph_after(self):
        if self.added_edge is None:
            return None
        return add_edge(self.graph, *self.added_edge)


def _fixture(fid, labels, edges, caption, added=None, verdicts=(), values=()):
    index = {name: i for i, name in enumerate(labels)}
    g = Graph(len(labels), [(index[a], index[b]) for a, b in edges])
    edge = None if added is None else (index[added[0]], index[added[1]])
    return Fixture(
        fid,
        g,
        index,
        caption,
        edge,
        tuple(ExpectedVerdict(m, Axiom(a), v) for m, a, v in verdicts),
        tuple(values),
    )


def _ev(measure, label, value, stage=BEFORE, tol=None):
    return ExpectedValue(measure, label, value, stage, tol)


def _catalog():
    fx = []
    r2 = sqrt(2)

    star = ["1", "2", "3", "4", "5"]
    fx.append(
        _fixture(
            "table1-star",
            star,
            [("3", "1"), ("3", "2"), ("3", "4"), ("3", "5")],
            "five-node star; node 3 is the centre",
            values=[
                *(_ev("degree", x, 4 if x == "3" else 1) for x in star),
                *(_ev("closeness", x, F(4) if x == "3" else F(5, 2)) for x in star),
                *(_ev("betweenness", x, 6 if x == "3" else 0) for x in star),
                *(_ev("eigenvector", x, 1 / r2 if x == "3" else 1 / (2 * r2), tol=1e-6) for x in star),
                _ev("eigenvector", "*", 2.0, LAMBDA, tol=1e-9),
                _ev("decaying_degree", "3", [4, 4], PROFILE),
            ],
        )
    )

    fx.append(
        _fixture(
            "dc-structural",
            ["u", "u1", "u2", "u11", "u21", "v", "v1", "v2"],
            [("u", "u1"), ("u", "u2"), ("u1", "u11"), ("u2", "u21"), ("v", "v1"), ("v", "v2")],
            "degree centrality breaks structural consistency: u and v tie although u's neighbours have higher degree",
            verdicts=[("degree", 6, True)],
            values=[
                _ev("degree", "u", 2),
                _ev("degree", "v", 2),
                _ev("degree", "u1", 2),
                _ev("degree", "u2", 2),
                _ev("degree", "v1", 1),
                _ev("degree", "v2", 1),
            ],
        )
    )

    path7 = ["z2", "y", "u", "z1", "w", "x", "v"]
    fx.append(
        _fixture(
            "cc-diminishing",
            path7,
            [("u", "z1"), ("z1", "w"), ("w", "x"), ("x", "v"), ("u", "y"), ("y", "z2")],
            "seven-node path; closing edge {u, v} moves z2 (two hops away) more than z1 (one hop away)",
            added=("u", "v"),
            verdicts=[("closeness", 5, True), ("betweenness", 5, True)],
            values=[
                _ev("closeness", "z1", F(1, 6), DELTA),
                _ev("closeness", "z2", F(1, 20) + F(1, 6), DELTA),
                _ev("betweenness", "w", 8),
                _ev("betweenness", "w", 1, AFTER),
                _ev("betweenness", "y", 5),
                _ev("betweenness", "y", 5, AFTER),
            ],
        )
    )

    fx.append(
        _fixture(
            "cc-structural",
            ["u", "u1", "u2", "v", "v1", "v2"],
            [("u", "u1"), ("u", "u2"), ("u1", "u2"), ("v", "v1"), ("v", "v2")],
            "triangle next to a two-leaf star: closeness of u and v ties although u's neighbours are closer",
            verdicts=[("closeness", 6, True)],
            values=[
                *(_ev("closeness", x, 2) for x in ("u", "u1", "u2", "v")),
                _ev("closeness", "v1", F(3, 2)),
                _ev("closeness", "v2", F(3, 2)),
            ],
        )
    )

    fx.append(
        _fixture(
            "bc-monotonicity",
            ["u", "v", "w", "x"],
            [("u", "w"), ("v", "w"), ("w", "x")],
            "three-leaf star; joining leaves u and v leaves their betweenness at 0",
            added=("u", "v"),
            verdicts=[("betweenness", 4, True)],
            values=[
                _ev("betweenness", "u", 0),
                _ev("betweenness", "u", 0, AFTER),
                _ev("betweenness", "v", 0),
                _ev("betweenness", "v", 0, AFTER),
            ],
        )
    )

    fx.append(
        _fixture(
            "bc-structural",
            ["u", "u1", "u2", "u11", "u21", "v", "v1", "v2"],
            [("u", "u1"), ("u", "u2"), ("u1", "u11"), ("u2", "u21"), ("u1", "u2"), ("v", "v1"), ("v", "v2")],
            "betweenness breaks structural consistency: u's neighbours score 3 against 0 yet u scores below v",
            verdicts=[("betweenness", 6, True)],
            values=[
                _ev("betweenness", "u", 0),
                _ev("betweenness", "u1", 3),
                _ev("betweenness", "u2", 3),
                _ev("betweenness", "u11", 0),
                _ev("betweenness", "u21", 0),
                _ev("betweenness", "v", 1),
                _ev("betweenness", "v1", 0),
                _ev("betweenness", "v2", 0),
            ],
        )
    )

    xs = [f"x{i}" for i in range(1, 8)]
    fx.append(
        _fixture(
            "wdc-diminishing",
            ["u", "z1", "v", "m1", "m2", "z2", "x", *xs],
            [("u", "z1"), ("z1", "m2"), ("m2", "x"), ("v", "x"), ("u", "m1"), ("m1", "z2")]
            + [("x", leaf) for leaf in xs],
            "path through a hub with seven leaves; edge {u, v} moves z2 more than z1 in weighted degree",
            added=("u", "v"),
            verdicts=[("weighted_degree", 5, True)],
            values=[
                _ev("weighted_degree", "z1", F(5, 3), DELTA),
                _ev("weighted_degree", "z2", 1 + F(41, 60), DELTA),
            ],
        )
    )

    fx.append(
        _fixture(
            "wdc-structural",
            ["u", "u1", "u2", "u3", "u4", "u5", "v", "v1", "v2", "v3", "v4", "v5", "v6"],
            [
                ("u", "u1"),
                ("u", "u2"),
                ("u1", "u3"),
                ("u2", "u3"),
                ("u3", "u4"),
                ("u3", "u5"),
                ("v", "v1"),
                ("v", "v2"),
                ("v1", "v3"),
                ("v1", "v4"),
                ("v2", "v5"),
                ("v2", "v6"),
            ],
            "weighted degree breaks structural consistency: u's neighbours dominate v's yet v scores higher",
            verdicts=[("weighted_degree", 6, True)],
            values=[
                _ev("weighted_degree", "u1", 8),
                _ev("weighted_degree", "u2", 8),
                _ev("weighted_degree", "v1", F(37, 6)),
                _ev("weighted_degree", "v2", F(37, 6)),
                _ev("weighted_degree", "u", F(20, 3)),
                _ev("weighted_degree", "v", 8),
            ],
        )
    )

    fx.append(
        _fixture(
            "ec-locality",
            ["u1", "u2", "u5", "u3", "u4"],
            [("u1", "u2"), ("u1", "u5"), ("u3", "u4")],
            "three-node path beside a single edge: the edge scores 0 overall but 1/sqrt(2) on its own",
            verdicts=[("eigenvector", 2, True)],
            values=[
                _ev("eigenvector", "u1", 0.7071, tol=QUOTED_EC_TOL),
                _ev("eigenvector", "u2", 0.5, tol=QUOTED_EC_TOL),
                _ev("eigenvector", "u5", 0.5, tol=QUOTED_EC_TOL),
                _ev("eigenvector", "u3", 0.0, tol=QUOTED_EC_TOL),
                _ev("eigenvector", "u4", 0.0, tol=QUOTED_EC_TOL),
                _ev("eigenvector", "*", 1.4142, LAMBDA, tol=QUOTED_EC_TOL),
            ],
        )
    )

    fx.append(
        _fixture(
            "ec-monotonicity",
            ["u", "v", "w"],
            [("u", "v")],
            "single edge plus an isolated node; attaching the isolated node to u leaves u's score unchanged",
            added=("u", "w"),
            verdicts=[("eigenvector", 4, True)],
            values=[
                _ev("eigenvector", "u", 0.7071, tol=QUOTED_EC_TOL),
                _ev("eigenvector", "v", 0.7071, tol=QUOTED_EC_TOL),
                _ev("eigenvector", "w", 0.0, tol=QUOTED_EC_TOL),
                _ev("eigenvector", "u", 0.7071, AFTER, tol=QUOTED_EC_TOL),
                _ev("eigenvector", "v", 0.5, AFTER, tol=QUOTED_EC_TOL),
                _ev("eigenvector", "w", 0.5, AFTER, tol=QUOTED_EC_TOL),
            ],
        )
    )

    ec5 = ["u1", "u2", "u3", "u4", "u5"]
    before = [0.4647, 0.5573, 0.2610, 0.4647, 0.4352]
    after = [0.4119, 0.5825, 0.2169, 0.4119, 0.5237]
    fx.append(
        _fixture(
            "ec-diminishing",
            ec5,
            [("u1", "u2"), ("u1", "u5"), ("u2", "u3"), ("u2", "u4"), ("u4", "u5")],
            "five-node graph; edge {u2, u5} moves u1 (one hop) more than u2 (an endpoint)",
            added=("u2", "u5"),
            verdicts=[("eigenvector", 5, True)],
            values=[
                *(_ev("eigenvector", x, b, tol=QUOTED_EC_TOL) for x, b in zip(ec5, before)),
                *(_ev("eigenvector", x, a, AFTER, tol=QUOTED_EC_TOL) for x, a in zip(ec5, after)),
                _ev("eigenvector", "u2", 0.0252, DELTA, tol=QUOTED_EC_TOL),
                _ev("eigenvector", "u1", -0.0528, DELTA, tol=QUOTED_EC_TOL),
            ],
        )
    )

    fx.append(
        _fixture(
            "ddc-structural",
            ["u", "u1", "u2", "u11", "u22", "v", "v1", "v2", "v11", "v12", "v21", "v22"],
            [
                ("u", "u1"),
                ("u", "u2"),
                ("u1", "u11"),
                ("u2", "u22"),
                ("u1", "u2"),
                ("u11", "u22"),
                ("v", "v1"),
                ("v", "v2"),
                ("v1", "v11"),
                ("v1", "v12"),
                ("v2", "v21"),
                ("v2", "v22"),
            ],
            "decaying degree ties u and v (equal hop-wise degree sums) although u's neighbours score higher",
            verdicts=[("decaying_degree", 6, True)],
            values=[
                _ev("decaying_degree", "u", [2, 6, 4], PROFILE),
                _ev("decaying_degree", "v", [2, 6, 4], PROFILE),
                _ev("decaying_degree", "u1", [3, 7], PROFILE),
                _ev("decaying_degree", "u2", [3, 7], PROFILE),
                _ev("decaying_degree", "v1", [3, 4], PROFILE),
                _ev("decaying_degree", "v2", [3, 4], PROFILE),
            ],
        )
    )
    return {f.id: f for f in fx}


FIXTURES = _catalog()
FIXTURE_IDS = tuple(FIXTURES)


def paper_fixture(fid):
    try:
        return FIXTURES[fid]
    except KeyError:
        raise UnknownFixture(f"unknown fixture {fid!r}; choose from {', '.join(FIXTURE_IDS)}") from None


def fixtures_for(measure_name, axiom):
    """Fixtures that claim a verdict for this (measure, axiom) cell."""
    axiom = Axiom(axiom)
    return [
        fx for fx in FIXTURES.values() if any(e.measure == measure_name and e.axiom is axiom for e in fx.verdicts)
    ]


@dataclass
class ReplayLine:
    fixture: str
    expected: ExpectedValue
    actual: object
    ok: bool


def _actual(fx, ev, cache):
    if ev.stage == PROFILE:
        sums = list(ddc_profile(fx.graph, fx.node(ev.label)).sums)
        return sums[: len(ev.value)]
    if ev.stage == LAMBDA:
        return eigenvector_centrality_result(fx.graph).lambda_max

    def vec(graph_key):
        if graph_key not in cache:
            g = fx.graph if graph_key == BEFORE else fx.graph_after
            cache[graph_key] = get_measure(ev.measure)(g)
        return cache[graph_key]

    node = fx.node(ev.label)
    if ev.stage == DELTA:
        return vec(AFTER)[node] - vec(BEFORE)[node]
    return vec(ev.stage)[node]


def replay_fixture(fx):
    """Recompute every expected value of a fixture; one :class:`ReplayLine` each."""
    lines = []
    caches = {}
    for ev in fx.values:
        cache = caches.setdefault(ev.measure, {})
        actual = _actual(fx, ev, cache)
        if ev.tol is None:
            ok = actual == ev.value
        else:
            ok = abs(actual - ev.value) <= ev.tol
        lines.append(ReplayLine(fx.id, ev, actual, ok))
    return lines


def check_fixture_verdict(fx, expected, config=None):
    """Run the checker behind one expected verdict, restricted to the fixture edge if any."""
    m = get_measure(expected.measure)
    edges = [fx.added_edge] if fx.added_edge and expected.axiom in (Axiom.EDGE_MONOTONICITY, Axiom.DIMINISHING_IMPACT) else None
    return check_axiom(m, expected.axiom, fx.graph, config, edges=edges)


def fixture_manifest(fx):
    out = {
        "id": fx.id,
        "caption": fx.caption,
        "n": fx.graph.n,
        "edges": [list(e) for e in fx.graph.edges],
        "labels": {str(k): v for k, v in fx.label_map.items()},
        "added_edge": None if fx.added_edge is None else list(fx.added_edge),
        "verdicts": [{"measure": e.measure, "axiom": e.axiom.label, "violated": e.violated} for e in fx.verdicts],
        "values": [
            {"measure": v.measure, "label": v.label, "stage": v.stage, "value": list(v.value) if isinstance(v.value, list) else json_value(v.value), "tol": v.tol}
            for v in fx.values
        ],
    }
    return out


def export_fixtures(directory, ids=None):
    """Write ``<id>.edges`` for each fixture plus ``manifest.json``; returns the written paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    chosen = [paper_fixture(i) for i in (ids or FIXTURE_IDS)]
    paths = []
    for fx in chosen:
        p = directory / f"{fx.id}.edges"
        header = f"# {fx.id}: {fx.caption}\n# labels: " + " ".join(f"{k}={v}" for k, v in fx.label_map.items()) + "\n"
        p.write_text(header + serialize_graph(fx.graph))
        paths.append(p)
    manifest = directory / "manifest.json"
    manifest.write_text(json.dumps({"fixtures": [fixture_manifest(fx) for fx in chosen]}, indent=2) + "\n")
    paths.append(manifest)
    return paths

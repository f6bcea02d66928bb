"""The six centrality axioms as executable predicates.

Each ``check_*`` function takes a :class:`~centrality_lab.measures.MeasureHandle`
and a graph and returns an :class:`AxiomVerdict`. A violated verdict always
carries a :class:`Witness` that :func:`verify_witness` can replay.

Strict inequalities are exact for rational measures. For float measures
(eigenvector centrality) ``a > b`` means ``a - b > NUMERIC_EPS`` and equality
means ``|a - b| <= NUMERIC_EPS``; such verdicts carry ``numeric=True``.
"""

import random
from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Optional

from .errors import InvalidArguments
from .graph import Graph, add_edge, hop_partition_pair, induced_subgraph, connected_components
from .graphio import graph_to_dict
from .isomorphism import NodeBijection, apply_permutation
from .measures import NUMERIC_EPS


class Axiom(IntEnum):
    ISOMORPHIC_INVARIANCE = 1
    LOCALITY = 2
    ISOLATED_MINIMA = 3
    EDGE_MONOTONICITY = 4
    DIMINISHING_IMPACT = 5
    STRUCTURAL_CONSISTENCY = 6

    @property
    def label(self):
        return f"A{int(self)}"

    @property
    def title(self):
        return _TITLES[self]

    @classmethod
    def parse(cls, text):
        """Accepts ``4``, ``"4"``, ``"A4"`` or a name such as ``"edge_monotonicity"``."""
        if isinstance(text, int):
            return cls(text)
        key = str(text).strip().lower().replace("-", "_").replace(" ", "_")
        if key.startswith("a") and key[1:].isdigit():
            key = key[1:]
        if key.isdigit() and 1 <= int(key) <= 6:
            return cls(int(key))
        for ax in cls:
            if key in (ax.name.lower(), _key(ax.title)):
                return ax
        raise InvalidArguments(f"unknown axiom {text!r}; use 1-6")


def _key(s):
    return s.lower().replace(" ", "_")


_TITLES = {
    Axiom.ISOMORPHIC_INVARIANCE: "Isomorphic Invariance",
    Axiom.LOCALITY: "Locality",
    Axiom.ISOLATED_MINIMA: "Isolated Minima",
    Axiom.EDGE_MONOTONICITY: "Edge Monotonicity",
    Axiom.DIMINISHING_IMPACT: "Diminishing Impact",
    Axiom.STRUCTURAL_CONSISTENCY: "Structural Consistency",
}


class Status(str, Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"


def format_value(v, decimal=None):
    """Reduced fraction for exact values, shortest repr for floats."""
    if isinstance(v, (Fraction, int)) and not isinstance(v, bool):
        if decimal is not None:
            return f"{float(v):.{decimal}f}"
        return str(Fraction(v))
    if decimal is not None:
        return f"{float(v):.{decimal}f}"
    return repr(float(v))


def json_value(v):
    if isinstance(v, (Fraction, int)) and not isinstance(v, bool):
        return str(Fraction(v))
    return float(v)


@dataclass(frozen=True)
class Witness:
    """Concrete evidence that a measure violates an axiom.

    ``nodes`` maps role names (``u``, ``v``, ``z_h`` ...) to nodes of
    ``graph``; ``values`` maps labels such as ``"F_u(G')"`` to the centrality
    values that falsify the axiom's inequality.
    """

    axiom: Axiom
    measure_name: str
    graph: Graph
    nodes: dict
    values: dict
    description: str
    added_edge: Optional[tuple] = None
    permutation: Optional[tuple] = None
    layers: Optional[tuple] = None

    def to_json(self):
        out = {
            "axiom": int(self.axiom),
            "measure": self.measure_name,
            "graph": graph_to_dict(self.graph),
            "nodes": {k: int(v) for k, v in self.nodes.items()},
            "values": {k: json_value(v) for k, v in self.values.items()},
            "description": self.description,
        }
        if self.added_edge is not None:
            out["added_edge"] = list(self.added_edge)
        if self.permutation is not None:
            out["permutation"] = list(self.permutation)
        if self.layers is not None:
            out["layers"] = list(self.layers)
        return out


@dataclass(frozen=True)
class AxiomVerdict:
    axiom: Axiom
    measure_name: str
    status: Status
    vacuous: bool = False
    numeric: bool = False
    witness: Optional[Witness] = None

    @property
    def violated(self):
        return self.status is Status.VIOLATED

    @property
    def satisfied(self):
        return self.status is Status.SATISFIED

    def to_json(self):
        return {
            "axiom": int(self.axiom),
            "axiom_title": self.axiom.title,
            "measure": self.measure_name,
            "status": self.status.value,
            "vacuous": self.vacuous,
            "numeric": self.numeric,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


@dataclass(frozen=True)
class CheckConfig:
    """Knobs for the checkers.

    ``a5_reading`` is ``"universal"`` (every node pair across two layers must
    show a strictly larger change nearer the new edge) or ``"existential"``
    (some such pair per layer pair suffices).
    """

    a1_trials: int = 20
    a1_exhaustive: bool = False
    a1_max_exhaustive_n: int = 7
    seed: int = 0
    a5_reading: str = "universal"

    def __post_init__(self):
        if self.a1_trials < 1:
            raise InvalidArguments("a1_trials must be at least 1")
        if self.a5_reading not in ("universal", "existential"):
            raise InvalidArguments(f"a5_reading must be 'universal' or 'existential', got {self.a5_reading!r}")


def _gt(a, b, numeric):
    return a - b > NUMERIC_EPS if numeric else a > b


def _eq(a, b, numeric):
    return abs(a - b) <= NUMERIC_EPS if numeric else a == b


def _verdict(axiom, m, witness=None, vacuous=False):
    status = Status.VIOLATED if witness is not None else Status.SATISFIED
    return AxiomVerdict(axiom, m.name, status, vacuous and witness is None, not m.exact, witness)


# ---------------------------------------------------------------------------
# Axiom 1


def _a1_permutations(n, trials, exhaustive, max_exhaustive_n, seed):
    if exhaustive and n <= max_exhaustive_n:
        yield from permutations(range(n))
        return
    yield tuple(range(n))
    yield tuple(reversed(range(n)))
    rng = random.Random(seed)
    for _ in range(trials):
        p = list(range(n))
        rng.shuffle(p)
        yield tuple(p)


def check_isomorphic_invariance(m, g, trials=20, exhaustive=False, seed=0, max_exhaustive_n=7):
    """Relabel ``g`` and require every node to keep its value under the relabeling.

    Tries the identity, the reversal and ``trials`` seeded random
    permutations, or all ``n!`` permutations when ``exhaustive`` and
    ``n <= max_exhaustive_n``.
    """
    numeric = not m.exact
    base = m(g)
    for pi in _a1_permutations(g.n, trials, exhaustive, max_exhaustive_n, seed):
        h = apply_permutation(g, NodeBijection(pi))
        fh = m(h)
        for v in range(g.n):
            if not _eq(fh[pi[v]], base[v], numeric):
                w = Witness(
                    Axiom.ISOMORPHIC_INVARIANCE,
                    m.name,
                    g,
                    {"v": v, "pi(v)": pi[v]},
                    {"F_v(G)": base[v], "F_pi(v)(H)": fh[pi[v]]},
                    f"relabeling by {list(pi)} moves node {v} to {pi[v]} but changes its value "
                    f"from {format_value(base[v])} to {format_value(fh[pi[v]])}",
                    permutation=tuple(pi),
                )
                return _verdict(Axiom.ISOMORPHIC_INVARIANCE, m, w)
    return _verdict(Axiom.ISOMORPHIC_INVARIANCE, m)


# ---------------------------------------------------------------------------
# Axiom 2


def check_locality(m, g):
    """Every node must score the same in ``g`` and in its own component taken alone."""
    numeric = not m.exact
    base = m(g)
    for block in connected_components(g).blocks:
        sub, mapping = induced_subgraph(g, block)
        fs = m(sub)
        for v in block:
            if not _eq(base[v], fs[mapping[v]], numeric):
                w = Witness(
                    Axiom.LOCALITY,
                    m.name,
                    g,
                    {"v": v},
                    {"F_v(G)": base[v], "F_v(G[K_v])": fs[mapping[v]]},
                    f"node {v} scores {format_value(base[v])} in the whole graph but "
                    f"{format_value(fs[mapping[v]])} in its component {list(block)}",
                )
                return _verdict(Axiom.LOCALITY, m, w)
    return _verdict(Axiom.LOCALITY, m)


# ---------------------------------------------------------------------------
# Axiom 3


def check_isolated_minima(m, g):
    """Every isolated node must score exactly 0; vacuous without isolated nodes."""
    numeric = not m.exact
    isolated = [v for v in range(g.n) if not g.adjacency[v]]
    if not isolated:
        return _verdict(Axiom.ISOLATED_MINIMA, m, vacuous=True)
    f = m(g)
    for v in isolated:
        if not _eq(f[v], 0, numeric):
            w = Witness(
                Axiom.ISOLATED_MINIMA,
                m.name,
                g,
                {"v": v},
                {"F_v(G)": f[v]},
                f"isolated node {v} scores {format_value(f[v])} instead of 0",
            )
            return _verdict(Axiom.ISOLATED_MINIMA, m, w)
    return _verdict(Axiom.ISOLATED_MINIMA, m)


# ---------------------------------------------------------------------------
# Axiom 4


def _candidate_edges(g, edges):
    if edges is None:
        return g.non_edges()
    out = []
    for u, v in edges:
        if g.has_edge(u, v):
            raise InvalidArguments(f"({u}, {v}) is already an edge")
        out.append((u, v))
    return out


def check_edge_monotonicity(m, g, edges=None):
    """Adding any non-edge ``{u, v}`` must strictly raise both ``F_u`` and ``F_v``.

    ``edges`` restricts the check to the given non-edges. Vacuous when there
    is nothing to add.
    """
    numeric = not m.exact
    candidates = _candidate_edges(g, edges)
    if not candidates:
        return _verdict(Axiom.EDGE_MONOTONICITY, m, vacuous=True)
    base = m(g)
    for u, v in candidates:
        after = m(add_edge(g, u, v))
        for x, other in ((u, v), (v, u)):
            if not _gt(after[x], base[x], numeric):
                w = Witness(
                    Axiom.EDGE_MONOTONICITY,
                    m.name,
                    g,
                    {"u": x, "v": other},
                    {
                        "F_u(G)": base[x],
                        "F_u(G')": after[x],
                        "F_v(G)": base[other],
                        "F_v(G')": after[other],
                    },
                    f"adding edge ({u}, {v}) takes node {x} from {format_value(base[x])} "
                    f"to {format_value(after[x])}, not a strict increase",
                    added_edge=(u, v),
                )
                return _verdict(Axiom.EDGE_MONOTONICITY, m, w)
    return _verdict(Axiom.EDGE_MONOTONICITY, m)


# ---------------------------------------------------------------------------
# Axiom 5


def _extreme(layer, delta, pick_max):
    best = None
    for z in sorted(layer):
        if best is None or (delta[z] > delta[best] if pick_max else delta[z] < delta[best]):
            best = z
    return best


def check_diminishing_impact(m, g, edges=None, reading="universal"):
    """The change caused by a new edge must shrink strictly with hop distance.

    For each non-edge ``{u, v}`` the nodes are layered by their minimum
    distance to ``u`` or ``v`` in the graph *before* the edge is added
    (layer 0 is ``{u, v}``; unreachable nodes are left out). Under the
    universal reading every node of a nearer layer must change strictly more,
    in absolute value, than every node of any farther layer.
    """
    if reading not in ("universal", "existential"):
        raise InvalidArguments(f"unknown reading {reading!r}")
    numeric = not m.exact
    candidates = _candidate_edges(g, edges)
    triggered = False
    base = None
    for u, v in candidates:
        layers = hop_partition_pair(g, u, v).layers
        if len(layers) < 2:
            continue
        triggered = True
        if base is None:
            base = m(g)
        g2 = add_edge(g, u, v)
        after = m(g2)
        delta = {z: abs(after[z] - base[z]) for layer in layers for z in layer}
        if reading == "universal":
            near = [_extreme(layer, delta, pick_max=False) for layer in layers]
            far = [_extreme(layer, delta, pick_max=True) for layer in layers]
        else:
            near = [_extreme(layer, delta, pick_max=True) for layer in layers]
            far = [_extreme(layer, delta, pick_max=False) for layer in layers]
        for h in range(len(layers)):
            for hb in range(h + 1, len(layers)):
                zh, zb = near[h], far[hb]
                if not _gt(delta[zh], delta[zb], numeric):
                    w = Witness(
                        Axiom.DIMINISHING_IMPACT,
                        m.name,
                        g,
                        {"u": u, "v": v, "z_h": zh, "z_hbar": zb},
                        {
                            "F_z_h(G)": base[zh],
                            "F_z_h(G')": after[zh],
                            "F_z_hbar(G)": base[zb],
                            "F_z_hbar(G')": after[zb],
                        },
                        f"adding edge ({u}, {v}) changes node {zh} (hop {h}) by {format_value(delta[zh])} "
                        f"but node {zb} (hop {hb}) by {format_value(delta[zb])}",
                        added_edge=(u, v),
                        layers=(h, hb),
                    )
                    return _verdict(Axiom.DIMINISHING_IMPACT, m, w)
    return _verdict(Axiom.DIMINISHING_IMPACT, m, vacuous=not triggered)


# ---------------------------------------------------------------------------
# Axiom 6


def dominating_injection_exists(a, b, eps=0.0):
    """Whether ``b`` injects into ``a`` with every image strictly larger.

    Sorting both descending and comparing slot by slot is enough: if any
    dominating injection exists, the sorted matching is one. ``eps > 0``
    turns ``x > y`` into ``x - y > eps``.
    """
    if len(a) < len(b):
        raise InvalidArguments(f"need |a| >= |b|, got {len(a)} < {len(b)}")
    a = sorted(a, reverse=True)
    b = sorted(b, reverse=True)
    if eps:
        return all(x - y > eps for x, y in zip(a, b))
    return all(x > y for x, y in zip(a, b))


def check_structural_consistency(m, g):
    """Neighbourhood domination must imply strictly higher centrality.

    For every ordered pair ``(u, v)`` of distinct nodes with
    ``deg(u) >= deg(v) >= 1``: if the neighbours of ``v`` can be matched
    injectively to neighbours of ``u`` that score strictly more, then
    ``F_u > F_v`` is required. Pairs where ``v`` is isolated are skipped,
    since the empty matching would demand ``F_u > F_v`` for every ``u``.
    """
    numeric = not m.exact
    eps = NUMERIC_EPS if numeric else 0.0
    f = m(g)
    triggered = False
    ranked = [sorted(g.adjacency[x], key=lambda w: (-f[w], w)) for x in range(g.n)]
    for u in range(g.n):
        nu = ranked[u]
        for v in range(g.n):
            nv = ranked[v]
            if u == v or not nv or len(nu) < len(nv):
                continue
            if not dominating_injection_exists([f[w] for w in nu], [f[w] for w in nv], eps):
                continue
            triggered = True
            if _gt(f[u], f[v], numeric):
                continue
            nodes = {"u": u, "v": v}
            values = {"F_u(G)": f[u], "F_v(G)": f[v]}
            for i, (a, b) in enumerate(zip(nu, nv), start=1):
                nodes[f"a{i}"] = a
                nodes[f"h(a{i})"] = b
                values[f"F_a{i}(G)"] = f[a]
                values[f"F_h(a{i})(G)"] = f[b]
            w = Witness(
                Axiom.STRUCTURAL_CONSISTENCY,
                m.name,
                g,
                nodes,
                values,
                f"neighbours of {u} dominate those of {v} yet F_{u} = {format_value(f[u])} "
                f"is not above F_{v} = {format_value(f[v])}",
            )
            return _verdict(Axiom.STRUCTURAL_CONSISTENCY, m, w)
    return _verdict(Axiom.STRUCTURAL_CONSISTENCY, m, vacuous=not triggered)


# ---------------------------------------------------------------------------
# dispatch, replay and suites


def check_axiom(m, axiom, g, config=None, edges=None):
    config = config or CheckConfig()
    axiom = Axiom.parse(axiom)
    if axiom is Axiom.ISOMORPHIC_INVARIANCE:
        return check_isomorphic_invariance(
            m, g, config.a1_trials, config.a1_exhaustive, config.seed, config.a1_max_exhaustive_n
        )
    if axiom is Axiom.LOCALITY:
        return check_locality(m, g)
    if axiom is Axiom.ISOLATED_MINIMA:
        return check_isolated_minima(m, g)
    if axiom is Axiom.EDGE_MONOTONICITY:
        return check_edge_monotonicity(m, g, edges)
    if axiom is Axiom.DIMINISHING_IMPACT:
        return check_diminishing_impact(m, g, edges, config.a5_reading)
    return check_structural_consistency(m, g)


def _values_match(stored, fresh, numeric):
    return all(_eq(stored[k], fresh[k], numeric) for k in stored)


def verify_witness(m, w):
    """Recompute a witness from scratch; True when it still falsifies its axiom."""
    numeric = not m.exact
    g = w.graph
    ax = w.axiom
    if ax is Axiom.ISOMORPHIC_INVARIANCE:
        v, pv = w.nodes["v"], w.nodes["pi(v)"]
        fresh = {"F_v(G)": m(g)[v], "F_pi(v)(H)": m(apply_permutation(g, w.permutation))[pv]}
        return (
            w.permutation[v] == pv
            and _values_match(w.values, fresh, numeric)
            and not _eq(fresh["F_v(G)"], fresh["F_pi(v)(H)"], numeric)
        )
    if ax is Axiom.LOCALITY:
        v = w.nodes["v"]
        block = connected_components(g).blocks[connected_components(g).component_of[v]]
        sub, mapping = induced_subgraph(g, block)
        fresh = {"F_v(G)": m(g)[v], "F_v(G[K_v])": m(sub)[mapping[v]]}
        return _values_match(w.values, fresh, numeric) and not _eq(fresh["F_v(G)"], fresh["F_v(G[K_v])"], numeric)
    if ax is Axiom.ISOLATED_MINIMA:
        v = w.nodes["v"]
        fresh = {"F_v(G)": m(g)[v]}
        return not g.adjacency[v] and _values_match(w.values, fresh, numeric) and not _eq(fresh["F_v(G)"], 0, numeric)
    if ax is Axiom.EDGE_MONOTONICITY:
        u, v = w.nodes["u"], w.nodes["v"]
        before, after = m(g), m(add_edge(g, *w.added_edge))
        fresh = {"F_u(G)": before[u], "F_u(G')": after[u], "F_v(G)": before[v], "F_v(G')": after[v]}
        return (
            {u, v} == set(w.added_edge)
            and _values_match(w.values, fresh, numeric)
            and not _gt(after[u], before[u], numeric)
        )
    if ax is Axiom.DIMINISHING_IMPACT:
        zh, zb = w.nodes["z_h"], w.nodes["z_hbar"]
        h, hb = w.layers
        part = hop_partition_pair(g, *w.added_edge)
        before, after = m(g), m(add_edge(g, *w.added_edge))
        fresh = {
            "F_z_h(G)": before[zh],
            "F_z_h(G')": after[zh],
            "F_z_hbar(G)": before[zb],
            "F_z_hbar(G')": after[zb],
        }
        return (
            h < hb
            and zh in part.layer(h)
            and zb in part.layer(hb)
            and _values_match(w.values, fresh, numeric)
            and not _gt(abs(after[zh] - before[zh]), abs(after[zb] - before[zb]), numeric)
        )
    if ax is Axiom.STRUCTURAL_CONSISTENCY:
        f = m(g)
        u, v = w.nodes["u"], w.nodes["v"]
        k = len(g.adjacency[v])
        pairs = [(w.nodes[f"a{i}"], w.nodes[f"h(a{i})"]) for i in range(1, k + 1)]
        antecedent = (
            k >= 1
            and len(g.adjacency[u]) >= k
            and len({a for a, _ in pairs}) == k
            and all(a in g.adjacency[u] for a, _ in pairs)
            and {b for _, b in pairs} == set(g.adjacency[v])
            and all(_gt(f[a], f[b], numeric) for a, b in pairs)
        )
        fresh = {"F_u(G)": f[u], "F_v(G)": f[v]}
        for i, (a, b) in enumerate(pairs, start=1):
            fresh[f"F_a{i}(G)"] = f[a]
            fresh[f"F_h(a{i})(G)"] = f[b]
        return antecedent and _values_match(w.values, fresh, numeric) and not _gt(f[u], f[v], numeric)
    return False


@dataclass
class SuiteResult:
    """Aggregate verdict of one axiom over a stream of graphs."""

    axiom: Axiom
    measure_name: str
    status: Status = Status.SATISFIED
    witness: Optional[Witness] = None
    witness_index: Optional[int] = None
    graphs_checked: int = 0
    vacuous_count: int = 0
    violation_count: int = 0
    numeric: bool = False

    @property
    def violated(self):
        return self.status is Status.VIOLATED

    @property
    def all_vacuous(self):
        return not self.violated and self.vacuous_count == self.graphs_checked


def run_axiom_suite(m, graphs: Iterable[Graph], config=None, axioms=None, count_all=False):
    """Run the selected checkers (default: all six) over a stream of graphs.

    An axiom stops being checked after its first violation unless
    ``count_all`` is set; the witness kept is always the one from the
    earliest graph in the stream.
    """
    config = config or CheckConfig()
    axioms = [Axiom.parse(a) for a in (axioms or list(Axiom))]
    results = {ax: SuiteResult(ax, m.name, numeric=not m.exact) for ax in axioms}
    for index, g in enumerate(graphs):
        active = [ax for ax in axioms if count_all or not results[ax].violated]
        if not active:
            break
        for ax in active:
            verdict = check_axiom(m, ax, g, config)
            r = results[ax]
            r.graphs_checked += 1
            if verdict.vacuous:
                r.vacuous_count += 1
            if verdict.violated:
                r.violation_count += 1
                if r.witness is None:
                    r.status = Status.VIOLATED
                    r.witness = verdict.witness
                    r.witness_index = index
    return results

"""The seven centrality measures behind one uniform interface.

All measures except eigenvector centrality are computed in exact rational
arithmetic (:class:`fractions.Fraction`), so strict inequalities between
centrality values are decidable without a tolerance. Eigenvector centrality is
a float computation; comparisons on it use :data:`NUMERIC_EPS`.

Conventions fixed here:

* an unreachable node contributes 0 to every distance-based sum;
* betweenness sums over unordered pairs ``{s, t}``;
* decaying degree includes the node's own degree (the distance-0 term) and
  uses the global node count of the graph.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, partial
from math import sqrt
from typing import Callable

import numpy as np

from . import _kernels
from .errors import BudgetExceeded, ConvergenceFailure, InvalidParameter, UnknownMeasure
from .graph import UNREACHABLE, Graph, _bfs, _check_node, connected_components, distance_matrix, shortest_path_counts

NUMERIC_EPS = 1e-9
DEFAULT_EC_TOL = 1e-12
DEFAULT_EC_MAX_ITER = 100_000
ORACLE_MAX_N = 8


@dataclass(frozen=True)
class CentralityVector:
    values: tuple
    kind: str  # "exact" or "float"
    measure_name: str

    def __getitem__(self, u):
        return self.values[u]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def exact(self):
        return self.kind == "exact"

    def to_json(self):
        if self.exact:
            values = [str(Fraction(v)) for v in self.values]
        else:
            values = [float(v) for v in self.values]
        return {"measure": self.measure_name, "kind": self.kind, "values": values}


def _exact(name, values):
    return CentralityVector(tuple(Fraction(v) for v in values), "exact", name)


# ---------------------------------------------------------------------------
# distance-layer bookkeeping shared by closeness, weighted degree and DDC


def _layer_sums(g):
    """Per node, node counts and degree sums of each BFS layer.

    Returns ``(counts, degsums)``: ``counts[u][d]`` nodes at distance ``d``
    from ``u``, ``degsums[u][d]`` the sum of their degrees.
    """
    dist = distance_matrix(g).tolist()
    deg = [len(a) for a in g.adjacency]
    counts = []
    degsums = []
    for row in dist:
        depth = max(row)
        c = [0] * (depth + 1)
        s = [0] * (depth + 1)
        for w, d in enumerate(row):
            if d != UNREACHABLE:
                c[d] += 1
                s[d] += deg[w]
        counts.append(c)
        degsums.append(s)
    return counts, degsums


def _harmonic(layer):
    """Sum of ``layer[d] / d`` over ``d >= 1`` as one Fraction."""
    total = Fraction(0)
    for d in range(1, len(layer)):
        if layer[d]:
            total += Fraction(layer[d], d)
    return total


# ---------------------------------------------------------------------------
# measures


def uniform_centrality(g, beta=1):
    beta = Fraction(beta)
    if beta < 0:
        raise InvalidParameter(f"beta must be non-negative, got {beta}")
    return _exact("uniform", [beta] * g.n)


def degree_centrality(g):
    return _exact("degree", [len(a) for a in g.adjacency])


def closeness_centrality(g):
    """Harmonic closeness: sum of ``1 / dist(u, w)`` over reachable ``w != u``."""
    counts, _ = _layer_sums(g)
    return _exact("closeness", [_harmonic(c) for c in counts])


def weighted_degree_centrality(g):
    """Sum of ``degree(w) / dist(u, w)`` over reachable ``w != u``."""
    _, degsums = _layer_sums(g)
    return _exact("weighted_degree", [_harmonic(s) for s in degsums])


def decaying_degree_centrality(g):
    """Sum of ``degree(w) / n**(2 dist(u, w))`` over reachable ``w``, ``w = u`` included."""
    _, degsums = _layer_sums(g)
    n2 = g.n * g.n
    values = []
    for s in degsums:
        depth = len(s) - 1
        num = 0
        for d, x in enumerate(s):
            num += x * n2 ** (depth - d)
        values.append(Fraction(num, n2**depth))
    return _exact("decaying_degree", values)


def betweenness_centrality(g):
    """Exact betweenness by Brandes dependency accumulation.

    Accumulating over every source counts each unordered pair twice, so the
    result is halved.
    """
    n = g.n
    bc = [Fraction(0)] * n
    for s in range(n):
        table = shortest_path_counts(g, s)
        sigma = table.sigma
        dist = table.dist.dist
        delta = [Fraction(0)] * n
        for w in reversed(table.order):
            if w == s:
                continue
            coeff = (1 + delta[w]) / sigma[w]
            dw = dist[w]
            for v in g.adjacency[w]:
                if dist[v] == dw - 1:
                    delta[v] += sigma[v] * coeff
            bc[w] += delta[w]
    return _exact("betweenness", [x / 2 for x in bc])


def betweenness_oracle(g):
    """Betweenness by listing every shortest path explicitly.

    For each unordered pair the simple paths from ``s`` are explored depth
    first, keeping only those of minimum length to ``t``. Independent of the
    BFS machinery; exponential, hence limited to ``n <= 8``.
    """
    n = g.n
    if n > ORACLE_MAX_N:
        raise BudgetExceeded(f"betweenness oracle supports n <= {ORACLE_MAX_N}, got {n}")
    adj = [set(a) for a in g.adjacency]
    bc = [Fraction(0)] * n
    for s in range(n):
        for t in range(s + 1, n):
            best = [n]  # any simple path has fewer than n edges
            found = []

            def walk(path, seen):
                here = path[-1]
                length = len(path) - 1
                if here == t:
                    if length < best[0]:
                        best[0] = length
                        found.clear()
                    if length == best[0]:
                        found.append(tuple(path))
                    return
                if length >= best[0]:
                    return
                for w in sorted(adj[here]):
                    if w not in seen:
                        seen.add(w)
                        path.append(w)
                        walk(path, seen)
                        path.pop()
                        seen.discard(w)

            walk([s], {s})
            if not found:
                continue
            total = len(found)
            through = [0] * n
            for p in found:
                for w in p[1:-1]:
                    through[w] += 1
            for w in range(n):
                if through[w]:
                    bc[w] += Fraction(through[w], total)
    return _exact("betweenness", bc)


# ---------------------------------------------------------------------------
# eigenvector centrality


@dataclass(frozen=True)
class EigenResult:
    """Dominant eigenpair chosen for eigenvector centrality.

    ``vector`` has unit 2-norm (all zeros for an edgeless graph) and is
    supported on ``tied_components``: every component whose largest
    eigenvalue equals ``lambda_max`` within :data:`NUMERIC_EPS`. Tied
    components share the weight equally, which keeps the result independent
    of node labels. ``component_chosen`` is the first of them, -1 without
    edges; ``degenerate`` flags both the edgeless case and ties.
    """

    lambda_max: float
    vector: tuple[float, ...]
    component_chosen: int
    degenerate: bool
    tied_components: tuple[int, ...] = ()
    iterations: int = 0

    def residual(self, g):
        a = g.adjacency_matrix(np.float64)
        x = np.asarray(self.vector)
        return float(np.linalg.norm(a @ x - self.lambda_max * x))


def eigenvector_centrality_result(g, tol=DEFAULT_EC_TOL, max_iter=DEFAULT_EC_MAX_ITER):
    if not tol > 0:
        raise InvalidParameter(f"tolerance must be positive, got {tol}")
    n = g.n
    if g.num_edges == 0:
        return EigenResult(0.0, (0.0,) * n, -1, True, (), 0)
    parts = connected_components(g)
    adj = g.adjacency_matrix()
    found = []
    iterations = 0
    for idx, block in enumerate(parts.blocks):
        if len(block) < 2:
            continue
        sub = np.ascontiguousarray(adj[np.ix_(block, block)])
        x, it = _kernels.power_iteration(sub, float(tol), int(max_iter))
        if it < 0:
            raise ConvergenceFailure(f"power iteration did not reach tol={tol} in {max_iter} steps on component {idx}")
        iterations = max(iterations, it)
        lam = float(x @ (sub.astype(np.float64) @ x))
        found.append((idx, block, lam, x))
    lam_max = max(lam for _, _, lam, _ in found)
    tied = [(idx, block, x) for idx, block, lam, x in found if lam >= lam_max - NUMERIC_EPS]
    vec = np.zeros(n)
    scale = 1.0 / sqrt(len(tied))
    for _, block, x in tied:
        vec[list(block)] = x * scale
    vec /= np.linalg.norm(vec)
    return EigenResult(
        lambda_max=lam_max,
        vector=tuple(float(v) for v in vec),
        component_chosen=tied[0][0],
        degenerate=len(tied) > 1,
        tied_components=tuple(idx for idx, _, _ in tied),
        iterations=iterations,
    )


def eigenvector_centrality(g, tol=DEFAULT_EC_TOL, max_iter=DEFAULT_EC_MAX_ITER):
    res = eigenvector_centrality_result(g, tol, max_iter)
    return CentralityVector(res.vector, "float", "eigenvector")


# ---------------------------------------------------------------------------
# decaying degree profiles


@dataclass(frozen=True)
class DdcProfile:
    """Degree sums of the BFS layers around ``node``: ``sums[h]`` for layer ``h``."""

    node: int
    sums: tuple[int, ...]

    def padded(self, length):
        return self.sums + (0,) * (length - len(self.sums))


def ddc_profile(g, u):
    _check_node(g, u)
    dist, _ = _bfs(g, u)
    sums = [0] * (max(dist) + 1)
    for w, d in enumerate(dist):
        if d != UNREACHABLE:
            sums[d] += len(g.adjacency[w])
    return DdcProfile(u, tuple(sums))


def compare_ddc_lex(p, q):
    """Lexicographic comparison of zero-padded profiles: -1, 0 or 1."""
    length = max(len(p.sums), len(q.sums))
    a, b = p.padded(length), q.padded(length)
    return (a > b) - (a < b)


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True, eq=False)
class MeasureHandle:
    """A named centrality measure: ``handle(g)`` returns a :class:`CentralityVector`."""

    name: str
    abbrev: str
    title: str
    func: Callable[[Graph], CentralityVector]
    exact: bool
    parameters: dict = field(default_factory=dict)

    def evaluate(self, g):
        return self.func(g)

    __call__ = evaluate

    def __repr__(self):
        return f"MeasureHandle({self.name!r})"


_SPECS = [
    ("uniform", "UC", "Uniform Centrality"),
    ("degree", "DC", "Degree Centrality"),
    ("closeness", "CC", "Closeness Centrality"),
    ("betweenness", "BC", "Betweenness Centrality"),
    ("weighted_degree", "WDC", "Weighted Degree Centrality"),
    ("eigenvector", "EC", "Eigenvector Centrality"),
    ("decaying_degree", "DDC", "Decaying Degree Centrality"),
]

MEASURE_NAMES = tuple(name for name, _, _ in _SPECS)


def measure_registry(beta=1, tol=DEFAULT_EC_TOL):
    """The seven measures in table order: UC, DC, CC, BC, WDC, EC, DDC."""
    beta = Fraction(beta)
    if beta < 0:
        raise InvalidParameter(f"beta must be non-negative, got {beta}")
    funcs = {
        "uniform": (partial(uniform_centrality, beta=beta), True, {"beta": beta}),
        "degree": (degree_centrality, True, {}),
        "closeness": (closeness_centrality, True, {}),
        "betweenness": (betweenness_centrality, True, {}),
        "weighted_degree": (weighted_degree_centrality, True, {}),
        "eigenvector": (partial(eigenvector_centrality, tol=tol), False, {"tol": tol}),
        "decaying_degree": (decaying_degree_centrality, True, {}),
    }
    return [
        MeasureHandle(name, abbrev, title, funcs[name][0], funcs[name][1], funcs[name][2])
        for name, abbrev, title in _SPECS
    ]


def _key(name):
    return name.strip().lower().replace("-", "_").replace(" ", "_")


def get_measure(name, beta=1, tol=DEFAULT_EC_TOL):
    """Look a measure up by name (``"betweenness"``) or abbreviation (``"BC"``)."""
    key = _key(name)
    for m in measure_registry(beta, tol):
        if key in (m.name, m.abbrev.lower(), _key(m.title)):
            return m
    raise UnknownMeasure(f"unknown measure {name!r}; choose from {', '.join(MEASURE_NAMES)}")


def cached_measure(m, maxsize=None):
    """Same measure, memoised per labeled graph. Only for use inside one process."""
    func = lru_cache(maxsize=maxsize)(m.func)
    return MeasureHandle(m.name, m.abbrev, m.title, func, m.exact, m.parameters)

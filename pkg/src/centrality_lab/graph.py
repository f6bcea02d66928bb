"""Immutable simple undirected graphs and their structural primitives.

Nodes are the integers ``0..n-1``. Every operation here is pure: "mutating"
operations such as :func:`add_edge` return a new :class:`Graph`.

Unreachable distances are reported as :data:`UNREACHABLE` (``-1``), never as a
large integer, so callers have to handle them explicitly.
"""

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _kernels
from .errors import DuplicateEdge, InvalidNode, SelfLoop

UNREACHABLE = -1

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected unweighted graph on nodes ``0..n-1``.

    ``edges`` is normalised on construction: every pair is stored once as
    ``(min, max)`` and the tuple is sorted. Two graphs compare equal exactly
    when they have the same node count and edge set.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.n
        if not isinstance(n, (int, np.integer)) or n < 0:
            raise InvalidNode(f"node count must be a non-negative integer, got {n!r}")
        normalized = set()
        for pair in self.edges:
            u, v = (int(x) for x in pair)
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidNode(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at node {u}")
            normalized.add((u, v) if u < v else (v, u))
        edges = tuple(sorted(normalized))
        nbrs = [[] for _ in range(n)]
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in nbrs))

    @classmethod
    def from_mask(cls, n, mask):
        """Graph whose edge set is the bitmask ``mask`` over :func:`edge_slots`."""
        return cls(n, [e for i, e in enumerate(edge_slots(n)) if mask >> i & 1])

    @property
    def num_edges(self):
        return len(self.edges)

    def nodes(self):
        return range(self.n)

    def neighbors(self, u):
        _check_node(self, u)
        return self.adjacency[u]

    def has_edge(self, u, v):
        _check_node(self, u)
        _check_node(self, v)
        return v in self.adjacency[u]

    def non_edges(self):
        """All node pairs ``(u, v)``, ``u < v``, that are not edges, in slot order."""
        present = set(self.edges)
        return [e for e in edge_slots(self.n) if e not in present]

    def mask(self):
        """Edge bitmask; bit ``i`` is set when ``edge_slots(n)[i]`` is an edge."""
        index = _slot_index(self.n)
        m = 0
        for e in self.edges:
            m |= 1 << index[e]
        return m

    def adjacency_matrix(self, dtype=np.uint8):
        a = np.zeros((self.n, self.n), dtype=dtype)
        if self.edges:
            idx = np.asarray(self.edges)
            a[idx[:, 0], idx[:, 1]] = 1
            a[idx[:, 1], idx[:, 0]] = 1
        return a

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def edge_slots(n):
    """Node pairs of ``K_n`` in row-major upper-triangle order: (0,1), (0,2), ..., (n-2,n-1)."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


@lru_cache(maxsize=None)
def _slot_index(n):
    return {e: i for i, e in enumerate(edge_slots(n))}


def _check_node(g, u):
    if not isinstance(u, (int, np.integer)) or not 0 <= u < g.n:
        raise InvalidNode(f"node {u!r} is not in 0..{g.n - 1}")


# ---------------------------------------------------------------------------
# construction


def build_graph(n, edge_list: Sequence[Sequence[int]] = ()):
    """Validate and normalise an edge list; duplicates such as (0,1) and (1,0) collapse."""
    return Graph(n, tuple(tuple(e) for e in edge_list))


def add_edge(g, u, v):
    _check_node(g, u)
    _check_node(g, v)
    if u == v:
        raise SelfLoop(f"self-loop at node {u}")
    if v in g.adjacency[u]:
        raise DuplicateEdge(f"edge ({u}, {v}) already present")
    return Graph(g.n, g.edges + ((u, v),))


def degree(g, u):
    _check_node(g, u)
    return len(g.adjacency[u])


def degrees(g):
    return [len(a) for a in g.adjacency]


# ---------------------------------------------------------------------------
# distances and components


@dataclass(frozen=True)
class DistanceVector:
    source: int
    dist: tuple[int, ...]

    def __getitem__(self, v):
        return self.dist[v]

    def reachable(self, v):
        return self.dist[v] != UNREACHABLE


def distance_matrix(g):
    """All-pairs BFS distances as an ``int64`` array, ``-1`` for unreachable."""
    if g.n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    return _kernels.distance_matrix(g.adjacency_matrix())


def _bfs(g, source):
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    order = [source]
    queue = deque(order)
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[v] + 1
                order.append(w)
                queue.append(w)
    return dist, order


def shortest_distances(g, u):
    _check_node(g, u)
    dist, _ = _bfs(g, u)
    return DistanceVector(u, tuple(dist))


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components ordered by their smallest node."""

    blocks: tuple[tuple[int, ...], ...]
    component_of: tuple[int, ...]

    def __len__(self):
        return len(self.blocks)


def connected_components(g):
    component_of = [-1] * g.n
    blocks = []
    for s in range(g.n):
        if component_of[s] >= 0:
            continue
        _, order = _bfs(g, s)
        for v in order:
            component_of[v] = len(blocks)
        blocks.append(tuple(sorted(order)))
    return ComponentPartition(tuple(blocks), tuple(component_of))


def induced_subgraph(g, nodes):
    """Subgraph induced by ``nodes``; returns ``(subgraph, {old: new})``.

    New labels follow the increasing order of the old ones.
    """
    keep = sorted(nodes)
    mapping = {old: new for new, old in enumerate(keep)}
    edges = [(mapping[u], mapping[v]) for u, v in g.edges if u in mapping and v in mapping]
    return Graph(len(keep), edges), mapping


def induced_component(g, u):
    """The component of ``u`` as its own graph, with the old-to-new node map."""
    _check_node(g, u)
    _, order = _bfs(g, u)
    return induced_subgraph(g, order)


# ---------------------------------------------------------------------------
# hop partitions


@dataclass(frozen=True)
class HopPartition:
    """Nodes grouped by (minimum) BFS distance from an anchor node or node pair."""

    anchor: tuple[int, ...]
    layers: tuple[frozenset, ...]
    unreachable: frozenset

    def layer(self, h):
        return self.layers[h] if 0 <= h < len(self.layers) else frozenset()

    def hop_of(self, z):
        for h, layer in enumerate(self.layers):
            if z in layer:
                return h
        return UNREACHABLE


def _partition(n, anchor, dist):
    depth = max(dist) if n else -1
    layers = [set() for _ in range(depth + 1)]
    unreachable = set()
    for z, d in enumerate(dist):
        if d == UNREACHABLE:
            unreachable.add(z)
        else:
            layers[d].add(z)
    return HopPartition(tuple(anchor), tuple(frozenset(s) for s in layers), frozenset(unreachable))


def hop_partition_node(g, u):
    _check_node(g, u)
    dist, _ = _bfs(g, u)
    return _partition(g.n, (u,), dist)


def hop_partition_pair(g, u, v):
    """Layers by ``min(dist(u, z), dist(v, z))``; layer 0 is ``{u, v}``."""
    _check_node(g, u)
    _check_node(g, v)
    if u == v:
        raise InvalidNode("pair anchor needs two distinct nodes")
    du, _ = _bfs(g, u)
    dv, _ = _bfs(g, v)
    dist = []
    for a, b in zip(du, dv):
        if a == UNREACHABLE:
            dist.append(b)
        elif b == UNREACHABLE:
            dist.append(a)
        else:
            dist.append(min(a, b))
    return _partition(g.n, (u, v), dist)


# ---------------------------------------------------------------------------
# shortest-path counting


@dataclass(frozen=True)
class PathCountTable:
    """Number of distinct shortest paths from ``source`` to every node (0 if unreachable)."""

    source: int
    sigma: tuple[int, ...]
    dist: DistanceVector
    order: tuple[int, ...] = field(repr=False, default=())


def shortest_path_counts(g, s):
    _check_node(g, s)
    dist, order = _bfs(g, s)
    sigma = [0] * g.n
    sigma[s] = 1
    for v in order:
        dv = dist[v]
        for w in g.adjacency[v]:
            if dist[w] == dv + 1:
                sigma[w] += sigma[v]
    return PathCountTable(s, tuple(sigma), DistanceVector(s, tuple(dist)), tuple(order))

"""Relabeling, isomorphism search, canonical forms and exhaustive enumeration."""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

import numpy as np

from . import _kernels
from .errors import BudgetExceeded, NotAPermutation
from .graph import Graph, edge_slots

MAX_LABELED_N = 7
MAX_DEDUP_N = 8


@dataclass(frozen=True)
class NodeBijection:
    """A permutation of ``0..n-1``; ``forward[u]`` is the image of ``u``."""

    forward: tuple[int, ...]

    def __post_init__(self):
        fwd = tuple(int(x) for x in self.forward)
        if sorted(fwd) != list(range(len(fwd))):
            raise NotAPermutation(f"{list(fwd)} is not a permutation of 0..{len(fwd) - 1}")
        object.__setattr__(self, "forward", fwd)

    @property
    def inverse(self):
        inv = [0] * len(self.forward)
        for u, fu in enumerate(self.forward):
            inv[fu] = u
        return NodeBijection(tuple(inv))

    def __call__(self, u):
        return self.forward[u]

    def __len__(self):
        return len(self.forward)


def _as_bijection(pi):
    return pi if isinstance(pi, NodeBijection) else NodeBijection(tuple(pi))


def apply_permutation(g, pi):
    """The graph with edge ``{u, v}`` renamed to ``{pi(u), pi(v)}``."""
    pi = _as_bijection(pi)
    if len(pi) != g.n:
        raise NotAPermutation(f"permutation of size {len(pi)} applied to a graph with {g.n} nodes")
    f = pi.forward
    return Graph(g.n, [(f[u], f[v]) for u, v in g.edges])


def find_isomorphism(g, h):
    """An edge-preserving bijection ``V(g) -> V(h)``, or None.

    Backtracking over degree-compatible assignments; vertices of ``g`` are
    placed highest degree first so adjacency conflicts prune early.
    """
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    dg = [len(a) for a in g.adjacency]
    dh = [len(a) for a in h.adjacency]
    if sorted(dg) != sorted(dh):
        return None
    n = g.n
    order = sorted(range(n), key=lambda u: (-dg[u], u))
    candidates = {d: [w for w in range(n) if dh[w] == d] for d in set(dg)}
    hadj = [set(a) for a in h.adjacency]
    image = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        u = order[i]
        for w in candidates[dg[u]]:
            if used[w]:
                continue
            ok = True
            for j in range(i):
                x = order[j]
                if (x in g.adjacency[u]) != (image[x] in hadj[w]):
                    ok = False
                    break
            if not ok:
                continue
            image[u] = w
            used[w] = True
            if extend(i + 1):
                return True
            used[w] = False
            image[u] = -1
        return False

    if extend(0):
        return NodeBijection(tuple(image))
    return None


def are_isomorphic(g, h):
    return find_isomorphism(g, h) is not None


# ---------------------------------------------------------------------------
# canonical form


@lru_cache(maxsize=None)
def _slot_positions(n):
    slots = edge_slots(n)
    pa = np.array([a for a, _ in slots], dtype=np.int64)
    pb = np.array([b for _, b in slots], dtype=np.int64)
    return pa, pb


@lru_cache(maxsize=512)
def _group_permutations(sizes):
    """Every arrangement that permutes positions only within consecutive blocks of ``sizes``."""
    blocks = []
    start = 0
    for s in sizes:
        blocks.append(list(permutations(range(start, start + s))))
        start += s
    rows = [sum(choice, ()) for choice in product(*blocks)]
    return np.array(rows, dtype=np.int64).reshape(len(rows), start)


def canonical_code(g):
    """Isomorphism-invariant edge code of ``g``.

    The minimum, over all relabelings that list vertices by non-increasing
    degree, of the edge bitmask of the relabeled graph. Two graphs are
    isomorphic iff their codes are equal. Cost grows with the product of the
    factorials of the degree-class sizes, so keep ``n`` at most about 10.
    """
    n = g.n
    if n <= 1 or g.num_edges == 0:
        return 0
    deg = [len(a) for a in g.adjacency]
    order = sorted(range(n), key=lambda u: (-deg[u], u))
    sizes = []
    prev = None
    for u in order:
        if deg[u] == prev:
            sizes[-1] += 1
        else:
            sizes.append(1)
            prev = deg[u]
    rows = np.asarray(order, dtype=np.int64)[_group_permutations(tuple(sizes))]
    pa, pb = _slot_positions(n)
    return _kernels.min_relabel_code(g.adjacency_matrix(), rows, pa, pb)


def canonical_form(g):
    return Graph.from_mask(g.n, canonical_code(g))


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def isomorphism_class_codes(n):
    """Sorted canonical codes of all isomorphism classes on ``n`` nodes.

    Built by extension: every graph on ``n`` nodes is some class on ``n - 1``
    nodes plus a new vertex joined to a subset of the old ones.
    """
    if n > MAX_DEDUP_N:
        raise BudgetExceeded(f"isomorphism-class enumeration supports n <= {MAX_DEDUP_N}, got {n}")
    if n <= 1:
        return (0,)
    codes = set()
    for base in isomorphism_class_codes(n - 1):
        old = Graph.from_mask(n - 1, base).edges
        for subset in range(1 << (n - 1)):
            extra = tuple((v, n - 1) for v in range(n - 1) if subset >> v & 1)
            codes.add(canonical_code(Graph(n, old + extra)))
    return tuple(sorted(codes))


def count_graphs(n, dedup_isomorphic=False):
    if dedup_isomorphic:
        return len(isomorphism_class_codes(n))
    return 1 << (n * (n - 1) // 2)


def enumerate_graphs(n, dedup_isomorphic=False, start=0, stop=None):
    """Yield graphs on ``n`` nodes in increasing edge-bitmask order.

    Labeled mode yields all ``2**(n(n-1)/2)`` graphs; ``start``/``stop`` select
    a contiguous bitmask range so the space can be split between workers.
    With ``dedup_isomorphic`` one canonical representative per isomorphism
    class is produced, and ``start``/``stop`` index into that sorted list.
    """
    if n < 0:
        raise BudgetExceeded("node count must be non-negative")
    if dedup_isomorphic:
        codes = isomorphism_class_codes(n)
        for code in codes[start:stop]:
            yield Graph.from_mask(n, code)
        return
    if n > MAX_LABELED_N:
        raise BudgetExceeded(f"labeled enumeration supports n <= {MAX_LABELED_N}, got {n}")
    total = count_graphs(n)
    stop = total if stop is None else min(stop, total)
    for mask in range(start, stop):
        yield Graph.from_mask(n, mask)

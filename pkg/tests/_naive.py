"""Slow, direct reference implementations used only to cross-check the library.

Nothing here reuses the library's traversal, matching or short-circuit
logic: distances come from Floyd-Warshall, components from distances, and
every axiom is a literal loop over its full quantifier structure.
"""

from fractions import Fraction
from itertools import permutations

import numpy as np

INF = float("inf")
EPS = 1e-9


def floyd_warshall(g):
    n = g.n
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def degrees(g):
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def neighbours(g, u):
    return sorted({b for a, b in g.edges if a == u} | {a for a, b in g.edges if b == u})


# ---------------------------------------------------------------------------
# measures


def closeness(g):
    d = floyd_warshall(g)
    return [sum((Fraction(1, int(d[u][w])) for w in range(g.n) if w != u and d[u][w] < INF), Fraction(0)) for u in range(g.n)]


def weighted_degree(g):
    d = floyd_warshall(g)
    deg = degrees(g)
    return [
        sum((Fraction(deg[w], int(d[u][w])) for w in range(g.n) if w != u and d[u][w] < INF), Fraction(0))
        for u in range(g.n)
    ]


def decaying_degree(g):
    d = floyd_warshall(g)
    deg = degrees(g)
    n = g.n
    return [
        sum((Fraction(deg[w], n ** (2 * int(d[u][w]))) for w in range(n) if d[u][w] < INF), Fraction(0))
        for u in range(n)
    ]


def eigenvector(g):
    """Dense symmetric eigensolve per component; ties between components share weight."""
    d = floyd_warshall(g)
    n = g.n
    x = np.zeros(n)
    if not g.edges:
        return x, 0.0
    seen = set()
    comps = []
    for u in range(n):
        if u in seen:
            continue
        block = [w for w in range(n) if d[u][w] < INF]
        seen.update(block)
        comps.append(block)
    a = np.zeros((n, n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    best = []
    lam_max = -1.0
    for block in comps:
        sub = a[np.ix_(block, block)]
        vals, vecs = np.linalg.eigh(sub)
        lam = vals[-1]
        vec = np.abs(vecs[:, -1])
        if lam > lam_max + EPS:
            lam_max, best = lam, [(block, vec)]
        elif abs(lam - lam_max) <= EPS:
            best.append((block, vec))
    for block, vec in best:
        x[block] = vec / np.sqrt(len(best))
    return x, lam_max


# ---------------------------------------------------------------------------
# axioms: each returns (violated, vacuous)


def _gt(a, b, numeric):
    return a - b > EPS if numeric else a > b


def _eq(a, b, numeric):
    return abs(a - b) <= EPS if numeric else a == b


def _relabel(g, pi):
    from centrality_lab.graph import Graph

    return Graph(g.n, [(pi[u], pi[v]) for u, v in g.edges])


def _with_edge(g, u, v):
    from centrality_lab.graph import Graph

    return Graph(g.n, list(g.edges) + [(u, v)])


def a1(m, g):
    f = list(m(g))
    for pi in permutations(range(g.n)):
        fh = list(m(_relabel(g, pi)))
        for v in range(g.n):
            if not _eq(f[v], fh[pi[v]], not m.exact):
                return True, False
    return False, False


def a2(m, g):
    from centrality_lab.graph import Graph

    f = list(m(g))
    d = floyd_warshall(g)
    for v in range(g.n):
        comp = [w for w in range(g.n) if d[v][w] < INF]
        index = {w: i for i, w in enumerate(comp)}
        sub = Graph(len(comp), [(index[a], index[b]) for a, b in g.edges if a in index and b in index])
        if not _eq(f[v], list(m(sub))[index[v]], not m.exact):
            return True, False
    return False, False


def a3(m, g):
    f = list(m(g))
    deg = degrees(g)
    iso = [v for v in range(g.n) if deg[v] == 0]
    if not iso:
        return False, True
    return any(not _eq(f[v], 0, not m.exact) for v in iso), False


def _non_edges(g):
    es = set(g.edges)
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if (u, v) not in es]


def a4(m, g):
    cand = _non_edges(g)
    if not cand:
        return False, True
    f = list(m(g))
    for u, v in cand:
        f2 = list(m(_with_edge(g, u, v)))
        if not (_gt(f2[u], f[u], not m.exact) and _gt(f2[v], f[v], not m.exact)):
            return True, False
    return False, False


def a5(m, g, reading="universal"):
    numeric = not m.exact
    d = floyd_warshall(g)
    f = list(m(g))
    violated = False
    triggered = False
    for u, v in _non_edges(g):
        hop = {z: min(d[u][z], d[v][z]) for z in range(g.n)}
        finite = {z: int(h) for z, h in hop.items() if h < INF}
        hmax = max(finite.values())
        if hmax < 1:
            continue
        triggered = True
        f2 = list(m(_with_edge(g, u, v)))
        delta = [abs(f2[z] - f[z]) for z in range(g.n)]
        for h in range(hmax + 1):
            for hb in range(h + 1, hmax + 1):
                lh = [z for z in finite if finite[z] == h]
                lb = [z for z in finite if finite[z] == hb]
                if not lh or not lb:
                    continue
                pairs = [(zh, zb) for zh in lh for zb in lb]
                ok = [_gt(delta[zh], delta[zb], numeric) for zh, zb in pairs]
                if reading == "universal" and not all(ok):
                    violated = True
                if reading == "existential" and not any(ok):
                    violated = True
    return violated, not triggered


def injection_exists(a, b, numeric=False):
    """Brute force over every injection of ``b`` into ``a``."""
    if len(b) == 0:
        return True
    for image in permutations(range(len(a)), len(b)):
        if all(_gt(a[image[i]], b[i], numeric) for i in range(len(b))):
            return True
    return False


def a6(m, g):
    numeric = not m.exact
    f = list(m(g))
    deg = degrees(g)
    violated = False
    triggered = False
    for u in range(g.n):
        for v in range(g.n):
            if u == v or deg[v] == 0 or deg[u] < deg[v]:
                continue
            a = [f[w] for w in neighbours(g, u)]
            b = [f[w] for w in neighbours(g, v)]
            if injection_exists(a, b, numeric):
                triggered = True
                if not _gt(f[u], f[v], numeric):
                    violated = True
    return violated, not triggered


ORACLES = {1: a1, 2: a2, 3: a3, 4: a4, 5: a5, 6: a6}

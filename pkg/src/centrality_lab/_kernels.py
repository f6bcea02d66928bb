"""Hot numeric kernels.

Each kernel has a numba implementation and a pure-numpy fallback with the
same signature. The module-level names (``distance_matrix`` etc.) dispatch to
the numba versions when numba imports and ``CENTRALITY_LAB_NUMBA`` is not set
to a false value (``0``, ``false``, ``no``, ``off``). Both implementations are
always reachable through ``IMPLEMENTATIONS`` so they can be benchmarked and
cross-checked against each other.

Conventions shared by all kernels:

* adjacency matrices are square ``uint8`` arrays with a zero diagonal;
* an unreachable distance is ``-1``.
"""

import os

import numpy as np

_FALSE = {"0", "false", "no", "off"}


def _numba_requested():
    return os.environ.get("CENTRALITY_LAB_NUMBA", "1").strip().lower() not in _FALSE


try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is an optional extra
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f


# ---------------------------------------------------------------------------
# numpy fallback


def distance_matrix_numpy(adj):
    """All-pairs BFS distances by level-synchronous frontier expansion."""
    n = adj.shape[0]
    a = adj.astype(bool)
    dist = np.full((n, n), -1, dtype=np.int64)
    reached = np.eye(n, dtype=bool)
    dist[reached] = 0
    frontier = reached.copy()
    d = 0
    while frontier.any():
        d += 1
        nxt = (frontier @ a) & ~reached
        dist[nxt] = d
        reached |= nxt
        frontier = nxt
    return dist


def power_iteration_numpy(adj, tol, max_iter):
    """Power iteration on ``adj + I`` from the normalised all-ones vector.

    Returns ``(x, iterations)`` with ``x`` of unit 2-norm; ``iterations`` is
    -1 when the max-norm step never dropped to ``tol``.
    """
    n = adj.shape[0]
    m = adj.astype(np.float64) + np.eye(n)
    x = np.full(n, 1.0 / np.sqrt(n))
    for it in range(1, max_iter + 1):
        y = m @ x
        y /= np.sqrt(y @ y)
        step = np.max(np.abs(y - x))
        x = y
        if step <= tol:
            return x, it
    return x, -1


def min_relabel_code_numpy(adj, rows, pa, pb):
    """Smallest edge code over a set of relabelings.

    ``rows[k, p]`` is the original vertex placed at position ``p`` by the
    k-th relabeling; ``(pa[e], pb[e])`` is the position pair of edge slot
    ``e``. The code of a relabeled graph sets bit ``e`` when slot ``e`` is an
    edge.
    """
    n_slots = pa.shape[0]
    if n_slots == 0 or rows.shape[0] == 0:
        return 0
    bits = adj[rows[:, pa], rows[:, pb]].astype(np.int64)
    weights = np.left_shift(np.int64(1), np.arange(n_slots, dtype=np.int64))
    return int((bits @ weights).min())


# ---------------------------------------------------------------------------
# numba


@njit(cache=True)
def distance_matrix_numba(adj):
    n = adj.shape[0]
    dist = np.full((n, n), -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        dist[s, s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            v = queue[head]
            head += 1
            dv = dist[s, v]
            for w in range(n):
                if adj[v, w] != 0 and dist[s, w] < 0:
                    dist[s, w] = dv + 1
                    queue[tail] = w
                    tail += 1
    return dist


@njit(cache=True)
def power_iteration_numba(adj, tol, max_iter):
    n = adj.shape[0]
    x = np.full(n, 1.0 / np.sqrt(n))
    y = np.empty(n)
    for it in range(1, max_iter + 1):
        sq = 0.0
        for i in range(n):
            s = x[i]
            for j in range(n):
                if adj[i, j] != 0:
                    s += x[j]
            y[i] = s
            sq += s * s
        norm = np.sqrt(sq)
        step = 0.0
        for i in range(n):
            yi = y[i] / norm
            diff = abs(yi - x[i])
            if diff > step:
                step = diff
            x[i] = yi
        if step <= tol:
            return x, it
    return x, -1


@njit(cache=True)
def min_relabel_code_numba(adj, rows, pa, pb):
    m = rows.shape[0]
    n_slots = pa.shape[0]
    best = -1
    for k in range(m):
        code = 0
        pruned = False
        # most significant slot first so a losing prefix can be abandoned
        for e in range(n_slots - 1, -1, -1):
            if adj[rows[k, pa[e]], rows[k, pb[e]]] != 0:
                code |= np.int64(1) << e
                if best >= 0 and code > (best >> e) << e:
                    pruned = True
                    break
        if not pruned and (best < 0 or code < best):
            best = code
    if best < 0:
        return 0
    return best


IMPLEMENTATIONS = {
    "numpy": {
        "distance_matrix": distance_matrix_numpy,
        "power_iteration": power_iteration_numpy,
        "min_relabel_code": min_relabel_code_numpy,
    },
}
if NUMBA_AVAILABLE:
    IMPLEMENTATIONS["numba"] = {
        "distance_matrix": distance_matrix_numba,
        "power_iteration": power_iteration_numba,
        "min_relabel_code": min_relabel_code_numba,
    }

BACKEND = "numba" if NUMBA_AVAILABLE and _numba_requested() else "numpy"

distance_matrix = IMPLEMENTATIONS[BACKEND]["distance_matrix"]
power_iteration = IMPLEMENTATIONS[BACKEND]["power_iteration"]
_min_relabel_code = IMPLEMENTATIONS[BACKEND]["min_relabel_code"]


def min_relabel_code(adj, rows, pa, pb):
    if pa.shape[0] == 0 or rows.shape[0] == 0:
        return 0
    return int(_min_relabel_code(adj, rows, pa, pb))

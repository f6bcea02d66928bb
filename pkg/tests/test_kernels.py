import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given

from centrality_lab import _kernels
from centrality_lab.graph import Graph
from centrality_lab.isomorphism import _group_permutations, _slot_positions
from conftest import graphs

numba_only = pytest.mark.skipif("numba" not in _kernels.IMPLEMENTATIONS, reason="numba not installed")
NP = _kernels.IMPLEMENTATIONS["numpy"]


def _nb(name):
    return _kernels.IMPLEMENTATIONS["numba"][name]


@numba_only
@given(graphs(max_n=10))
def test_distance_matrix_backends_agree(g):
    if g.n == 0:
        return
    a = g.adjacency_matrix()
    assert np.array_equal(NP["distance_matrix"](a), _nb("distance_matrix")(a))


def _connected(g):
    return g.n > 1 and len({x for e in g.edges for x in e}) == g.n and _kernels.distance_matrix(g.adjacency_matrix()).min() >= 0


@numba_only
@given(graphs(min_n=2, max_n=9))
def test_power_iteration_backends_agree(g):
    if not _connected(g):
        return
    a = g.adjacency_matrix()
    x1, it1 = NP["power_iteration"](a, 1e-12, 100_000)
    x2, it2 = _nb("power_iteration")(a, 1e-12, 100_000)
    assert it1 > 0 and it2 > 0
    assert np.allclose(x1, x2, atol=1e-10)


def test_power_iteration_reports_failure():
    a = Graph(4, [(0, 1), (1, 2), (2, 3)]).adjacency_matrix()
    x, it = NP["power_iteration"](a, 1e-15, 2)
    assert it == -1


@numba_only
@given(graphs(min_n=2, max_n=7))
def test_min_relabel_code_backends_agree(g):
    deg = [len(x) for x in g.adjacency]
    order = np.asarray(sorted(range(g.n), key=lambda u: (-deg[u], u)), dtype=np.int64)
    rows = order[_group_permutations((g.n,))]
    pa, pb = _slot_positions(g.n)
    a = g.adjacency_matrix()
    assert NP["min_relabel_code"](a, rows, pa, pb) == _nb("min_relabel_code")(a, rows, pa, pb)


@pytest.mark.parametrize("flag,expected", [("0", "numpy"), ("off", "numpy"), ("1", None)])
def test_env_flag_selects_backend(flag, expected):
    env = dict(os.environ, CENTRALITY_LAB_NUMBA=flag)
    out = subprocess.run(
        [sys.executable, "-c", "from centrality_lab import _kernels; print(_kernels.BACKEND)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    ).stdout.strip()
    if expected is None:
        expected = "numba" if _kernels.NUMBA_AVAILABLE else "numpy"
    assert out == expected

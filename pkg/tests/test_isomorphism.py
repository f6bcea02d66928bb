from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given

from centrality_lab.errors import BudgetExceeded, NotAPermutation
from centrality_lab.graph import Graph
from centrality_lab.isomorphism import (
    NodeBijection,
    apply_permutation,
    are_isomorphic,
    canonical_code,
    canonical_form,
    count_graphs,
    enumerate_graphs,
    find_isomorphism,
    isomorphism_class_codes,
)
from conftest import graphs, graphs_with_permutation

PATH3 = Graph(3, [(0, 1), (1, 2)])
TRIANGLE = Graph(3, [(0, 1), (1, 2), (0, 2)])


def _brute_min_code(g):
    """Minimum mask over every relabeling whose new labels list degrees non-increasingly."""
    best = None
    for p in permutations(range(g.n)):
        h = apply_permutation(g, p)
        deg = [len(a) for a in h.adjacency]
        if all(deg[i] >= deg[i + 1] for i in range(g.n - 1)):
            code = h.mask()
            best = code if best is None else min(best, code)
    return 0 if best is None else best


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_identity_and_reversal():
    assert apply_permutation(PATH3, (0, 1, 2)) == PATH3
    assert apply_permutation(PATH3, (2, 1, 0)) == PATH3


def test_bad_permutations():
    with pytest.raises(NotAPermutation):
        NodeBijection((0, 0, 1))
    with pytest.raises(NotAPermutation):
        apply_permutation(PATH3, (0, 1))


def test_bijection_inverse():
    pi = NodeBijection((2, 0, 1))
    assert [pi.inverse(pi(u)) for u in range(3)] == [0, 1, 2]


@given(graphs_with_permutation(max_n=7))
def test_find_isomorphism_after_relabel(case):
    g, pi = case
    h = apply_permutation(g, pi)
    f = find_isomorphism(g, h)
    assert f is not None
    assert apply_permutation(g, f) == h


def test_non_isomorphic_pairs():
    assert find_isomorphism(PATH3, TRIANGLE) is None
    assert find_isomorphism(PATH3, Graph(4, [(0, 1), (1, 2)])) is None
    # the two components of the degree-structure fixture
    left = Graph(5, [(0, 1), (0, 2), (1, 3), (2, 4)])
    right = Graph(5, [(0, 1), (0, 2)])
    assert find_isomorphism(left, right) is None


@given(graphs(max_n=6), graphs(max_n=6))
def test_are_isomorphic_matches_networkx(g, h):
    assert are_isomorphic(g, h) == nx.is_isomorphic(_nx(g), _nx(h))


@given(graphs(max_n=6))
def test_canonical_code_is_brute_force_minimum(g):
    assert canonical_code(g) == _brute_min_code(g)


@given(graphs_with_permutation(max_n=8))
def test_canonical_code_invariant(case):
    g, pi = case
    assert canonical_code(apply_permutation(g, pi)) == canonical_code(g)
    assert are_isomorphic(canonical_form(g), g)


def test_labeled_enumeration():
    assert len(list(enumerate_graphs(3))) == 8
    assert [g.mask() for g in enumerate_graphs(3)] == list(range(8))
    assert len(list(enumerate_graphs(4, start=10, stop=20))) == 10
    with pytest.raises(BudgetExceeded):
        list(enumerate_graphs(8))


def test_dedup_n3():
    reps = list(enumerate_graphs(3, dedup_isomorphic=True))
    assert sorted(g.num_edges for g in reps) == [0, 1, 2, 3]


@pytest.mark.parametrize("n", range(1, 6))
def test_class_codes_match_brute_force(n):
    brute = {_brute_min_code(g) for g in enumerate_graphs(n)}
    assert set(isomorphism_class_codes(n)) == brute


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)])
def test_class_counts_against_atlas(n, expected):
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == n]
    assert len(atlas) == expected
    codes = {canonical_code(Graph(n, list(h.edges()))) for h in atlas}
    assert len(codes) == expected
    assert codes == set(isomorphism_class_codes(n))
    assert count_graphs(n, dedup_isomorphic=True) == expected


@pytest.mark.slow
def test_class_count_n8():
    assert count_graphs(8, dedup_isomorphic=True) == 12346


def test_dedup_budget():
    with pytest.raises(BudgetExceeded):
        list(enumerate_graphs(9, dedup_isomorphic=True))

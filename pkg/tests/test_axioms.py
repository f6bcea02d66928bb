from fractions import Fraction as F
import pytest
from hypothesis import given, strategies as st

import _naive
from centrality_lab.axioms import (
    Axiom,
    CheckConfig,
    Status,
    check_axiom,
    check_diminishing_impact,
    check_edge_monotonicity,
    check_isolated_minima,
    check_isomorphic_invariance,
    check_locality,
    check_structural_consistency,
    dominating_injection_exists,
    run_axiom_suite,
    verify_witness,
)
from centrality_lab.errors import InvalidArguments
from centrality_lab.graph import Graph
from centrality_lab.isomorphism import enumerate_graphs
from centrality_lab.measures import CentralityVector, MeasureHandle, cached_measure, get_measure, measure_registry
from conftest import graphs


def _label_measure(g):
    return CentralityVector(tuple(F(u) for u in range(g.n)), "exact", "label")


LABEL = MeasureHandle("label", "LBL", "Label", _label_measure, True)
PATH3_EDGE2 = Graph(5, [(0, 1), (0, 2), (3, 4)])


def _all_graphs(n_max):
    for n in range(1, n_max + 1):
        yield from enumerate_graphs(n)


def test_axiom_parse():
    assert Axiom.parse("A4") is Axiom.EDGE_MONOTONICITY
    assert Axiom.parse(6) is Axiom.STRUCTURAL_CONSISTENCY
    assert Axiom.parse("locality") is Axiom.LOCALITY
    assert Axiom.parse("Isolated Minima") is Axiom.ISOLATED_MINIMA
    with pytest.raises(InvalidArguments):
        Axiom.parse("7")


def test_label_measure_breaks_a1():
    v = check_isomorphic_invariance(LABEL, Graph(3, [(0, 1)]))
    assert v.violated and v.witness.permutation is not None
    assert verify_witness(LABEL, v.witness)


def test_a1_exhaustive_dc_small():
    dc = get_measure("degree")
    for g in _all_graphs(5):
        assert not check_isomorphic_invariance(dc, g, exhaustive=True).violated


def test_a1_rejects_zero_trials():
    with pytest.raises(InvalidArguments):
        CheckConfig(a1_trials=0)


@given(graphs(max_n=7), st.integers(0, 10))
def test_a1_random_all_measures(g, seed):
    for m in measure_registry():
        assert not check_isomorphic_invariance(m, g, trials=5, seed=seed).violated


def test_ec_locality_violation():
    ec = get_measure("eigenvector")
    v = check_locality(ec, PATH3_EDGE2)
    assert v.violated and v.numeric
    assert v.witness.nodes["v"] in (3, 4)
    assert float(v.witness.values["F_v(G[K_v])"]) == pytest.approx(0.7071, abs=1e-4)
    assert verify_witness(ec, v.witness)


def test_ddc_locality_violation():
    v = check_locality(get_measure("decaying_degree"), Graph(4, [(0, 1), (2, 3)]))
    assert v.violated


@pytest.mark.parametrize("name", ["degree", "closeness", "betweenness", "weighted_degree"])
def test_locality_holds(name):
    m = cached_measure(get_measure(name))
    for g in _all_graphs(5):
        assert not check_locality(m, g).violated


def test_isolated_minima():
    g = Graph(3, [(0, 1)])
    v = check_isolated_minima(get_measure("uniform"), g)
    assert v.violated and v.witness.nodes == {"v": 2}
    for name in ("degree", "closeness", "betweenness", "weighted_degree", "eigenvector", "decaying_degree"):
        assert not check_isolated_minima(get_measure(name), g).violated
    tri = Graph(3, [(0, 1), (1, 2), (0, 2)])
    v = check_isolated_minima(get_measure("uniform"), tri)
    assert v.satisfied and v.vacuous


def test_bc_edge_monotonicity():
    bc = get_measure("betweenness")
    g = Graph(4, [(0, 2), (1, 2), (2, 3)])
    v = check_edge_monotonicity(bc, g, edges=[(0, 1)])
    assert v.violated
    assert v.witness.values["F_u(G)"] == v.witness.values["F_u(G')"] == 0
    assert verify_witness(bc, v.witness)


def test_ec_edge_monotonicity():
    ec = get_measure("eigenvector")
    v = check_edge_monotonicity(ec, Graph(3, [(0, 1)]), edges=[(0, 2)])
    assert v.violated and v.witness.nodes["u"] == 0


def test_edge_monotonicity_vacuous_on_complete():
    k4 = Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    v = check_edge_monotonicity(get_measure("degree"), k4)
    assert v.vacuous and v.satisfied


def test_edge_argument_must_be_non_edge():
    with pytest.raises(InvalidArguments):
        check_edge_monotonicity(get_measure("degree"), Graph(2, [(0, 1)]), edges=[(0, 1)])


@pytest.mark.parametrize("name", ["degree", "closeness", "weighted_degree", "decaying_degree"])
def test_edge_monotonicity_holds(name):
    m = cached_measure(get_measure(name))
    for g in _all_graphs(5):
        assert not check_edge_monotonicity(m, g).violated


def test_cc_diminishing_impact():
    # z2 - y - u - z1 - w - x - v, add {u, v}
    g = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)])
    cc = get_measure("closeness")
    v = check_diminishing_impact(cc, g, edges=[(2, 6)])
    assert v.violated
    assert verify_witness(cc, v.witness)
    h, hb = v.witness.layers
    assert h < hb


def test_ddc_diminishing_impact_holds():
    m = cached_measure(get_measure("decaying_degree"))
    for g in _all_graphs(5):
        assert not check_diminishing_impact(m, g).violated


def test_diminishing_impact_vacuous():
    # a single non-edge whose endpoints are the only nodes
    v = check_diminishing_impact(get_measure("degree"), Graph(2))
    assert v.vacuous and v.satisfied


def test_diminishing_impact_reading():
    with pytest.raises(InvalidArguments):
        check_diminishing_impact(get_measure("degree"), Graph(3), reading="some")
    with pytest.raises(InvalidArguments):
        CheckConfig(a5_reading="some")


@pytest.mark.parametrize("name", ["closeness", "betweenness", "eigenvector", "decaying_degree"])
def test_existential_reading_matches_oracle(name):
    m = cached_measure(get_measure(name))
    for g in _all_graphs(4):
        v = check_diminishing_impact(m, g, reading="existential")
        assert (v.violated, v.vacuous) == _naive.a5(m, g, "existential")


def test_existential_is_weaker():
    m = cached_measure(get_measure("closeness"))
    for g in _all_graphs(4):
        if check_diminishing_impact(m, g, reading="existential").violated:
            assert check_diminishing_impact(m, g).violated


def test_dominating_injection_examples():
    assert dominating_injection_exists([3, 3], [0, 0])
    assert not dominating_injection_exists([2, 2], [2, 1])
    assert not dominating_injection_exists([5, 1, 1], [4, 1])
    assert dominating_injection_exists([5, 1, 1], [])
    with pytest.raises(InvalidArguments):
        dominating_injection_exists([1], [0, 0])


@given(st.lists(st.integers(0, 4), max_size=6), st.data())
def test_dominating_injection_matches_brute_force(a, data):
    b = data.draw(st.lists(st.integers(0, 4), max_size=min(4, len(a))))
    assert dominating_injection_exists(a, b) == _naive.injection_exists(a, b)


def test_structural_consistency_bc_fixture():
    # u, u1, u2, u11, u21 | v, v1, v2
    g = Graph(8, [(0, 1), (0, 2), (1, 3), (2, 4), (1, 2), (5, 6), (5, 7)])
    bc = get_measure("betweenness")
    v = check_structural_consistency(bc, g)
    assert v.violated
    assert (v.witness.nodes["u"], v.witness.nodes["v"]) == (0, 5)
    assert verify_witness(bc, v.witness)


def test_ec_structural_consistency_holds():
    m = cached_measure(get_measure("eigenvector"))
    for g in _all_graphs(5):
        assert not check_structural_consistency(m, g).violated


def test_uniform_structural_consistency_vacuous():
    m = cached_measure(get_measure("uniform"))
    for g in _all_graphs(5):
        v = check_structural_consistency(m, g)
        assert v.satisfied and v.vacuous


@given(graphs(max_n=6))
def test_vacuity_characterisation(g):
    dc = get_measure("degree")
    iso = any(not a for a in g.adjacency)
    assert check_isolated_minima(dc, g).vacuous == (not iso)
    assert check_edge_monotonicity(dc, g).vacuous == (not g.non_edges())
    f = dc(g)
    fires = any(
        _naive.injection_exists([f[w] for w in g.adjacency[u]], [f[w] for w in g.adjacency[v]])
        for u in range(g.n)
        for v in range(g.n)
        if u != v and g.adjacency[v] and len(g.adjacency[u]) >= len(g.adjacency[v])
    )
    assert check_structural_consistency(dc, g).vacuous == (not fires)


@given(graphs(max_n=6))
def test_every_witness_replays(g):
    config = CheckConfig(a1_trials=3)
    for m in measure_registry():
        for ax in Axiom:
            v = check_axiom(m, ax, g, config)
            assert v.violated == (v.witness is not None)
            assert not (v.vacuous and v.violated)
            if v.witness is not None:
                assert verify_witness(m, v.witness)


def test_tampered_witness_fails():
    bc = get_measure("betweenness")
    v = check_edge_monotonicity(bc, Graph(4, [(0, 2), (1, 2), (2, 3)]), edges=[(0, 1)])
    from dataclasses import replace

    bad = replace(v.witness, values={**v.witness.values, "F_u(G)": F(7)})
    assert not verify_witness(bc, bad)


@pytest.mark.parametrize("ax", list(Axiom))
@pytest.mark.parametrize("name", ["uniform", "betweenness", "eigenvector", "decaying_degree"])
def test_checker_matches_naive_n4(name, ax):
    m = cached_measure(get_measure(name))
    config = CheckConfig(a1_exhaustive=True)
    oracle = _naive.ORACLES[int(ax)]
    for g in _all_graphs(4):
        v = check_axiom(m, ax, g, config)
        assert (v.violated, v.vacuous) == oracle(m, g)


def test_suite_rows():
    graphs_ = list(_all_graphs(5))
    config = CheckConfig(a1_exhaustive=True)
    dc = run_axiom_suite(cached_measure(get_measure("degree")), graphs_, config)
    assert [not dc[ax].violated for ax in Axiom] == [True, True, True, True, False, False]
    ec = run_axiom_suite(cached_measure(get_measure("eigenvector")), graphs_, config)
    assert [not ec[ax].violated for ax in Axiom] == [True, False, True, False, False, True]


def test_suite_empty_stream():
    res = run_axiom_suite(get_measure("degree"), [])
    assert all(r.status is Status.SATISFIED and r.all_vacuous and r.graphs_checked == 0 for r in res.values())


def test_suite_first_witness_and_counting():
    m = get_measure("uniform")
    graphs_ = [Graph(2, [(0, 1)]), Graph(3), Graph(3, [(0, 1)])]
    res = run_axiom_suite(m, graphs_, axioms=[3])
    r = res[Axiom.ISOLATED_MINIMA]
    assert r.witness_index == 1 and r.graphs_checked == 2
    res = run_axiom_suite(m, graphs_, axioms=[3], count_all=True)
    r = res[Axiom.ISOLATED_MINIMA]
    assert r.witness_index == 1 and r.graphs_checked == 3 and r.violation_count == 2 and r.vacuous_count == 1


def test_verdict_json():
    v = check_edge_monotonicity(get_measure("betweenness"), Graph(4, [(0, 2), (1, 2), (2, 3)]), edges=[(0, 1)])
    j = v.to_json()
    assert j["status"] == "violated" and j["axiom"] == 4
    assert j["witness"]["graph"] == {"n": 4, "edges": [[0, 2], [1, 2], [2, 3]]}
    assert j["witness"]["values"]["F_u(G)"] == "0"


def test_a1_exhaustive_subsumes_random():
    m = get_measure("closeness")
    for g in _all_graphs(4):
        if not check_isomorphic_invariance(m, g, exhaustive=True).violated:
            assert not check_isomorphic_invariance(m, g, trials=5).violated

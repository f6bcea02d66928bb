from fractions import Fraction as F

import pytest

from centrality_lab.axioms import check_edge_monotonicity, format_value
from centrality_lab.fixtures import paper_fixture
from centrality_lab.graph import Graph
from centrality_lab.measures import get_measure, measure_registry
from centrality_lab.report import render_centralities, render_fixture_list, render_report, render_verdicts
from centrality_lab.search import SearchBudget, build_satisfiability_matrix


def test_format_value():
    assert format_value(F(37, 6)) == "37/6"
    assert format_value(F(4)) == "4"
    assert format_value(F(37, 6), decimal=3) == "6.167"
    assert format_value(0.5) == "0.5"


def test_centralities_plain_fractions():
    fx = paper_fixture("wdc-structural")
    v = get_measure("weighted_degree")(fx.graph)
    text = render_centralities(fx.graph, [v], labels=[fx.label(u) for u in range(fx.graph.n)])
    assert "37/6" in text and "20/3" in text
    assert "6.167" in render_centralities(fx.graph, [v], decimal=3)


def test_centralities_markdown(star5):
    text = render_centralities(star5, [m(star5) for m in measure_registry()[:2]], "markdown")
    assert text.splitlines()[0] == "| node | uniform | degree |"


def test_single_verdict_block():
    v = check_edge_monotonicity(get_measure("betweenness"), Graph(4, [(0, 2), (1, 2), (2, 3)]), edges=[(0, 1)])
    lines = render_verdicts([v]).splitlines()
    assert lines[0] == "betweenness A4 Edge Monotonicity: violated"
    assert any(l.strip().startswith("added edge:") for l in lines[1:])
    assert render_report(v) == render_verdicts([v])


def test_deterministic(star5):
    vs = [m(star5) for m in measure_registry()]
    assert render_centralities(star5, vs, "json") == render_centralities(star5, vs, "json")


def test_matrix_markdown_order():
    mx = build_satisfiability_matrix(SearchBudget(n_max=3), jobs=1, measures=["uniform", "degree", "decaying_degree"])
    md = render_report(mx, "markdown")
    rows = [l.split("|")[1].strip() for l in md.splitlines() if l.startswith("| ") and not l.startswith("| Measure")]
    assert rows == ["UC", "DC", "DDC"]
    assert "✗" in md and "✓" in md


def test_fixture_list():
    assert "ddc-structural" in render_fixture_list()


def test_render_errors(star5):
    with pytest.raises(ValueError):
        render_report([], "xml")
    with pytest.raises(ValueError):
        render_report(get_measure("degree")(star5))
    with pytest.raises(TypeError):
        render_report(object())

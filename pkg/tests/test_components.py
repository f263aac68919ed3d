import networkx as nx
import pytest

from goldgraph.components import (
    ComponentClass,
    census,
    census_text,
    classify_components,
    condensation_arcs_count,
    condensation_map,
    eac_vertex_sets,
    strongly_connected_components,
    weakly_connected_component_count,
)
from goldgraph.gfg import build_gfg


def _nx_graph(g):
    dg = nx.DiGraph()
    dg.add_nodes_from(g.vertices)
    dg.add_edges_from(g.weights)
    return dg


@pytest.mark.parametrize("n", [10, 48, 128, 1000, 1928])
def test_sccs_match_networkx(table_2k, n):
    g = build_gfg(n, table_2k)
    d = strongly_connected_components(g)
    ours = {frozenset(g.vertices[i] for i in m) for m in d.scc_members}
    theirs = {frozenset(c) for c in nx.strongly_connected_components(_nx_graph(g))}
    assert ours == theirs


def test_condensation_is_acyclic_and_deduplicated(table_2k):
    g = build_gfg(1928, table_2k)
    d = strongly_connected_components(g)
    dg = nx.DiGraph()
    dg.add_nodes_from(range(d.scc_count))
    for u, outs in enumerate(d.condensation):
        assert len(outs) == len(set(outs))
        assert u not in outs
        dg.add_edges_from((u, w) for w in outs)
    assert nx.is_directed_acyclic_graph(dg)
    assert condensation_arcs_count(d) == dg.number_of_edges()


def test_topo_order_is_topological(table_2k):
    g = build_gfg(500, table_2k)
    d = strongly_connected_components(g)
    position = {scc: i for i, scc in enumerate(d.topo_order)}
    for u, outs in enumerate(d.condensation):
        for w in outs:
            assert position[u] < position[w]


def test_f128_classification(table_2k):
    g = build_gfg(128, table_2k)
    d = strongly_connected_components(g)
    c = classify_components(g, d)
    gacs = c.scc_ids_of(ComponentClass.GAC)
    assert len(gacs) == 3
    assert sum(1 for i in gacs if c.gac_connected[i]) == 1
    assert sum(1 for i in gacs if not c.gac_connected[i]) == 2
    assert not c.scc_ids_of(ComponentClass.TAC)
    eacs = eac_vertex_sets(g, d, c)
    assert eacs == [{3, 5, 7, 11, 13, 23, 29, 41}]


def test_tac_detection(table_2k):
    # 12 - 3 = 3**2 makes vertex 3 a trivial isolated component
    g = build_gfg(12, table_2k)
    d = strongly_connected_components(g)
    c = classify_components(g, d)
    tacs = c.scc_ids_of(ComponentClass.TAC)
    assert len(tacs) == 1
    assert {g.vertices[i] for i in d.scc_members[tacs[0]]} == {3}


def test_gac_singleton(table_2k):
    # 14 = 7 + 7: the partition component has a single vertex
    g = build_gfg(14, table_2k)
    d = strongly_connected_components(g)
    c = classify_components(g, d)
    gac_sets = [
        {g.vertices[i] for i in d.scc_members[s]}
        for s in c.scc_ids_of(ComponentClass.GAC)
    ]
    assert {7} in gac_sets
    assert {3, 11} in gac_sets


def test_weak_components(table_2k):
    g = build_gfg(128, table_2k)
    assert weakly_connected_component_count(g) == 3


def test_condensation_map_cells_cover_all_vertices(table_2k):
    g = build_gfg(128, table_2k)
    d = strongly_connected_components(g)
    cmap = condensation_map(g, d, classify_components(g, d))
    assert set(cmap.cell_of) == set(g.vertices)
    cells = census(cmap, d, g)
    assert cells[("SOURCE", "EXCEPTIONAL")] == {8: 1}
    assert cells[("SOURCE", "GOLDBACH")] == {2: 3}
    assert sum(a * b for c in cells.values() for b, a in c.items()) == g.vertex_count


def test_census_text_shape(table_2k):
    g = build_gfg(128, table_2k)
    d = strongly_connected_components(g)
    cmap = condensation_map(g, d, classify_components(g, d))
    text = census_text(census(cmap, d, g))
    lines = text.splitlines()
    assert len(lines) == 5
    assert "GOLDBACH" in lines[0] and "EXCEPTIONAL" in lines[0]
    assert "1 x 8" in text


def test_no_eac_below_128(table_2k):
    for n in range(4, 128, 2):
        g = build_gfg(n, table_2k)
        d = strongly_connected_components(g)
        assert not eac_vertex_sets(g, d, classify_components(g, d))

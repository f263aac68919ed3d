import pytest

from goldgraph.components import (
    classify_components,
    condensation_map,
    eac_vertex_sets,
    strongly_connected_components,
)
from goldgraph.drawing import (
    GridLayout,
    count_segment_crossings,
    crossing_upper_bound,
    euler_bound_nonplanar,
    export_dot,
    is_planar,
)
from goldgraph.errors import DomainError, ResourceLimitError
from goldgraph.gfg import build_gfg, induced_subgraph


def _eac(table, n):
    g = build_gfg(n, table)
    d = strongly_connected_components(g)
    return induced_subgraph(g, eac_vertex_sets(g, d, classify_components(g, d))[0])


def test_planarity_of_known_components(table_10k):
    planar = {128: True, 1718: False, 1862: False, 1928: False, 2200: True, 6142: False}
    for n, expected in planar.items():
        assert is_planar(_eac(table_10k, n)) == expected, f"n={n}"


def test_euler_bound_is_sound(table_10k):
    for n in (128, 1718, 1862, 1928, 2200, 6142):
        sub = _eac(table_10k, n)
        if euler_bound_nonplanar(sub):
            assert not is_planar(sub)


def test_count_crossings_direct():
    from goldgraph.gfg import Gfg
    # two diagonals of a unit square cross once; laid out on a line they do not
    g = Gfg(
        n=0,
        vertices=(1, 2, 3, 4),
        index_of={1: 0, 2: 1, 3: 2, 4: 3},
        successors=((1,), (0,), (3,), (2,)),
        predecessors=((1,), (0,), (3,), (2,)),
        weights={(1, 2): 1, (2, 1): 1, (3, 4): 1, (4, 3): 1},
    )
    crossing = GridLayout(
        grid_width=2, grid_height=2,
        position={1: (0, 0), 2: (1, 1), 3: (1, 0), 4: (0, 1)},
        crossings=1,
    )
    flat = GridLayout(
        grid_width=4, grid_height=2,
        position={1: (0, 0), 2: (1, 0), 3: (2, 0), 4: (3, 0)},
        crossings=0,
    )
    assert count_segment_crossings(crossing, g) == 1
    assert count_segment_crossings(flat, g) == 0


def test_count_crossings_rejects_coincident_positions(table_2k):
    g = _eac(table_2k, 128)
    layout = GridLayout(
        grid_width=3, grid_height=3,
        position={v: (0, 0) for v in g.vertices},
        crossings=0,
    )
    with pytest.raises(DomainError):
        count_segment_crossings(layout, g)


def test_crossing_bound_deterministic(table_2k):
    sub = _eac(table_2k, 128)
    a = crossing_upper_bound(sub, budget=30_000, seed=7)
    b = crossing_upper_bound(sub, budget=30_000, seed=7)
    assert a[0] == b[0]
    assert a[1].dump() == b[1].dump()


def test_crossing_bound_recount_agrees(table_2k):
    sub = _eac(table_2k, 128)
    crossings, layout = crossing_upper_bound(sub, budget=30_000, seed=3)
    assert layout.crossings == crossings
    assert count_segment_crossings(layout, sub) == crossings


def test_crossing_bound_vertex_cap(table_10k):
    g = build_gfg(1000, table_10k)
    with pytest.raises(ResourceLimitError):
        crossing_upper_bound(g, budget=1000, seed=1)


def test_layout_dump_format(table_2k):
    sub = _eac(table_2k, 128)
    crossings, layout = crossing_upper_bound(sub, budget=30_000, seed=1)
    lines = layout.dump().splitlines()
    assert lines[-1] == f"crossings={crossings}"
    assert len(lines) == sub.vertex_count + 1


def test_export_dot(table_2k):
    g = build_gfg(128, table_2k)
    dot = export_dot(g)
    assert dot.startswith("digraph")
    assert '"19" -> "109"' in dot or '"109" -> "19"' in dot
    # weight-1 arcs carry no label; higher weights do
    assert "label" in dot


def test_export_dot_with_clusters(table_2k):
    g = build_gfg(128, table_2k)
    d = strongly_connected_components(g)
    cmap = condensation_map(g, d, classify_components(g, d))
    dot = export_dot(g, cmap)
    assert "subgraph" in dot

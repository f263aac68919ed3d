"""Planarity, crossing-number upper bounds, and DOT export.

Crossing bounds come from a seeded simulated-annealing search over
straight-line drawings on a small integer grid.  Antiparallel arc pairs
are drawn as one segment and loops are ignored; a returned layout never
lets a segment pass through a third vertex's grid node, so its crossing
count is a valid upper bound on the crossing number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import networkx as nx
import numpy as np
from numba import njit

from .components import CondensationMap
from .errors import DomainError, ResourceLimitError
from .gfg import Gfg

DEFAULT_BUDGET = 6_000_000  # total annealing moves across restarts
MOVES_PER_RESTART = 500_000


@dataclass(frozen=True)
class GridLayout:
    grid_width: int
    grid_height: int
    position: dict[int, tuple[int, int]]  # vertex -> (x, y), pairwise distinct
    crossings: int

    def dump(self) -> str:
        lines = [f"{v} {x} {y}" for v, (x, y) in sorted(self.position.items())]
        lines.append(f"crossings={self.crossings}")
        return "\n".join(lines)


def _undirected_edges(gfg: Gfg) -> list[tuple[int, int]]:
    """Loop-free undirected edge list with antiparallel arcs merged."""
    return sorted({(min(s, t), max(s, t)) for (s, t) in gfg.weights if s != t})


def is_planar(gfg: Gfg) -> bool:
    """Planarity of the underlying simple undirected graph."""
    g = nx.Graph()
    g.add_nodes_from(gfg.vertices)
    g.add_edges_from(_undirected_edges(gfg))
    planar, _ = nx.check_planarity(g)
    return planar


def euler_bound_nonplanar(gfg: Gfg) -> bool:
    """Edge-count prefilter: more than 3|V| - 6 edges forces non-planarity."""
    v = gfg.vertex_count
    return v >= 3 and len(_undirected_edges(gfg)) > 3 * v - 6


@njit(cache=True)
def _segments_cross(ax, ay, bx, by, cx, cy, dx, dy):  # pragma: no cover
    d1 = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    d2 = (bx - ax) * (dy - ay) - (by - ay) * (dx - ax)
    d3 = (dx - cx) * (ay - cy) - (dy - cy) * (ax - cx)
    d4 = (dx - cx) * (by - cy) - (dy - cy) * (bx - cx)
    return (d1 > 0) != (d2 > 0) and d1 != 0 and d2 != 0 and \
        (d3 > 0) != (d4 > 0) and d3 != 0 and d4 != 0


@njit(cache=True)
def _on_segment(ax, ay, bx, by, wx, wy):  # pragma: no cover
    if (bx - ax) * (wy - ay) - (by - ay) * (wx - ax) != 0:
        return False
    return min(ax, bx) <= wx <= max(ax, bx) and min(ay, by) <= wy <= max(ay, by)


@njit(cache=True)
def _layout_cost(pos, edges):  # pragma: no cover
    """(crossings, vertex-on-segment violations) of a full layout."""
    m = len(edges)
    n = len(pos)
    crossings = 0
    for i in range(m):
        a, b = edges[i, 0], edges[i, 1]
        for j in range(i + 1, m):
            c, d = edges[j, 0], edges[j, 1]
            if a == c or a == d or b == c or b == d:
                continue
            if _segments_cross(
                pos[a, 0], pos[a, 1], pos[b, 0], pos[b, 1],
                pos[c, 0], pos[c, 1], pos[d, 0], pos[d, 1],
            ):
                crossings += 1
    violations = 0
    for i in range(m):
        a, b = edges[i, 0], edges[i, 1]
        for w in range(n):
            if w != a and w != b and _on_segment(
                pos[a, 0], pos[a, 1], pos[b, 0], pos[b, 1], pos[w, 0], pos[w, 1]
            ):
                violations += 1
    return crossings, violations


@njit(cache=True)
def _partial_cost(pos, edges, affected, moved):  # pragma: no cover
    """Crossings/violations of the pairs touched by moving the given vertices.

    Counts every edge pair with at least one affected edge (once), plus
    vertex-on-segment incidences where the edge is affected or the
    interior vertex moved.
    """
    m = len(edges)
    n = len(pos)
    crossings = 0
    violations = 0
    for i in range(m):
        if not affected[i]:
            continue
        a, b = edges[i, 0], edges[i, 1]
        for j in range(m):
            if j == i or (affected[j] and j < i):
                continue
            c, d = edges[j, 0], edges[j, 1]
            if a == c or a == d or b == c or b == d:
                continue
            if _segments_cross(
                pos[a, 0], pos[a, 1], pos[b, 0], pos[b, 1],
                pos[c, 0], pos[c, 1], pos[d, 0], pos[d, 1],
            ):
                crossings += 1
        for w in range(n):
            if w != a and w != b and _on_segment(
                pos[a, 0], pos[a, 1], pos[b, 0], pos[b, 1], pos[w, 0], pos[w, 1]
            ):
                violations += 1
    for i in range(m):
        if affected[i]:
            continue
        a, b = edges[i, 0], edges[i, 1]
        for k in range(len(moved)):
            w = moved[k]
            if w != a and w != b and _on_segment(
                pos[a, 0], pos[a, 1], pos[b, 0], pos[b, 1], pos[w, 0], pos[w, 1]
            ):
                violations += 1
    return crossings, violations


@njit(cache=True)
def _anneal(n, edges, grid_w, grid_h, moves, seed, t_start, cooling):  # pragma: no cover
    """One seeded annealing run; returns (best feasible crossings, best positions)."""
    np.random.seed(seed)
    m = len(edges)
    cells = grid_w * grid_h
    occupied = np.full(cells, -1, dtype=np.int64)
    pos = np.empty((n, 2), dtype=np.int64)
    perm = np.random.permutation(cells)
    for v in range(n):
        c = perm[v]
        occupied[c] = v
        pos[v, 0] = c % grid_w
        pos[v, 1] = c // grid_w

    crossings, violations = _layout_cost(pos, edges)
    cost = crossings + 100 * violations
    infeasible = np.int64(2**62)
    best_cross = crossings if violations == 0 else infeasible
    best_pos = pos.copy()
    affected = np.zeros(m, dtype=np.bool_)
    moved = np.empty(2, dtype=np.int64)
    temp = t_start
    reheat_every = max(moves // 4, 1)

    for step in range(moves):
        v = np.random.randint(0, n)
        old_x, old_y = pos[v, 0], pos[v, 1]
        if np.random.random() < 0.6:
            # local move: a cell within a small box around v
            tx = min(max(old_x + np.random.randint(-3, 4), 0), grid_w - 1)
            ty = min(max(old_y + np.random.randint(-3, 4), 0), grid_h - 1)
            target = ty * grid_w + tx
        else:
            target = np.random.randint(0, cells)
        other = occupied[target]
        if other == v:
            continue
        old_cell = old_y * grid_w + old_x

        n_moved = 1 if other < 0 else 2
        moved[0] = v
        if other >= 0:
            moved[1] = other
        for i in range(m):
            a, b = edges[i, 0], edges[i, 1]
            affected[i] = (
                a == v or b == v or (other >= 0 and (a == other or b == other))
            )

        old_c, old_v = _partial_cost(pos, edges, affected, moved[:n_moved])
        pos[v, 0] = target % grid_w
        pos[v, 1] = target // grid_w
        if other >= 0:
            pos[other, 0] = old_x
            pos[other, 1] = old_y
        new_c, new_v = _partial_cost(pos, edges, affected, moved[:n_moved])
        delta = (new_c - old_c) + 100 * (new_v - old_v)

        if delta <= 0 or np.random.random() < np.exp(-delta / temp):
            crossings += new_c - old_c
            violations += new_v - old_v
            occupied[target] = v
            occupied[old_cell] = other if other >= 0 else -1
            if violations == 0 and crossings < best_cross:
                best_cross = crossings
                best_pos = pos.copy()
                if best_cross == 0:
                    break
        else:
            pos[v, 0] = old_x
            pos[v, 1] = old_y
            if other >= 0:
                pos[other, 0] = target % grid_w
                pos[other, 1] = target // grid_w
        temp *= cooling
        if temp < 1e-2:
            temp = 1e-2
        if (step + 1) % reheat_every == 0:
            temp = t_start * 0.5
    return best_cross, best_pos


def crossing_upper_bound(
    gfg: Gfg,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    grid_side: int | None = None,
) -> tuple[int, GridLayout]:
    """Best crossing count found by seeded annealing, with its layout.

    Deterministic for a fixed seed.  The reported bound always equals an
    independent recount of the returned layout.
    """
    vertices = list(gfg.vertices)
    n = len(vertices)
    if n > 64:
        raise ResourceLimitError(f"layout search capped at 64 vertices, got {n}")
    idx = {v: i for i, v in enumerate(vertices)}
    edge_pairs = _undirected_edges(gfg)
    edges = np.array(
        [[idx[a], idx[b]] for a, b in edge_pairs], dtype=np.int64
    ).reshape(len(edge_pairs), 2)
    side = grid_side or max(2, math.ceil(2 * math.sqrt(max(n, 1))))

    restarts = max(1, budget // MOVES_PER_RESTART)
    moves = min(budget, MOVES_PER_RESTART)
    best_cross = None
    best_pos = None
    for r in range(restarts):
        cross, pos = _anneal(
            n, edges, side, side, moves, (seed * 100_003 + r) % 2**31,
            t_start=8.0, cooling=0.9997,
        )
        if cross < 2**62 and (best_cross is None or cross < best_cross):
            best_cross, best_pos = int(cross), pos
            if best_cross == 0:
                break
    if best_cross is None:
        raise ResourceLimitError("no violation-free layout found within budget")

    position = {v: (int(best_pos[i, 0]), int(best_pos[i, 1])) for v, i in idx.items()}
    layout = GridLayout(
        grid_width=side, grid_height=side, position=position, crossings=best_cross
    )
    recount = count_segment_crossings(layout, gfg)
    assert recount == best_cross, (recount, best_cross)
    return best_cross, layout


def count_segment_crossings(layout: GridLayout, gfg: Gfg) -> int:
    """Independent recount of proper segment crossings in a layout.

    Shared endpoints never count; antiparallel arcs are one segment.
    """
    seen = set()
    for v, p in layout.position.items():
        if p in seen:
            raise DomainError(f"coincident positions at {p}")
        seen.add(p)

    def orient(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    edges = _undirected_edges(gfg)
    count = 0
    for i in range(len(edges)):
        a, b = edges[i]
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if len({a, b, c, d}) < 4:
                continue
            pa, pb = layout.position[a], layout.position[b]
            pc, pd = layout.position[c], layout.position[d]
            d1, d2 = orient(pa, pb, pc), orient(pa, pb, pd)
            d3, d4 = orient(pc, pd, pa), orient(pc, pd, pb)
            if d1 * d2 < 0 and d3 * d4 < 0:
                count += 1
    return count


def export_dot(gfg: Gfg, cmap: CondensationMap | None = None) -> str:
    """Graphviz DOT text; weight-1 labels omitted, optional cell clusters."""
    lines = [f"digraph F{gfg.n} {{"]
    if cmap is None:
        for v in gfg.vertices:
            lines.append(f'  "{v}";')
    else:
        groups: dict[tuple[str, str], list[int]] = {}
        for v in gfg.vertices:
            groups.setdefault(cmap.cell_of[v], []).append(v)
        for k, (cell, members) in enumerate(sorted(groups.items())):
            lines.append(f"  subgraph cluster_{k} {{")
            lines.append(f'    label="{cell[0]}-{cell[1]}";')
            for v in members:
                lines.append(f'    "{v}";')
            lines.append("  }")
    for (s, t), w in sorted(gfg.weights.items()):
        if w > 1:
            lines.append(f'  "{s}" -> "{t}" [label="{w}"];')
        else:
            lines.append(f'  "{s}" -> "{t}";')
    lines.append("}")
    return "\n".join(lines) + "\n"

"""SCC decomposition, autonomous-component classification, condensation map.

Source SCCs of a factorization graph are exactly its autonomous
components; they split into Goldbach components (partition pairs or a
halved n), trivial isolated power vertices, and the exceptional ones
that are neither.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .gfg import Gfg
from .primes import prime_power_exponent


class ComponentClass(Enum):
    TAC = "TAC"
    GAC = "GAC"
    EAC = "EAC"
    ORDINARY = "ORDINARY"


ROWS = ("SOURCE", "INNER", "SINK")
COLUMNS = ("GOLDBACH", "HYBRID", "EXCEPTIONAL")


@dataclass(frozen=True)
class SccDecomposition:
    """SCC partition plus its condensation DAG.

    SCC ids are assigned in reverse topological completion order and
    ``topo_order`` lists them so that every arc of ``condensation`` goes
    from an earlier to a later entry.
    """

    scc_of: tuple[int, ...]  # dense vertex index -> SCC id
    scc_members: tuple[tuple[int, ...], ...]  # SCC id -> dense vertex indices
    condensation: tuple[tuple[int, ...], ...]  # SCC id -> successor SCC ids, dedup
    condensation_preds: tuple[tuple[int, ...], ...]
    topo_order: tuple[int, ...]

    @property
    def scc_count(self) -> int:
        return len(self.scc_members)


@dataclass(frozen=True)
class Classification:
    """Per-SCC class, with the connectivity split for Goldbach components."""

    class_of: tuple[ComponentClass, ...]  # SCC id -> class
    gac_connected: tuple[bool, ...]  # only meaningful where class is GAC

    def scc_ids_of(self, cls: ComponentClass) -> list[int]:
        return [i for i, c in enumerate(self.class_of) if c is cls]


@dataclass(frozen=True)
class CondensationMap:
    """Vertex -> (row, column) cell assignment over the 3x3 map."""

    cell_of: dict[int, tuple[str, str]]  # prime value -> (row, column)


def strongly_connected_components(gfg: Gfg) -> SccDecomposition:
    """Iterative Tarjan over the dense successor lists."""
    n = gfg.vertex_count
    succ = gfg.successors
    index = [-1] * n
    lowlink = [0] * n
    on_stack = [False] * n
    scc_of = [-1] * n
    stack: list[int] = []
    members: list[list[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        # explicit DFS stack of (vertex, next child position)
        work = [(root, 0)]
        while work:
            v, ci = work[-1]
            if ci == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for j in range(ci, len(succ[v])):
                w = succ[v][j]
                if index[w] == -1:
                    work[-1] = (v, j + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    scc_of[w] = len(members)
                    comp.append(w)
                    if w == v:
                        break
                members.append(comp)

    n_scc = len(members)
    succ_sets: list[set[int]] = [set() for _ in range(n_scc)]
    pred_sets: list[set[int]] = [set() for _ in range(n_scc)]
    for v in range(n):
        a = scc_of[v]
        for w in succ[v]:
            b = scc_of[w]
            if a != b:
                succ_sets[a].add(b)
                pred_sets[b].add(a)

    # Tarjan emits SCCs in reverse topological order
    topo = tuple(range(n_scc - 1, -1, -1))
    return SccDecomposition(
        scc_of=tuple(scc_of),
        scc_members=tuple(tuple(sorted(m)) for m in members),
        condensation=tuple(tuple(sorted(s)) for s in succ_sets),
        condensation_preds=tuple(tuple(sorted(p)) for p in pred_sets),
        topo_order=topo,
    )


def condensation_arcs_count(decomposition: SccDecomposition) -> int:
    """Deduplicated inter-SCC arc count (loops never contribute)."""
    return sum(len(s) for s in decomposition.condensation)


def classify_components(gfg: Gfg, decomposition: SccDecomposition) -> Classification:
    """Classify every SCC as TAC, GAC, EAC, or ordinary (non-source)."""
    n = gfg.n
    classes: list[ComponentClass] = []
    connected: list[bool] = []
    for scc_id, members in enumerate(decomposition.scc_members):
        is_source = len(decomposition.condensation_preds[scc_id]) == 0
        has_out = len(decomposition.condensation[scc_id]) > 0
        if not is_source:
            classes.append(ComponentClass.ORDINARY)
            connected.append(True)
            continue
        primes = [gfg.vertices[i] for i in members]
        if len(primes) == 1:
            v = primes[0]
            if 2 * v == n:
                classes.append(ComponentClass.GAC)
            elif (e := prime_power_exponent(n - v, v)) is not None and e >= 2:
                classes.append(ComponentClass.TAC)
            else:
                # cannot occur in a full graph; kept for induced subgraphs
                classes.append(ComponentClass.EAC)
        elif len(primes) == 2 and sum(primes) == n:
            classes.append(ComponentClass.GAC)
        else:
            classes.append(ComponentClass.EAC)
        connected.append(has_out)
    return Classification(class_of=tuple(classes), gac_connected=tuple(connected))


def _reachable_sccs(decomposition: SccDecomposition, seeds: list[int]) -> set[int]:
    """Forward closure over the condensation DAG, seeds included."""
    seen = set(seeds)
    stack = list(seeds)
    while stack:
        cur = stack.pop()
        for nxt in decomposition.condensation[cur]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def condensation_map(
    gfg: Gfg, decomposition: SccDecomposition, classes: Classification
) -> CondensationMap:
    """Assign every vertex to a (row, column) cell.

    Rows follow the condensation shape (disconnected SCCs count as
    sources); columns follow reachability from Goldbach and exceptional
    components.
    """
    from_gac = _reachable_sccs(decomposition, classes.scc_ids_of(ComponentClass.GAC))
    from_eac = _reachable_sccs(decomposition, classes.scc_ids_of(ComponentClass.EAC))

    cell_of: dict[int, tuple[str, str]] = {}
    for scc_id, members in enumerate(decomposition.scc_members):
        no_in = len(decomposition.condensation_preds[scc_id]) == 0
        no_out = len(decomposition.condensation[scc_id]) == 0
        if no_in:
            row = "SOURCE"  # includes disconnected SCCs
        elif no_out:
            row = "SINK"
        else:
            row = "INNER"
        is_tac = classes.class_of[scc_id] is ComponentClass.TAC
        if not is_tac and scc_id not in from_eac:
            col = "GOLDBACH"
        elif not is_tac and scc_id not in from_gac:
            col = "EXCEPTIONAL"
        else:
            col = "HYBRID"
        for i in members:
            cell_of[gfg.vertices[i]] = (row, col)
    return CondensationMap(cell_of=cell_of)


def census(
    cmap: CondensationMap, decomposition: SccDecomposition, gfg: Gfg
) -> dict[tuple[str, str], Counter]:
    """Per-cell multiset {SCC size beta: count alpha} (the "alpha x beta" data)."""
    out: dict[tuple[str, str], Counter] = {
        (r, c): Counter() for r in ROWS for c in COLUMNS
    }
    for members in decomposition.scc_members:
        cell = cmap.cell_of[gfg.vertices[members[0]]]
        out[cell][len(members)] += 1
    return out


def census_text(cells: dict[tuple[str, str], Counter]) -> str:
    """Render the census as a 3x3 text table with "alpha x beta" entries."""
    body: dict[tuple[str, str], str] = {}
    for cell, counter in cells.items():
        parts = [f"{alpha} x {beta}" for beta, alpha in sorted(counter.items(), reverse=True)]
        body[cell] = ", ".join(parts) if parts else "-"
    width = max(len(v) for v in body.values())
    width = max(width, max(len(c) for c in COLUMNS))
    lines = []
    header = " " * 8 + " | ".join(c.ljust(width) for c in COLUMNS)
    lines.append(header)
    lines.append("-" * len(header))
    for r in ROWS:
        row = " | ".join(body[(r, c)].ljust(width) for c in COLUMNS)
        lines.append(f"{r:<8}{row}")
    return "\n".join(lines)


def weakly_connected_component_count(gfg: Gfg) -> int:
    """Number of weakly connected components (arcs taken undirected)."""
    n = gfg.vertex_count
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for v in range(n):
        for w in gfg.successors[v]:
            ra, rb = find(v), find(w)
            if ra != rb:
                parent[ra] = rb
    return len({find(v) for v in range(n)})


def eac_vertex_sets(gfg: Gfg, decomposition: SccDecomposition, classes: Classification
                    ) -> list[set[int]]:
    """Prime-value vertex sets of the exceptional components, if any."""
    return [
        {gfg.vertices[i] for i in decomposition.scc_members[scc_id]}
        for scc_id in classes.scc_ids_of(ComponentClass.EAC)
    ]

"""Exact Hamiltonian enumeration and longest simple directed paths.

All solvers are exhaustive backtracking searches with pruning, so every
result carries a proof of optimality by construction.  The full-graph
longest path is computed by a three-stage decomposition: source strongly
connected components are flattened into equivalent chains, the acyclic
remainder is solved by dynamic programming, and paths through inner
multi-vertex components are recovered on a small contracted weighted
instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .components import SccDecomposition, strongly_connected_components
from .errors import DomainError, ResourceLimitError
from .gfg import Gfg

DEFAULT_VERTEX_CAP = 40


@dataclass(frozen=True)
class PathProblem:
    """A digraph instance for path search; loops are ignored throughout."""

    vertices: tuple[int, ...]
    arcs: frozenset[tuple[int, int]]
    weights: dict[int, int] = field(default_factory=dict)  # vertex -> weight, default 1

    def weight(self, v: int) -> int:
        return self.weights.get(v, 1)

    @staticmethod
    def from_gfg(gfg: Gfg) -> "PathProblem":
        arcs = frozenset((s, t) for (s, t) in gfg.weights if s != t)
        return PathProblem(vertices=gfg.vertices, arcs=arcs)


@dataclass(frozen=True)
class PathResult:
    """Search outcome: best length (in original-vertex units), witnesses, count."""

    length: int
    witnesses: tuple[tuple[int, ...], ...]
    count: int
    optimality_proved: bool


class _Dense:
    """Dense-index view of a PathProblem with loop arcs stripped."""

    def __init__(self, problem: PathProblem):
        self.vertices = list(problem.vertices)
        self.idx = {v: i for i, v in enumerate(self.vertices)}
        n = len(self.vertices)
        self.succ: list[list[int]] = [[] for _ in range(n)]
        self.pred: list[list[int]] = [[] for _ in range(n)]
        for s, t in problem.arcs:
            if s == t:
                continue
            self.succ[self.idx[s]].append(self.idx[t])
            self.pred[self.idx[t]].append(self.idx[s])
        for lst in self.succ:
            lst.sort()
        for lst in self.pred:
            lst.sort()
        self.w = [problem.weight(v) for v in self.vertices]

    def names(self, seq: list[int]) -> tuple[int, ...]:
        return tuple(self.vertices[i] for i in seq)


def _check_cap(problem: PathProblem, cap: int) -> None:
    if len(problem.vertices) > cap:
        raise ResourceLimitError(
            f"instance has {len(problem.vertices)} vertices, cap is {cap}"
        )


def _all_reachable(g: _Dense, start: int, visited: int, targets: list[int]) -> bool:
    """True when every target is reachable from start avoiding visited vertices."""
    need = 0
    for t in targets:
        need |= 1 << t
    seen = 1 << start
    stack = [start]
    while stack and need & ~seen:
        for w in g.succ[stack.pop()]:
            b = 1 << w
            if not (seen | visited) & b:
                seen |= b
                stack.append(w)
    return not (need & ~seen)


def hamiltonian_paths(problem: PathProblem, cap: int = DEFAULT_VERTEX_CAP) -> PathResult:
    """Count and list all directed vertex sequences covering every vertex."""
    _check_cap(problem, cap)
    g = _Dense(problem)
    n = len(g.vertices)
    if n == 0:
        return PathResult(0, (), 0, True)
    witnesses: list[tuple[int, ...]] = []
    path: list[int] = []

    def extend(v: int, visited: int) -> None:
        path.append(v)
        if len(path) == n:
            witnesses.append(g.names(path))
        else:
            rest = [u for u in range(n) if not visited & (1 << u)]
            if _all_reachable(g, v, visited & ~(1 << v), rest):
                for w in g.succ[v]:
                    if not visited & (1 << w):
                        extend(w, visited | (1 << w))
        path.pop()

    for s in range(n):
        extend(s, 1 << s)
    return PathResult(n if witnesses else 0, tuple(witnesses), len(witnesses), True)


def hamiltonian_cycles(problem: PathProblem, cap: int = DEFAULT_VERTEX_CAP) -> PathResult:
    """Directed Hamiltonian cycles up to rotation (minimum vertex pinned first).

    A cycle and its reverse are counted separately when both are arc-valid.
    """
    _check_cap(problem, cap)
    g = _Dense(problem)
    n = len(g.vertices)
    if n < 2:
        return PathResult(0, (), 0, True)
    start = g.idx[min(g.vertices)]
    witnesses: list[tuple[int, ...]] = []
    path = [start]

    def extend(v: int, visited: int) -> None:
        if len(path) == n:
            if start in g.succ[v]:
                witnesses.append(g.names(path))
            return
        rest = [u for u in range(n) if not visited & (1 << u)]
        if not _all_reachable(g, v, visited & ~(1 << v) & ~(1 << start), rest + [start]):
            return
        for w in g.succ[v]:
            if not visited & (1 << w):
                path.append(w)
                extend(w, visited | (1 << w))
                path.pop()

    extend(start, 1 << start)
    return PathResult(n if witnesses else 0, tuple(witnesses), len(witnesses), True)


def longest_path_general(
    problem: PathProblem,
    cap: int = DEFAULT_VERTEX_CAP,
    pin_start: int | None = None,
) -> PathResult:
    """Exact weighted longest simple path by branch and bound.

    The bound at each node is the current weight plus the total weight
    still reachable from the endpoint through unvisited vertices.
    """
    _check_cap(problem, cap)
    g = _Dense(problem)
    n = len(g.vertices)
    if n == 0:
        return PathResult(0, (), 0, True)
    best_len = 0
    best_path: tuple[int, ...] = ()
    path: list[int] = []

    def reachable_weight(v: int, visited: int) -> int:
        seen = 1 << v
        stack = [v]
        total = 0
        while stack:
            for w in g.succ[stack.pop()]:
                b = 1 << w
                if not (seen | visited) & b:
                    seen |= b
                    total += g.w[w]
                    stack.append(w)
        return total

    def extend(v: int, visited: int, length: int) -> None:
        nonlocal best_len, best_path
        path.append(v)
        if length > best_len:
            best_len = length
            best_path = g.names(path)
        if length + reachable_weight(v, visited) > best_len:
            for w in g.succ[v]:
                if not visited & (1 << w):
                    extend(w, visited | (1 << w), length + g.w[w])
        path.pop()

    starts = range(n) if pin_start is None else [g.idx[pin_start]]
    for s in starts:
        extend(s, 1 << s, g.w[s])
    return PathResult(best_len, (best_path,) if best_path else (), 1, True)


def longest_path_dag(problem: PathProblem) -> PathResult:
    """Exact weighted longest path in a DAG by topological dynamic programming."""
    g = _Dense(problem)
    n = len(g.vertices)
    if n == 0:
        return PathResult(0, (), 0, True)
    indeg = [len(p) for p in g.pred]
    order = [v for v in range(n) if indeg[v] == 0]
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        for w in g.succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                order.append(w)
    if len(order) != n:
        raise DomainError("input graph contains a cycle")
    dist = [g.w[v] for v in range(n)]
    back = [-1] * n
    for v in order:
        for w in g.succ[v]:
            if dist[v] + g.w[w] > dist[w]:
                dist[w] = dist[v] + g.w[w]
                back[w] = v
    end = max(range(n), key=lambda v: dist[v])
    seq: list[int] = []
    cur = end
    while cur != -1:
        seq.append(cur)
        cur = back[cur]
    seq.reverse()
    return PathResult(dist[end], (g.names(seq),), 1, True)


def longest_path_condensation(decomposition: SccDecomposition) -> PathResult:
    """Unit-weight longest path over the condensation DAG (in SCC nodes)."""
    arcs = frozenset(
        (a, b) for a, succ in enumerate(decomposition.condensation) for b in succ
    )
    problem = PathProblem(
        vertices=tuple(range(decomposition.scc_count)), arcs=arcs
    )
    return longest_path_dag(problem)


def validate_witness(problem: PathProblem, witness: tuple[int, ...]) -> bool:
    """Independent arc-membership and distinctness check for a vertex sequence."""
    if len(set(witness)) != len(witness):
        return False
    return all((a, b) in problem.arcs for a, b in zip(witness, witness[1:]))


# --- full-graph pipeline ----------------------------------------------------


def longest_path_gfg(gfg: Gfg, scc_cap: int = DEFAULT_VERTEX_CAP) -> PathResult:
    """Exact longest simple path in a full factorization graph.

    Source multi-vertex SCCs are replaced by chains carrying their best
    intra-component subpaths, the acyclic remainder is solved directly,
    and routes through inner multi-vertex SCCs are solved on a contracted
    weighted instance.  The result is counted in vertices.
    """
    decomposition = strongly_connected_components(gfg)
    n = gfg.vertex_count
    succ = [
        sorted(w for w in gfg.successors[v] if w != v) for v in range(n)
    ]

    source_mv: list[int] = []
    inner_mv: list[int] = []
    for scc_id, members in enumerate(decomposition.scc_members):
        if len(members) < 2:
            continue
        if len(decomposition.condensation_preds[scc_id]) == 0:
            source_mv.append(scc_id)
        else:
            inner_mv.append(scc_id)

    # working graph: original vertices keep ids 0..n-1, chain vertices appended
    next_id = n
    b_succ: dict[int, list[int]] = {}
    removed: set[int] = set()
    # chain vertex -> (suffix of real intra-SCC path it stands for)
    chain_expansion: dict[int, tuple[int, ...]] = {}

    for scc_id in source_mv:
        members = decomposition.scc_members[scc_id]
        if len(members) > scc_cap:
            raise ResourceLimitError(
                f"source SCC {scc_id} has {len(members)} vertices, cap is {scc_cap}"
            )
        member_set = set(members)
        removed |= member_set
        rev_arcs = frozenset(
            (b, a)
            for a in members
            for b in succ[a]
            if b in member_set
        )
        sub = PathProblem(vertices=tuple(members), arcs=rev_arcs)
        for v in members:
            # longest intra-SCC path ending at v: pin v in the reversed graph
            res = longest_path_general(sub, cap=scc_cap, pin_start=v)
            intra = tuple(reversed(res.witnesses[0]))
            external = [w for w in succ[v] if w not in member_set]
            prev = None
            ids = []
            for _ in range(len(intra)):
                ids.append(next_id)
                next_id += 1
            for k, cid in enumerate(ids):
                b_succ[cid] = [ids[k + 1]] if k + 1 < len(ids) else list(external)
                chain_expansion[cid] = intra[k:]

    inner_vertices: set[int] = set()
    for scc_id in inner_mv:
        inner_vertices |= set(decomposition.scc_members[scc_id])

    for v in range(n):
        if v not in removed:
            b_succ[v] = [w for w in succ[v] if w not in removed]

    # T2: acyclic remainder without inner multi-vertex SCC vertices
    c_vertices = [v for v in b_succ if v not in inner_vertices]
    c_arcs = frozenset(
        (v, w) for v in c_vertices for w in b_succ[v] if w not in inner_vertices
    )
    if c_vertices:
        lc = longest_path_dag(PathProblem(vertices=tuple(c_vertices), arcs=c_arcs))
    else:
        lc = PathResult(0, (), 0, True)

    best = lc
    if inner_vertices:
        ld = _solve_through_inner(b_succ, inner_vertices, c_vertices, c_arcs)
        if ld.length > best.length:
            best = ld

    witness = _expand_witness(best.witnesses[0], chain_expansion) if best.witnesses else ()
    primes = tuple(gfg.vertices[i] for i in witness)
    return PathResult(best.length, (primes,) if primes else (), 1, True)


def _expand_witness(
    seq: tuple[int, ...], chain_expansion: dict[int, tuple[int, ...]]
) -> tuple[int, ...]:
    """Replace chain vertices by the real subpaths they stand for."""
    out: list[int] = []
    i = 0
    while i < len(seq):
        x = seq[i]
        if x in chain_expansion:
            # consume the maximal run of consecutive chain vertices; the run
            # always ends at the chain tail, whose expansion is the real path
            j = i
            while j + 1 < len(seq) and seq[j + 1] in chain_expansion:
                j += 1
            out.extend(chain_expansion[x])
            i = j + 1
        else:
            out.append(x)
            i += 1
    return tuple(out)


def _solve_through_inner(
    b_succ: dict[int, list[int]],
    inner_vertices: set[int],
    c_vertices: list[int],
    c_arcs: frozenset[tuple[int, int]],
) -> PathResult:
    """T3: contract acyclic segments around inner-SCC vertices and solve exactly."""
    # DAG DP helpers over the acyclic part
    dag = PathProblem(vertices=tuple(c_vertices), arcs=c_arcs)
    g = _Dense(dag)
    nd = len(g.vertices)
    indeg = [len(p) for p in g.pred]
    order = [v for v in range(nd) if indeg[v] == 0]
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        for w in g.succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                order.append(w)

    def dp_from(seeds: list[int]) -> tuple[list[int], list[int]]:
        """Longest path length ending at each vertex, started from seeds."""
        dist = [0] * nd
        back = [-1] * nd
        for s in seeds:
            dist[s] = 1
        for v in order:
            if dist[v] == 0:
                continue
            for w in g.succ[v]:
                if dist[v] + 1 > dist[w]:
                    dist[w] = dist[v] + 1
                    back[w] = v
        return dist, back

    def trace(back: list[int], end: int) -> tuple[int, ...]:
        seq = []
        cur = end
        while cur != -1:
            seq.append(cur)
            cur = back[cur]
        seq.reverse()
        return tuple(g.vertices[i] for i in seq)

    m_list = sorted(inner_vertices)
    succ_in_d: dict[int, list[int]] = {}
    pred_in_d: dict[int, list[int]] = {u: [] for u in m_list}
    d_set = set(c_vertices)
    for u in m_list:
        succ_in_d[u] = [g.idx[w] for w in b_succ[u] if w in d_set]
    for v_ in c_vertices:
        for w in b_succ[v_]:
            if w in inner_vertices:
                pred_in_d[w].append(g.idx[v_])

    all_dist, all_back = dp_from(list(range(nd)))

    # build the contracted weighted instance
    nodes: list[int] = list(m_list)
    weights: dict[int, int] = {u: 1 for u in m_list}
    arcs: set[tuple[int, int]] = set()
    expansion: dict[int, tuple[int, ...]] = {}
    fresh = -1  # contracted nodes get negative ids, disjoint from vertex ids

    for u in m_list:
        for w in b_succ[u]:
            if w in inner_vertices:
                arcs.add((u, w))

    for v in m_list:  # prefixes: best acyclic run into v
        cands = [(all_dist[d], d) for d in pred_in_d[v] if all_dist[d] > 0]
        if cands:
            length, d = max(cands)
            node = fresh
            fresh -= 1
            nodes.append(node)
            weights[node] = length
            arcs.add((node, v))
            expansion[node] = trace(all_back, d)

    for u in m_list:  # suffixes: best acyclic run out of u
        dist, back = dp_from(succ_in_d[u])
        cands = [(dist[d], d) for d in range(nd) if dist[d] > 0]
        if cands:
            length, d = max(cands)
            node = fresh
            fresh -= 1
            nodes.append(node)
            weights[node] = length
            arcs.add((u, node))
            expansion[node] = trace(back, d)
        # between: best acyclic run from u into each other inner vertex
        for v in m_list:
            if v == u:
                continue
            cands_v = [(dist[d], d) for d in pred_in_d[v] if dist[d] > 0]
            if cands_v:
                length, d = max(cands_v)
                node = fresh
                fresh -= 1
                nodes.append(node)
                weights[node] = length
                arcs.add((u, node))
                arcs.add((node, v))
                expansion[node] = trace(back, d)

    contracted = PathProblem(
        vertices=tuple(nodes), arcs=frozenset(arcs), weights=weights
    )
    res = longest_path_general(contracted, cap=len(nodes))
    if not res.witnesses:
        return PathResult(0, (), 0, True)
    seq: list[int] = []
    for x in res.witnesses[0]:
        if x in expansion:
            seq.extend(expansion[x])
        else:
            seq.append(x)
    return PathResult(res.length, (tuple(seq),), 1, True)

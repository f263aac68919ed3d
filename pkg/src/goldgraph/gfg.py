"""Goldbach factorization graph construction and structural predicates.

For an even n >= 4 the graph has one vertex per prime in [2, n-2] and an
arc (s, t) exactly when s divides n - t, weighted by the largest e with
s**e | (n - t).  Predecessors of t are therefore the prime factors of
n - t, which is the direction the construction works in.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, RangeError
from .primes import SpfTable, factorize, prime_power_exponent, sieve_primes


@dataclass(frozen=True)
class Gfg:
    """Immutable weighted digraph on the primes in [2, n-2].

    Vertices are stored both as prime values and as dense indices;
    ``successors``/``predecessors`` are indexed by dense vertex index and
    contain dense indices.  Loops are ordinary arcs.
    """

    n: int
    vertices: tuple[int, ...]  # ascending primes
    index_of: dict[int, int]  # prime value -> dense index
    successors: tuple[tuple[int, ...], ...]
    predecessors: tuple[tuple[int, ...], ...]
    weights: dict[tuple[int, int], int]  # (src prime, dst prime) -> exponent

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def arc_count(self) -> int:
        """Non-loop arc count (the convention of the published tallies)."""
        return len(self.weights) - self.loop_count

    @property
    def loop_count(self) -> int:
        return sum(1 for s, t in self.weights if s == t)

    @property
    def arc_count_with_loops(self) -> int:
        return len(self.weights)

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs as (src prime, dst prime) pairs."""
        return list(self.weights)

    def require_vertex(self, v: int) -> int:
        if v not in self.index_of:
            raise DomainError(f"{v} is not a vertex of F_{self.n}")
        return self.index_of[v]


def build_gfg(n: int, table: SpfTable) -> Gfg:
    """Construct the factorization graph for an even n >= 4."""
    if n < 4 or n % 2 != 0:
        raise DomainError(f"graph is defined for even n >= 4, got {n}")
    if table.limit < n - 2:
        raise RangeError(f"SPF table covers only up to {table.limit}, need {n - 2}")

    vertices = tuple(sieve_primes(n - 2))
    index_of = {p: i for i, p in enumerate(vertices)}
    preds: list[list[int]] = [[] for _ in vertices]
    succs: list[list[int]] = [[] for _ in vertices]
    weights: dict[tuple[int, int], int] = {}

    for t_idx, t in enumerate(vertices):
        for base, exp in factorize(n - t, table).factors:
            s_idx = index_of[base]
            preds[t_idx].append(s_idx)
            succs[s_idx].append(t_idx)
            weights[(base, t)] = exp

    return Gfg(
        n=n,
        vertices=vertices,
        index_of=index_of,
        successors=tuple(tuple(s) for s in succs),
        predecessors=tuple(tuple(p) for p in preds),
        weights=weights,
    )


def goldbach_partitions(gfg: Gfg) -> set[frozenset[int]]:
    """Unordered prime pairs {p, q} with p + q = n (p = q allowed)."""
    found = set()
    for p in gfg.vertices:
        q = gfg.n - p
        if q in gfg.index_of:
            found.add(frozenset((p, q)))
    return found


def has_loop(gfg: Gfg, v: int) -> bool:
    """True exactly when v divides n."""
    gfg.require_vertex(v)
    return (v, v) in gfg.weights


def reverse_reachable_subgraph(gfg: Gfg, p: int) -> Gfg:
    """Subgraph induced by everything reachable from p against the arcs.

    The returned vertex set is closed: no arcs enter it from outside.
    """
    start = gfg.require_vertex(p)
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        for nxt in gfg.predecessors[cur]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return induced_subgraph(gfg, {gfg.vertices[i] for i in seen})


def induced_subgraph(gfg: Gfg, keep: set[int]) -> Gfg:
    """Subgraph of gfg induced by the given prime values."""
    vertices = tuple(v for v in gfg.vertices if v in keep)
    index_of = {p: i for i, p in enumerate(vertices)}
    preds: list[list[int]] = [[] for _ in vertices]
    succs: list[list[int]] = [[] for _ in vertices]
    weights = {}
    for (s, t), w in gfg.weights.items():
        if s in index_of and t in index_of:
            weights[(s, t)] = w
            succs[index_of[s]].append(index_of[t])
            preds[index_of[t]].append(index_of[s])
    return Gfg(
        n=gfg.n,
        vertices=vertices,
        index_of=index_of,
        successors=tuple(tuple(s) for s in succs),
        predecessors=tuple(tuple(p) for p in preds),
        weights=weights,
    )


def is_isolated_power_vertex(gfg: Gfg, v: int, table: SpfTable) -> bool:
    """True when v alone forms a disconnected component, i.e. n - v = v**e."""
    gfg.require_vertex(v)
    return prime_power_exponent(gfg.n - v, v) is not None

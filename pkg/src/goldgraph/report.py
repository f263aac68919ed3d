"""Full analysis of one graph: the published parameter table as data.

One report row carries the graph metrics (v, a, c, connected and
disconnected partition components, longest path), the condensation
metrics (v, a, l), and the exceptional-component metrics (v, a,
Hamiltonian path/cycle counts, crossing bound, planarity).
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from . import drawing
from .components import (
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
from .gfg import Gfg, build_gfg, induced_subgraph
from .paths import (
    PathProblem,
    hamiltonian_cycles,
    hamiltonian_paths,
    longest_path_condensation,
    longest_path_gfg,
)
from .primes import SpfTable


@dataclass
class EacReport:
    n: int
    gfg_v: int
    gfg_a: int
    gfg_c: int
    gac_connected: int
    gac_disconnected: int
    gfg_l: int
    cg_v: int
    cg_a: int
    cg_l: int
    eac_v: int = 0
    eac_a: int = 0
    eac_ham_paths: int = 0
    eac_ham_cycles: int = 0
    eac_crossing_bound: int | None = None
    eac_crossing_exact: bool = False
    eac_planar: bool | None = None
    eac_vertices: list[int] = field(default_factory=list)
    longest_path_witness: list[int] = field(default_factory=list)
    ham_cycle_witnesses: list[list[int]] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2) + "\n"

    @staticmethod
    def from_json(text: str) -> "EacReport":
        return EacReport(**json.loads(text))


def build_report(
    n: int,
    table: SpfTable,
    seed: int = 1,
    budget: int = drawing.DEFAULT_BUDGET,
    max_seeds: int = 5,
) -> tuple[EacReport, Gfg, Gfg | None, str]:
    """Analyze F_n; returns (report, graph, eac subgraph or None, census text)."""
    g = build_gfg(n, table)
    d = strongly_connected_components(g)
    c = classify_components(g, d)
    cmap = condensation_map(g, d, c)
    cens = census_text(census(cmap, d, g))

    gacs = c.scc_ids_of(ComponentClass.GAC)
    lp = longest_path_gfg(g)
    report = EacReport(
        n=n,
        gfg_v=g.vertex_count,
        gfg_a=g.arc_count,
        gfg_c=weakly_connected_component_count(g),
        gac_connected=sum(1 for i in gacs if c.gac_connected[i]),
        gac_disconnected=sum(1 for i in gacs if not c.gac_connected[i]),
        gfg_l=lp.length,
        cg_v=d.scc_count,
        cg_a=condensation_arcs_count(d),
        cg_l=longest_path_condensation(d).length,
        longest_path_witness=list(lp.witnesses[0]) if lp.witnesses else [],
    )

    eac_sets = eac_vertex_sets(g, d, c)
    sub: Gfg | None = None
    if eac_sets:
        sub = induced_subgraph(g, eac_sets[0])
        problem = PathProblem.from_gfg(sub)
        hp = hamiltonian_paths(problem)
        hc = hamiltonian_cycles(problem)
        planar = drawing.is_planar(sub)
        bound, exact = _crossing_bound(sub, planar, seed, budget, max_seeds)
        report.eac_v = sub.vertex_count
        report.eac_a = sub.arc_count
        report.eac_ham_paths = hp.count
        report.eac_ham_cycles = hc.count
        report.eac_planar = planar
        report.eac_crossing_bound = bound
        report.eac_crossing_exact = exact
        report.eac_vertices = sorted(sub.vertices)
        report.ham_cycle_witnesses = [list(w) for w in hc.witnesses]
    return report, g, sub, cens


def _crossing_bound(
    sub: Gfg, planar: bool, seed: int, budget: int, max_seeds: int
) -> tuple[int, bool]:
    """Best layout bound over a few seeds; exact when planar or bound is 1."""
    best = None
    for s in range(seed, seed + max_seeds):
        b, _ = drawing.crossing_upper_bound(sub, budget=budget, seed=s)
        best = b if best is None else min(best, b)
        if planar and best == 0:
            break
        if not planar and best == 1:
            break
    exact = (planar and best == 0) or (not planar and best == 1)
    return best, exact

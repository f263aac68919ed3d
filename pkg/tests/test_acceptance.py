"""Acceptance suite: one test per published-result criterion.

Each test reproduces one headline claim end to end: the six-hit scan,
the empty extended scan, every column of the published parameter table,
component membership, Hamiltonian witnesses, the twin solution, oracle
equivalences, and determinism.
"""

import time

import pytest

from goldgraph.components import (
    classify_components,
    eac_vertex_sets,
    strongly_connected_components,
    weakly_connected_component_count,
)
from goldgraph.drawing import crossing_upper_bound, is_planar
from goldgraph.gfg import build_gfg, goldbach_partitions, has_loop, induced_subgraph
from goldgraph.paths import PathProblem, longest_path_general, longest_path_gfg
from goldgraph.primes import build_spf_table, factorize, prime_power_exponent
from goldgraph.report import build_report
from goldgraph.search import has_eac, has_eac_reference, scan_range
from goldgraph.twin import twin_search, verify_twin_is_eac

KNOWN_HITS = [128, 1718, 1862, 1928, 2200, 6142]

# (gfg: v a c g_conn g_disc l | cg: v a l | eac: v a h_paths h_cycles x x_is_exact)
GOLDEN_TABLE = {
    128: (30, 49, 3, 1, 2, 11, 20, 19, 4, 8, 15, 5, 0, 0, True),
    1718: (267, 548, 13, 9, 12, 34, 220, 308, 8, 28, 64, 30, 0, 23, False),
    1862: (283, 540, 20, 15, 19, 28, 224, 312, 7, 21, 48, 6, 0, 6, False),
    1928: (293, 598, 19, 12, 18, 24, 248, 373, 11, 14, 35, 89, 3, 5, False),
    2200: (327, 595, 23, 24, 22, 17, 276, 471, 12, 2, 2, 2, 1, 0, True),
    6142: (800, 1732, 39, 31, 38, 18, 716, 1258, 10, 10, 27, 12, 0, 1, True),
}

KNOWN_1928_CYCLES = [
    (641, 5, 113, 7, 3, 53, 73, 103, 383, 13, 17, 619, 71, 11),
    (641, 5, 113, 7, 17, 619, 71, 11, 3, 53, 73, 103, 383, 13),
    (641, 5, 53, 73, 103, 383, 13, 17, 619, 71, 11, 113, 7, 3),
]


def _canonical_rotation(cycle):
    k = cycle.index(min(cycle))
    return cycle[k:] + cycle[:k]


@pytest.fixture(scope="module")
def big_table():
    return build_spf_table(1_000_001)


@pytest.fixture(scope="module")
def reports(big_table):
    return {
        n: build_report(n, big_table, seed=1, max_seeds=1)
        for n in KNOWN_HITS
    }


def test_criterion_1_scan_reproduction(big_table):
    t0 = time.monotonic()
    hits, _ = scan_range(4, 10_000, big_table)
    elapsed = time.monotonic() - t0
    assert hits == KNOWN_HITS
    assert elapsed < 60, f"scan took {elapsed:.1f}s"


def test_criterion_2_extended_scan_is_empty(big_table):
    t0 = time.monotonic()
    hits, _ = scan_range(10_000, 1_000_000, big_table)
    elapsed = time.monotonic() - t0
    assert hits == []
    assert elapsed < 3600, f"extended scan took {elapsed:.1f}s"


def test_criterion_3_parameter_table_golden(reports, big_table):
    for n, row in GOLDEN_TABLE.items():
        r = reports[n][0]
        (v, a, c, gc, gd, l, cv, ca, cl, ev, ea, hp, hc, x, x_exact) = row
        got = (
            r.gfg_v, r.gfg_a, r.gfg_c, r.gac_connected, r.gac_disconnected,
            r.gfg_l, r.cg_v, r.cg_a, r.cg_l, r.eac_v, r.eac_a,
            r.eac_ham_paths, r.eac_ham_cycles,
        )
        assert got == row[:13], f"n={n}: {got} != {row[:13]}"
        if x_exact:
            assert r.eac_crossing_bound == x and r.eac_crossing_exact, f"n={n}"
        else:
            # bound rows: the search must reach the published bound
            # within at most 5 seeded runs (seed 1 suffices here)
            bound = r.eac_crossing_bound
            sub = induced_subgraph(build_gfg(n, big_table), set(r.eac_vertices))
            for seed in range(2, 6):
                if bound <= x:
                    break
                bound = min(bound, crossing_upper_bound(sub, seed=seed)[0])
            assert bound <= x, f"n={n}: bound {bound} > {x} after 5 seeds"
            assert not r.eac_crossing_exact


def test_criterion_4_eac_membership(reports):
    assert reports[128][0].eac_vertices == [3, 5, 7, 11, 13, 23, 29, 41]
    assert reports[2200][0].eac_vertices == [3, 13]


def test_criterion_5_hamiltonian_cycle_witnesses(reports):
    got = {tuple(c) for c in reports[1928][0].ham_cycle_witnesses}
    expected = {_canonical_rotation(c) for c in KNOWN_1928_CYCLES}
    assert got == expected


def test_criterion_6_twin_solution(big_table):
    found = twin_search(1000, 10**9)
    assert [(s.a, s.b, s.x, s.y, s.n) for s in found] == [(13, 3, 3, 7, 2200)]
    assert verify_twin_is_eac(found[0], big_table)


def test_criterion_7_oracle_equivalence(big_table):
    # (a) compiled/set-based check vs the reference script port
    for n in range(4, 20_001, 2):
        assert has_eac(n, big_table)[0] == has_eac_reference(n, big_table), f"n={n}"

    # (b) existence check vs full component classification
    for n in range(4, 10_001, 2):
        g = build_gfg(n, big_table)
        d = strongly_connected_components(g)
        eacs = eac_vertex_sets(g, d, classify_components(g, d))
        assert has_eac(n, big_table)[0] == bool(eacs), f"n={n}"

    # (c) staged longest-path pipeline vs exhaustive branch and bound
    for n in range(4, 101, 2):
        g = build_gfg(n, big_table)
        assert (
            longest_path_gfg(g).length
            == longest_path_general(PathProblem.from_gfg(g)).length
        ), f"n={n}"

    # (d) table-driven factorization vs trial division
    for x in range(2, 100_001):
        y, d, factors = x, 2, []
        while d * d <= y:
            e = 0
            while y % d == 0:
                y //= d
                e += 1
            if e:
                factors.append((d, e))
            d += 1
        if y > 1:
            factors.append((y, 1))
        assert factorize(x, big_table).factors == tuple(factors), f"x={x}"

    # (e) structural graph properties, exhaustively for small n
    for n in range(4, 2_001, 2):
        g = build_gfg(n, big_table)
        loops = set()
        for v in g.vertices:
            # a vertex has a loop exactly when it divides n
            assert has_loop(g, v) == (n % v == 0), f"n={n} v={v}"
            if has_loop(g, v):
                loops.add(v)
                # a looped vertex has no other successors
                succ = {g.vertices[i] for i in g.successors[g.index_of[v]]}
                assert succ == {v}, f"n={n} v={v}"
            # v sits in its own weak component exactly when n - v = v**e
            i = g.index_of[v]
            arcs_elsewhere = any(
                g.vertices[j] != v
                for j in (*g.successors[i], *g.predecessors[i])
            )
            isolated = not arcs_elsewhere
            assert isolated == (
                prime_power_exponent(n - v, v) is not None
            ), f"n={n} v={v}"
        # a partition pair always induces a two-vertex source component
        d = strongly_connected_components(g)
        for pair in goldbach_partitions(g):
            if len(pair) != 2:
                continue
            p, q = sorted(pair)
            sp, sq = d.scc_of[g.index_of[p]], d.scc_of[g.index_of[q]]
            assert sp == sq and len(d.scc_members[sp]) == 2, f"n={n} {pair}"
            assert not d.condensation_preds[sp], f"n={n} {pair}"
        # every graph except the two smallest has an unlooped vertex
        if n in (4, 6):
            assert loops == set(g.vertices)
        else:
            assert loops != set(g.vertices), f"n={n}"


def test_criterion_8_determinism(big_table, tmp_path):
    # worker-count independence, byte for byte
    serial, _ = scan_range(4, 10_000, big_table, workers=1)
    parallel, _ = scan_range(4, 10_000, big_table, workers=3)
    as_bytes = lambda hits: "\n".join(map(str, hits)).encode()
    assert as_bytes(serial) == as_bytes(parallel)

    # resume after interrupt reproduces the uninterrupted hit list
    ckpt = str(tmp_path / "scan.ckpt")
    scan_range(4, 10_000, big_table, checkpoint_path=ckpt, block_size=2_000,
               interrupt_after_blocks=2)
    from goldgraph.search import resume_scan
    resumed, _ = resume_scan(ckpt, big_table, block_size=2_000)
    assert as_bytes(resumed) == as_bytes(serial)

    # seeded layout search repeats byte for byte
    g = build_gfg(128, big_table)
    d = strongly_connected_components(g)
    sub = induced_subgraph(g, eac_vertex_sets(g, d, classify_components(g, d))[0])
    first = crossing_upper_bound(sub, budget=50_000, seed=11)
    second = crossing_upper_bound(sub, budget=50_000, seed=11)
    assert first[0] == second[0]
    assert first[1].dump().encode() == second[1].dump().encode()

"""Fast existence check for exceptional components and a range scanner.

The check avoids materializing the SCC decomposition: it seeds the
partition-inducing vertices, saturates forward reachability, and tests
whether any vertex outside the trivial set stays unmarked.  The scanner
runs the same compiled kernel over blocks of even n, in parallel worker
processes, with resumable text checkpoints.
"""

from __future__ import annotations

import hashlib
import json
import multiprocessing as mp
import os
import time
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .errors import CheckpointConfigError, DomainError, RangeError
from .primes import SpfTable, distinct_prime_factors, prime_power_exponent

DEFAULT_BLOCK_SIZE = 10_000


@dataclass(frozen=True)
class EacCheckSets:
    """The vertex sets driving the existence test for one n."""

    gamma: frozenset[int]  # vertices whose complement n - v is prime
    theta: frozenset[int]  # vertices with n - v a proper power of v
    xi: frozenset[int]  # vertices reachable from gamma (gamma excluded)
    residual: frozenset[int]  # everything left; nonempty iff an EAC exists


@dataclass
class ScanCheckpoint:
    range_lo: int
    range_hi: int
    next_block: int
    hits: list[int] = field(default_factory=list)
    elapsed: float = 0.0
    config_digest: str = ""

    @property
    def complete(self) -> bool:
        return self.next_block > self.range_hi


def _config_digest(lo: int, hi: int, block_size: int) -> str:
    text = f"range_lo={lo} range_hi={hi} block_size={block_size}"
    return hashlib.sha256(text.encode()).hexdigest()[:16]


@njit(cache=True)
def _residual_size(n, spf, primes, prime_index, marked, survivors):  # pragma: no cover
    """Size of the unmarked non-trivial vertex set of F_n.

    ``marked`` and ``survivors`` are reusable scratch arrays at least as
    long as the number of primes below n - 1.  Returns 0 as soon as the
    non-trivial vertex set is fully covered by the partition closure.
    """
    v_count = 0
    for i in range(len(primes)):
        if primes[i] > n - 2:
            break
        v_count += 1

    n_surv = 0
    for i in range(v_count):
        p = primes[i]
        m = n - p
        if spf[m] == m:  # complement prime: partition-inducing seed
            marked[i] = True
            continue
        marked[i] = False
        if m % p == 0:  # maybe n - p = p**e, the trivial isolated case
            q = m
            while q % p == 0:
                q //= p
            if q == 1:
                marked[i] = True  # excluded from the residual; never propagates
                continue
        survivors[n_surv] = i
        n_surv += 1

    if n_surv == 0:
        return 0

    while True:
        changed = False
        k = 0
        for s in range(n_surv):
            i = survivors[s]
            m = n - primes[i]
            hit = False
            while m > 1:
                q = spf[m]
                while m % q == 0:
                    m //= q
                if marked[prime_index[q]]:
                    hit = True
                    break
            if hit:
                marked[i] = True
                changed = True
            else:
                survivors[k] = i
                k += 1
        n_surv = k
        if n_surv == 0:
            return 0
        if not changed:
            return n_surv


@njit(cache=True)
def _scan_block(lo, hi, spf, primes, prime_index, marked, survivors):  # pragma: no cover
    """All even n in [lo, hi] whose graph has an exceptional component."""
    hits = []
    n = lo if lo % 2 == 0 else lo + 1
    while n <= hi:
        if n >= 4 and _residual_size(n, spf, primes, prime_index, marked, survivors) > 0:
            hits.append(n)
        n += 2
    return hits


class _KernelContext:
    """Precomputed arrays shared by every kernel call for one table."""

    def __init__(self, table: SpfTable):
        self.table = table
        self.spf = table.spf.astype(np.int64)
        values = np.arange(table.limit + 1)
        self.primes = np.flatnonzero((values >= 2) & (self.spf == values)).astype(
            np.int64
        )
        self.prime_index = np.zeros(table.limit + 1, dtype=np.int64)
        self.prime_index[self.primes] = np.arange(len(self.primes))

    def scratch(self) -> tuple[np.ndarray, np.ndarray]:
        # worst-case size once per worker, reused across every n
        k = len(self.primes)
        return np.zeros(k, dtype=np.bool_), np.zeros(k, dtype=np.int64)


_context_cache: dict[int, _KernelContext] = {}


def _context_for(table: SpfTable) -> _KernelContext:
    ctx = _context_cache.get(id(table))
    if ctx is None or ctx.table is not table:
        ctx = _KernelContext(table)
        _context_cache.clear()
        _context_cache[id(table)] = ctx
    return ctx


def _check_n(n: int, table: SpfTable) -> None:
    if n < 4 or n % 2 != 0:
        raise DomainError(f"check is defined for even n >= 4, got {n}")
    if table.limit < n - 2:
        raise RangeError(f"SPF table covers only up to {table.limit}, need {n - 2}")


def has_eac(n: int, table: SpfTable) -> tuple[bool, EacCheckSets]:
    """Existence verdict plus the witnessing vertex sets."""
    _check_n(n, table)
    ctx = _context_for(table)
    k = int(np.searchsorted(ctx.primes, n - 2, side="right"))
    vertices = ctx.primes[:k].tolist()

    gamma = frozenset(v for v in vertices if table.spf[n - v] == n - v)
    theta = frozenset(
        v
        for v in vertices
        if v not in gamma and (e := prime_power_exponent(n - v, v)) is not None and e >= 2
    )

    # forward closure of gamma over successor lists, built from factorizations
    succ: dict[int, list[int]] = {v: [] for v in vertices}
    for t in vertices:
        for q in distinct_prime_factors(n - t, table):
            succ[q].append(t)
    reached = set(gamma)
    stack = list(gamma)
    while stack:
        for w in succ[stack.pop()]:
            if w not in reached:
                reached.add(w)
                stack.append(w)
    xi = frozenset(reached - gamma)
    residual = frozenset(v for v in vertices if v not in theta) - gamma - xi
    return bool(residual), EacCheckSets(gamma=gamma, theta=theta, xi=xi, residual=residual)


def residual_size_fast(n: int, table: SpfTable) -> int:
    """Compiled counterpart of has_eac; returns the residual cardinality."""
    _check_n(n, table)
    ctx = _context_for(table)
    marked, survivors = ctx.scratch()
    return int(
        _residual_size(n, ctx.spf, ctx.primes, ctx.prime_index, marked, survivors)
    )


def has_eac_reference(n: int, table: SpfTable) -> bool:
    """Direct port of the published check script; the differential oracle.

    Drops the trivial power vertices, seeds the partition vertices,
    saturates successors, and compares the set difference.
    """
    _check_n(n, table)
    ctx = _context_for(table)
    k = int(np.searchsorted(ctx.primes, n - 2, side="right"))
    pms = ctx.primes[:k].tolist()

    vertex_to_prime = []
    for p in pms:
        fcs = factor_with_multiplicity(n - p, table)
        u_fcs = sorted(set(fcs))
        if len(fcs) > 1 and len(u_fcs) == 1 and u_fcs[0] == p:
            continue
        vertex_to_prime.append(p)
    vertices = list(range(len(vertex_to_prime)))

    gac_vertices = []
    prime_to_vertex = {}
    for v in vertices:
        p = vertex_to_prime[v]
        prime_to_vertex[p] = v
        if len(factor_with_multiplicity(n - p, table)) == 1:
            gac_vertices.append(v)

    successors: dict[int, set[int]] = {v: set() for v in vertices}
    for v in vertices:
        p = vertex_to_prime[v]
        for q in sorted(set(factor_with_multiplicity(n - p, table))):
            successors[prime_to_vertex[q]].add(v)

    gac_and_successors = set(gac_vertices)
    not_visited = set(gac_vertices)
    while not_visited:
        nxt: set[int] = set()
        for v in not_visited:
            nxt |= successors[v]
        not_visited = nxt - gac_and_successors
        gac_and_successors |= not_visited

    check_set = set(vertices) - gac_and_successors
    return len(check_set) > 0


def factor_with_multiplicity(x: int, table: SpfTable) -> list[int]:
    """Prime factors of x with multiplicity, ascending."""
    out = []
    spf = table.spf
    while x > 1:
        p = int(spf[x])
        while x % p == 0:
            x //= p
            out.append(p)
    return out


def eac_vertex_count(n: int, table: SpfTable) -> int:
    """Total vertex count over the exceptional components of F_n."""
    from .components import (
        classify_components,
        eac_vertex_sets,
        strongly_connected_components,
    )
    from .gfg import build_gfg

    g = build_gfg(n, table)
    d = strongly_connected_components(g)
    c = classify_components(g, d)
    return sum(len(s) for s in eac_vertex_sets(g, d, c))


# --- parallel range scan ------------------------------------------------------

_worker_ctx: _KernelContext | None = None
_worker_scratch: tuple[np.ndarray, np.ndarray] | None = None


def _worker_init(table: SpfTable) -> None:
    global _worker_ctx, _worker_scratch
    _worker_ctx = _KernelContext(table)
    _worker_scratch = _worker_ctx.scratch()


def _worker_scan(block: tuple[int, int]) -> list[int]:
    assert _worker_ctx is not None and _worker_scratch is not None
    lo, hi = block
    marked, survivors = _worker_scratch
    return list(
        _scan_block(
            lo, hi, _worker_ctx.spf, _worker_ctx.primes, _worker_ctx.prime_index,
            marked, survivors,
        )
    )


def write_checkpoint(path: str, cp: ScanCheckpoint) -> None:
    """Atomic write via rename, so a crash never leaves a torn record."""
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        fh.write(f"range_lo={cp.range_lo}\n")
        fh.write(f"range_hi={cp.range_hi}\n")
        fh.write(f"next_block={cp.next_block}\n")
        fh.write(f"hits={','.join(str(h) for h in cp.hits)}\n")
        fh.write(f"elapsed_s={cp.elapsed:.3f}\n")
        fh.write(f"config_digest={cp.config_digest}\n")
    os.replace(tmp, path)


def read_checkpoint(path: str) -> ScanCheckpoint:
    fields: dict[str, str] = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                key, _, value = line.partition("=")
                fields[key] = value
    return ScanCheckpoint(
        range_lo=int(fields["range_lo"]),
        range_hi=int(fields["range_hi"]),
        next_block=int(fields["next_block"]),
        hits=[int(x) for x in fields["hits"].split(",") if x],
        elapsed=float(fields["elapsed_s"]),
        config_digest=fields["config_digest"],
    )


def _run_blocks(
    cp: ScanCheckpoint,
    table: SpfTable,
    workers: int,
    checkpoint_path: str | None,
    block_size: int,
    jsonl_path: str | None = None,
    interrupt_after_blocks: int | None = None,
) -> ScanCheckpoint:
    blocks = []
    start = cp.next_block
    while start <= cp.range_hi:
        blocks.append((start, min(start + block_size - 1, cp.range_hi)))
        start += block_size

    t0 = time.monotonic()
    elapsed_base = cp.elapsed
    jsonl = open(jsonl_path, "a") if jsonl_path else None

    def consume(block: tuple[int, int], hits: list[int]) -> None:
        t_block = time.monotonic()
        for n in hits:
            cp.hits.append(n)
            if jsonl:
                size = eac_vertex_count(n, table)
                record = {
                    "n": n,
                    "eac_vertex_count": size,
                    "wall_time_ms": round((t_block - t0) * 1000, 3),
                }
                jsonl.write(json.dumps(record) + "\n")
                jsonl.flush()
        cp.next_block = block[1] + 1
        cp.elapsed = elapsed_base + (time.monotonic() - t0)
        if checkpoint_path:
            write_checkpoint(checkpoint_path, cp)

    try:
        done = 0
        if workers <= 1:
            _worker_init(table)
            for block in blocks:
                consume(block, _worker_scan(block))
                done += 1
                if interrupt_after_blocks is not None and done >= interrupt_after_blocks:
                    break
        else:
            with mp.get_context("fork").Pool(
                workers, initializer=_worker_init, initargs=(table,)
            ) as pool:
                for block, hits in zip(blocks, pool.imap(_worker_scan, blocks)):
                    consume(block, hits)
                    done += 1
                    if interrupt_after_blocks is not None and done >= interrupt_after_blocks:
                        pool.terminate()
                        break
    finally:
        if jsonl:
            jsonl.close()
    cp.elapsed = elapsed_base + (time.monotonic() - t0)
    cp.hits.sort()
    if checkpoint_path:
        write_checkpoint(checkpoint_path, cp)
    return cp


def scan_range(
    lo: int,
    hi: int,
    table: SpfTable,
    workers: int = 1,
    checkpoint_path: str | None = None,
    block_size: int = DEFAULT_BLOCK_SIZE,
    jsonl_path: str | None = None,
    interrupt_after_blocks: int | None = None,
) -> tuple[list[int], ScanCheckpoint]:
    """All even n in [lo, hi] whose graph has an exceptional component.

    Deterministic and independent of the worker count; the checkpoint is
    advanced at block granularity.
    """
    if not (4 <= lo <= hi):
        raise DomainError(f"need 4 <= lo <= hi, got [{lo}, {hi}]")
    if table.limit < hi - 2:
        raise RangeError(f"SPF table covers only up to {table.limit}, need {hi - 2}")
    if checkpoint_path:
        parent = os.path.dirname(os.path.abspath(checkpoint_path))
        if not os.path.isdir(parent) or not os.access(parent, os.W_OK):
            raise OSError(f"checkpoint path not writable: {checkpoint_path}")
    cp = ScanCheckpoint(
        range_lo=lo,
        range_hi=hi,
        next_block=lo,
        config_digest=_config_digest(lo, hi, block_size),
    )
    cp = _run_blocks(
        cp, table, workers, checkpoint_path, block_size, jsonl_path,
        interrupt_after_blocks,
    )
    return list(cp.hits), cp


def resume_scan(
    checkpoint_path: str,
    table: SpfTable,
    workers: int = 1,
    block_size: int = DEFAULT_BLOCK_SIZE,
    jsonl_path: str | None = None,
) -> tuple[list[int], ScanCheckpoint]:
    """Continue a checkpointed scan; refuses a mismatched configuration."""
    cp = read_checkpoint(checkpoint_path)
    expected = _config_digest(cp.range_lo, cp.range_hi, block_size)
    if cp.config_digest != expected:
        raise CheckpointConfigError(
            f"checkpoint digest {cp.config_digest} does not match configuration "
            f"digest {expected} (range [{cp.range_lo}, {cp.range_hi}], "
            f"block_size {block_size})"
        )
    if cp.complete:
        return list(cp.hits), cp
    cp = _run_blocks(cp, table, workers, checkpoint_path, block_size, jsonl_path)
    return list(cp.hits), cp

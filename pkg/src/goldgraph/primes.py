"""Prime generation and smallest-prime-factor based factorization.

The smallest-prime-factor (SPF) table is the workhorse of the whole
package: every graph construction and every scanner step factorizes
numbers through it in amortized O(log x) time.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import RangeError, ResourceLimitError

# int32 SPF entries are valid for limits up to 2**31 - 1, far beyond the
# desk-scale scan bounds supported here.
BYTES_PER_ENTRY = 4

DEFAULT_MEMORY_BUDGET = 2 * 1024**3  # bytes


@dataclass(frozen=True)
class SpfTable:
    """Smallest prime factor of every integer in [2, limit].

    ``spf[x] == x`` exactly when ``x`` is prime.  Immutable after
    construction and safe for concurrent reads.
    """

    limit: int
    spf: np.ndarray  # index x in [0, limit], entries below 2 unused

    def is_prime(self, x: int) -> bool:
        if x < 2 or x > self.limit:
            raise RangeError(f"{x} outside SPF table range [2, {self.limit}]")
        return int(self.spf[x]) == x

    def smallest_factor(self, x: int) -> int:
        if x < 2 or x > self.limit:
            raise RangeError(f"{x} outside SPF table range [2, {self.limit}]")
        return int(self.spf[x])


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (base, exponent) pairs with ascending bases."""

    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        v = 1
        for base, exp in self.factors:
            v *= base**exp
        return v

    def bases(self) -> tuple[int, ...]:
        return tuple(base for base, _ in self.factors)


def sieve_primes(limit: int) -> list[int]:
    """All primes in [2, limit], ascending.  Empty for limit < 2."""
    if limit < 2:
        return []
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve).tolist()


def build_spf_table(limit: int, memory_budget: int = DEFAULT_MEMORY_BUDGET) -> SpfTable:
    """Sieve the smallest prime factor of every integer up to ``limit``.

    Memory cost is BYTES_PER_ENTRY * (limit + 1) bytes; a
    ResourceLimitError names the budget when it would be exceeded.
    """
    if limit < 2:
        raise RangeError(f"SPF table limit must be >= 2, got {limit}")
    needed = BYTES_PER_ENTRY * (limit + 1)
    if needed > memory_budget:
        raise ResourceLimitError(
            f"SPF table for limit {limit} needs {needed} bytes, "
            f"budget is {memory_budget} bytes"
        )
    spf = np.zeros(limit + 1, dtype=np.int32)
    spf[2::2] = 2
    for p in range(3, int(limit**0.5) + 1, 2):
        if spf[p] == 0:
            spf[p * p :: 2 * p][spf[p * p :: 2 * p] == 0] = p
    # remaining zeros at odd indices >= 3 are primes
    rest = np.flatnonzero(spf[3:] == 0) + 3
    spf[rest] = rest
    return SpfTable(limit=limit, spf=spf)


def factorize(x: int, table: SpfTable) -> Factorization:
    """Exact factorization of x via the SPF table, bases ascending."""
    if x < 2 or x > table.limit:
        raise RangeError(f"{x} outside SPF table range [2, {table.limit}]")
    spf = table.spf
    factors = []
    while x > 1:
        p = int(spf[x])
        e = 0
        while x % p == 0:
            x //= p
            e += 1
        factors.append((p, e))
    return Factorization(factors=tuple(factors))


def distinct_prime_factors(x: int, table: SpfTable) -> list[int]:
    """Distinct prime factors of x, ascending (no exponents)."""
    if x < 2 or x > table.limit:
        raise RangeError(f"{x} outside SPF table range [2, {table.limit}]")
    spf = table.spf
    out = []
    while x > 1:
        p = int(spf[x])
        out.append(p)
        while x % p == 0:
            x //= p
    return out


def prime_power_exponent(x: int, p: int) -> int | None:
    """Return e when x == p**e exactly, else None."""
    if x < 2 or p < 2:
        return None
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e if x == 1 and e >= 1 else None

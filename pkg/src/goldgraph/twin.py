"""Brute-force study of two-vertex exceptional components.

A pair of odd primes {a, b} induces a two-vertex exceptional component
in exactly one graph family member iff a**x + b = b**y + a has a
solution with x, y > 1 and x != y; this module searches that equation
within explicit bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError
from .gfg import build_gfg
from .primes import SpfTable, sieve_primes


@dataclass(frozen=True)
class TwinSolution:
    a: int
    b: int
    x: int
    y: int
    n: int

    def __post_init__(self):
        if self.a == self.b or self.a <= 2 or self.b <= 2:
            raise DomainError("solution requires distinct odd primes > 2")
        if self.x <= 1 or self.y <= 1 or self.x == self.y:
            raise DomainError("solution requires x, y > 1 and x != y")
        if self.a**self.x + self.b != self.n or self.b**self.y + self.a != self.n:
            raise DomainError("values do not satisfy a**x + b = b**y + a = n")


def twin_check(a: int, b: int, max_n: int) -> TwinSolution | None:
    """Smallest-n solution of a**x + b = b**y + a with n <= max_n, if any.

    Primes equal to 2 never qualify and are rejected immediately.  The
    walk is exhaustive up to max_n, so None means verified absence in
    that range (arithmetic is exact, there is no overflow truncation).
    """
    if a == b:
        raise DomainError("need two distinct primes")
    if a == 2 or b == 2:
        return None
    # merge the two ascending value sequences with a two-pointer walk
    x, y = 2, 2
    va, vb = a**x + b, b**y + a
    while va <= max_n or vb <= max_n:
        if va == vb:
            if x != y:
                return TwinSolution(a=a, b=b, x=x, y=y, n=va)
            x += 1
            va = a**x + b
        elif va < vb:
            x += 1
            va = a**x + b
        else:
            y += 1
            vb = b**y + a
    return None


def twin_search(prime_limit: int, max_n: int) -> list[TwinSolution]:
    """All solutions with both primes <= prime_limit and n <= max_n.

    Deduplicated under swapping the two primes; each unordered pair is
    reported once, larger prime first.
    """
    odd_primes = [p for p in sieve_primes(prime_limit) if p > 2]
    found = []
    for b, a in combinations(odd_primes, 2):  # a > b
        sol = twin_check(a, b, max_n)
        if sol is not None:
            found.append(sol)
    found.sort(key=lambda s: (s.n, s.a))
    return found


def verify_twin_is_eac(solution: TwinSolution, table: SpfTable) -> bool:
    """Confirm {a, b} classifies as a two-vertex exceptional component."""
    from .components import (
        ComponentClass,
        classify_components,
        strongly_connected_components,
    )

    g = build_gfg(solution.n, table)
    d = strongly_connected_components(g)
    c = classify_components(g, d)
    target = {solution.a, solution.b}
    for scc_id in c.scc_ids_of(ComponentClass.EAC):
        members = {g.vertices[i] for i in d.scc_members[scc_id]}
        if members == target:
            return True
    return False

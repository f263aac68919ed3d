import pytest

from goldgraph.errors import DomainError
from goldgraph.twin import TwinSolution, twin_check, twin_search, verify_twin_is_eac


def test_known_solution():
    sol = twin_check(13, 3, 10**7)
    assert sol == TwinSolution(a=13, b=3, x=3, y=7, n=2200)
    assert 13**3 + 3 == 3**7 + 13 == 2200


def test_symmetric_arguments():
    sol = twin_check(3, 13, 10**7)
    assert sol is not None and sol.n == 2200
    assert {sol.a, sol.b} == {3, 13}


def test_absence_verified():
    assert twin_check(3, 5, 10**7) is None
    assert twin_check(5, 7, 10**9) is None


def test_two_rejected_immediately():
    assert twin_check(2, 7, 10**7) is None
    assert twin_check(7, 2, 10**7) is None


def test_equal_primes_rejected():
    with pytest.raises(DomainError):
        twin_check(5, 5, 10**6)


def test_invariants_enforced():
    with pytest.raises(DomainError):
        TwinSolution(a=13, b=3, x=1, y=1, n=16)  # x = y = 1 is a partition, not a twin
    with pytest.raises(DomainError):
        TwinSolution(a=13, b=3, x=3, y=7, n=2201)
    with pytest.raises(DomainError):
        TwinSolution(a=2, b=7, x=2, y=3, n=11)


def test_search_bounds():
    # both primes must fall within the limit; {3, 13} needs limit >= 13
    assert twin_search(5, 10**4) == []
    assert twin_search(10, 10**4) == []
    found = twin_search(13, 10**4)
    assert len(found) == 1 and found[0].n == 2200
    found = twin_search(1000, 10**6)
    assert len(found) == 1 and found[0].n == 2200


def test_solution_verifies_as_two_vertex_eac(table_10k):
    sol = twin_check(13, 3, 10**7)
    assert verify_twin_is_eac(sol, table_10k)


def test_ratio_bound_holds():
    for sol in twin_search(1000, 10**9):
        small, large = sorted((sol.a, sol.b))
        assert small / large < 1697 / 1698

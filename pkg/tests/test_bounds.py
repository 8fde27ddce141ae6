from itertools import combinations

import pytest

from tricensus.bounds import (
    CoverInstance,
    ResourceError,
    lemma_distinct_bound,
    lemma_distinct_bound_as_stated,
    lemma_max_dds_bound,
    lemma_repeat_bound,
    min_cover_with_repeats,
    min_triple_cover,
    solve_cover,
)
from tricensus.exactnum import ContractError


def test_max_dds():
    assert [lemma_max_dds_bound(t) for t in (1, 2, 4)] == [3, 5, 9]
    with pytest.raises(ContractError):
        lemma_max_dds_bound(0)


def test_distinct_bound():
    assert lemma_distinct_bound(5) == 4
    assert lemma_distinct_bound(4) == 3
    assert lemma_distinct_bound(3) == 1
    # the transposed form undercounts at n = 5
    assert lemma_distinct_bound_as_stated(5) == 3


def test_repeat_bound():
    assert lemma_repeat_bound(3, 2) == 3
    assert lemma_repeat_bound(1, 0) == 0
    assert lemma_repeat_bound(4, 1) == 3
    with pytest.raises(ContractError):
        lemma_repeat_bound(3, 4)


def pair_cover_ok(n, triples):
    return all(any(a in t and b in t for t in triples) for a, b in combinations(range(1, n + 1), 2))


@pytest.mark.parametrize("n", range(1, 10))
def test_min_triple_cover_matches_formula(n, impl):
    sol = min_triple_cover(n, impl=impl)
    assert sol.size == lemma_distinct_bound(n)
    assert sol.certified_minimal and pair_cover_ok(n, sol.triples)


def test_small_covers():
    assert min_triple_cover(3).triples == ((1, 2, 3),)
    assert min_triple_cover(5).size == 4
    assert min_triple_cover(6).size == 6


@pytest.mark.slow
@pytest.mark.parametrize("n", [10, 11, 12])
def test_larger_covers_with_symbol_bound(n):
    assert min_triple_cover(n).size == lemma_distinct_bound(n)


def test_count_and_symbol_bounds_agree():
    for n in range(3, 9):
        a = solve_cover(CoverInstance.distinct_pairs(n), bound="count")
        b = solve_cover(CoverInstance.distinct_pairs(n), bound="symbol")
        assert a.size == b.size
    for n, m in [(4, 2), (5, 3), (6, 6)]:
        inst = CoverInstance.distinct_pairs(n, range(1, m + 1))
        assert solve_cover(inst, bound="count").size == solve_cover(inst, bound="symbol").size


def test_repeat_examples():
    assert min_cover_with_repeats(3, 0).size == 1
    assert min_cover_with_repeats(3, 2).size == 3
    sol = min_cover_with_repeats(2, 2)
    assert sol.size == 2
    assert sol.triples == ((1, 1, 2), (1, 2, 2))
    assert min_cover_with_repeats(4, 1).size == 3


@pytest.mark.parametrize("n", range(1, 7))
def test_repeat_bound_is_sound(n, impl):
    for m in range(n + 1):
        sol = min_cover_with_repeats(n, m, impl=impl)
        assert sol.size >= lemma_repeat_bound(n, m)
        assert sol.covers(CoverInstance.distinct_pairs(n, range(1, m + 1)))


def test_resource_limits():
    with pytest.raises(ResourceError):
        min_triple_cover(13)
    with pytest.raises(ResourceError):
        min_cover_with_repeats(11, 0)
    with pytest.raises(ResourceError):
        solve_cover(CoverInstance.distinct_pairs(9), node_limit=5)


def test_instance_validation():
    with pytest.raises(ContractError):
        CoverInstance(3, frozenset({(1, 4)}))
    inst = CoverInstance.distinct_pairs(3, [2])
    assert inst.doubled == [2] and not inst.is_symmetric

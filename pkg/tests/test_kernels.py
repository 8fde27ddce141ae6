import random

import pytest

from tricensus import kernels
from tricensus.bounds import CoverInstance, _candidates, _symbol_groups

needs_both = pytest.mark.skipif(len(kernels.implementations()) < 2, reason="compiled kernels not built")


def test_backend_name():
    assert kernels.BACKEND in kernels.implementations()


@needs_both
@pytest.mark.parametrize("n, m", [(5, 0), (7, 0), (8, 0), (5, 3), (6, 2)])
def test_cover_search_parity(n, m):
    inst = CoverInstance.distinct_pairs(n, range(1, m + 1))
    masks = [mk for _, mk in _candidates(inst)]
    groups = _symbol_groups(inst)
    E = len(inst.pairs)
    impls = kernels.implementations()
    for limit in range(-(-E // 3), -(-E // 3) + 4):
        for g in ((), groups):
            args = (masks, E, limit, 0, inst.is_symmetric, g, 2, 3, 0)
            assert impls["python"].cover_search(*args) == impls["cython"].cover_search(*args)


@needs_both
def test_subset_search_parity():
    rnd = random.Random(3)
    impls = kernels.implementations()
    for _ in range(20):
        n = rnd.randint(4, 14)
        dist = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                dist[i][j] = dist[j][i] = rnd.randint(1, 6)
        for k in (1, 2, 3):
            assert impls["python"].max_k_distance_subset(dist, k) == impls["cython"].max_k_distance_subset(dist, k)


@needs_both
def test_census_counts_parity():
    rnd = random.Random(5)
    impls = kernels.implementations()
    for _ in range(30):
        pts = list({(rnd.randint(-4, 4), rnd.randint(-4, 4)) for _ in range(9)})
        sq = [[(a - c) ** 2 + (b - d) ** 2 for c, d in pts] for a, b in pts]
        assert impls["python"].census_counts(sq) == impls["cython"].census_counts(sq)


def test_node_limit_flags_incomplete(impl):
    inst = CoverInstance.distinct_pairs(8)
    masks = [mk for _, mk in _candidates(inst)]
    chosen, nodes, done = impl.cover_search(masks, len(inst.pairs), 10, 3, True)
    assert not done and chosen is None
    size, subset, nodes, done = impl.max_k_distance_subset([[0, 1, 1], [1, 0, 1], [1, 1, 0]], 1, 0, 1)
    assert not done


def test_subset_search_trivial(impl):
    # equilateral triangle plus a far point
    dist = [[0, 1, 1, 2], [1, 0, 1, 3], [1, 1, 0, 3], [2, 3, 3, 0]]
    size, subset, _, done = impl.max_k_distance_subset(dist, 1)
    assert (size, subset, done) == (3, (0, 1, 2), True)

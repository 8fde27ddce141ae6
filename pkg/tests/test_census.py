import json
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from tricensus import kernels
from tricensus.bounds import lemma_distinct_bound, lemma_max_dds_bound, lemma_repeat_bound
from tricensus.census import CensusReport, TriangleClass, census, point_census, point_censuses, triangle_class_of
from tricensus.exactnum import ContractError, QuadExt
from tricensus.generators import orthoplex, pentagon, simplex, square_center
from tricensus.geometry import Configuration, DistanceMatrix

PHI2 = QuadExt(F(3, 2), F(1, 2), 5)


def sides(report):
    return [tuple(t.sides2) for t in report.classes]


def test_octahedron():
    rep = census(orthoplex(3))
    assert sides(rep) == [(2, 2, 2), (2, 2, 4)]
    assert [c for _, c in rep.triangle_classes] == [8, 12]
    assert rep.distance_classes == ((2, 12), (4, 3))
    assert rep.collinear_triple_count == 0
    assert rep.classes[0].is_equilateral and rep.classes[1].is_isosceles


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_orthoplex_counts(d):
    rep = census(orthoplex(d))
    n = 2 * d
    iso = d * (2 * d - 2)
    assert dict(rep.triangle_classes) == {TriangleClass((2, 2, 2)): n * (n - 1) * (n - 2) // 6 - iso,
                                          TriangleClass((2, 2, 4)): iso}
    assert rep.distances == [2, 4]


def test_square_is_one_triangle():
    rep = census(orthoplex(2))
    assert sides(rep) == [(2, 2, 4)] and rep.n_distances == 2


def test_simplex():
    rep = census(simplex(4))
    assert rep.n_triangles == 1 and rep.triangle_classes[0][1] == 10
    assert census(simplex(1)).n_triangles == 0


def test_square_with_center():
    rep = census(square_center())
    assert sides(rep) == [(1, 1, 2), (2, 2, 4)]
    # center to vertex, side, diagonal
    assert rep.distances == [1, 2, 4]
    assert rep.collinear_triple_count == 2


def test_pentagon():
    rep = census(pentagon())
    assert sides(rep) == [(1, 1, PHI2), (1, PHI2, PHI2)]
    assert rep.distance_classes == ((1, 5), (PHI2, 5))


def test_triangle_class_of():
    o = orthoplex(3).points
    assert triangle_class_of(o[0], o[2], o[4]).is_equilateral
    assert triangle_class_of(o[0], o[1], o[2]).sides2 == (2, 2, 4)
    line = [(QuadExt(k, 0, 0), QuadExt(0, 0, 0)) for k in range(3)]
    assert triangle_class_of(*line) is None
    with pytest.raises(ContractError):
        TriangleClass((1, 4, 9))  # 1 + 2 = 3
    with pytest.raises(ContractError):
        TriangleClass((1, 1, 4))
    cfg = Configuration(2, [(0, 0), (1, 0), (2, 0)])
    rep = census(cfg)
    assert rep.n_triangles == 0 and rep.collinear_triple_count == 1


def test_point_census():
    pc = point_census(orthoplex(3), 0)
    assert (pc.n_distinct, pc.m_repeated) == (2, 1)
    assert {(p.n_distinct, p.m_repeated) for p in point_censuses(simplex(3))} == {(1, 1)}


@pytest.fixture
def repeated_point():
    """P at the origin with d1 once, d2 twice and d3 twice, no three points on a line through P."""
    return Configuration(3, [(0, 0, 0), (1, 0, 0), (0, 2, 0), (0, 0, 2), (2, 2, 1), (2, 1, 2)])


def test_point_with_repeated_distances(repeated_point):
    pc = point_census(repeated_point, 0)
    assert (pc.n_distinct, pc.m_repeated) == (3, 2)
    assert lemma_repeat_bound(3, 2) == 3
    assert census(repeated_point).n_triangles >= 3


def test_distance_matrix_matches_coordinates():
    for cfg in (orthoplex(3), square_center(), pentagon()):
        a, b = census(cfg), census(cfg.distance_matrix)
        assert a.triangle_classes == b.triangle_classes
        assert a.distance_classes == b.distance_classes


def test_serialization_round_trip():
    for cfg in (orthoplex(3), pentagon(), square_center()):
        rep = census(cfg)
        data = json.loads(json.dumps(rep.to_dict()))
        assert CensusReport.from_dict(data) == rep
        assert CensusReport.from_dict(data).to_dict() == rep.to_dict()
    csv = census(pentagon()).to_csv().splitlines()
    assert csv[0] == "kind,s1,s2,s3,count,approx"
    assert csv[1].startswith("distance,1,,,5,")


coord = st.integers(-3, 3)


def configs(dim):
    return st.lists(st.tuples(*[coord] * dim), min_size=3, max_size=8, unique=True).map(
        lambda pts: Configuration(dim, pts))


any_config = st.sampled_from([2, 3, 4]).flatmap(configs)


@settings(max_examples=80, deadline=None)
@given(any_config, st.randoms(use_true_random=False))
def test_invariant_under_isometry_and_relabeling(cfg, rnd):
    rep = census(cfg)
    perm = list(range(cfg.dim))
    rnd.shuffle(perm)
    signs = [rnd.choice((1, -1)) for _ in perm]
    shift = [F(rnd.randint(-5, 5), rnd.randint(1, 3)) for _ in perm]
    pts = [tuple(signs[k] * p[perm[k]] + shift[k] for k in range(cfg.dim)) for p in cfg.points]
    rnd.shuffle(pts)
    moved = census(Configuration(cfg.dim, pts))
    assert moved.triangle_classes == rep.triangle_classes
    assert moved.distance_classes == rep.distance_classes


@settings(max_examples=50, deadline=None)
@given(any_config, st.fractions(min_value=F(1, 5), max_value=5).filter(lambda x: x > 0))
def test_scaling(cfg, lam):
    rep = census(cfg)
    scaled = census(Configuration(cfg.dim, [[lam * c for c in p] for p in cfg.points]))
    assert [t.sides2 for t in scaled.classes] == [tuple(s * lam * lam for s in t.sides2) for t in rep.classes]
    assert [c for _, c in scaled.triangle_classes] == [c for _, c in rep.triangle_classes]


@settings(max_examples=50, deadline=None)
@given(any_config)
def test_monotone_under_subsets(cfg):
    full = set(census(cfg).classes)
    sub = cfg.subset(range(len(cfg) - 1))
    assert set(census(sub).classes) <= full


@settings(max_examples=80, deadline=None)
@given(any_config)
def test_max_dds_and_fast_kernel(cfg):
    rep = census(cfg)
    if rep.n_triangles:
        assert rep.n_distances <= lemma_max_dds_bound(rep.n_triangles)
    sq = [[int(v.a) for v in row] for row in cfg.distance_matrix.sq]
    for mod in kernels.implementations().values():
        assert mod.census_counts(sq) == (rep.n_distances, rep.n_triangles, rep.collinear_triple_count)


@settings(max_examples=80, deadline=None)
@given(any_config)
def test_point_bounds_where_no_line_passes_through(cfg):
    from itertools import combinations
    rep = census(cfg)
    n = len(cfg)
    for i in range(n):
        if any(cfg.triple_collinear(i, j, k) for j, k in combinations([x for x in range(n) if x != i], 2)):
            continue
        pc = point_census(cfg, i)
        assert rep.n_triangles >= lemma_distinct_bound(pc.n_distinct)
        assert rep.n_triangles >= lemma_repeat_bound(pc.n_distinct, pc.m_repeated)


def test_random_irrational_configurations_agree_with_matrix():
    rnd = random.Random(7)
    for _ in range(20):
        pts = set()
        while len(pts) < 5:
            pts.add(tuple(QuadExt(rnd.randint(-2, 2), rnd.randint(-1, 1), 3) for _ in range(2)))
        cfg = Configuration(2, sorted(pts), 3)
        a, b = census(cfg), census(cfg.distance_matrix)
        assert a == b

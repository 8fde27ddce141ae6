from fractions import Fraction as F

import pytest

from tricensus.census import census
from tricensus.exactnum import ContractError
from tricensus.generators import fig1_lattice_points, lattice_points, orthoplex, pentagon, simplex, square_center
from tricensus.geometry import DegenerateInputError, DistanceMatrix
from tricensus.search import (
    SearchSpec,
    augment_orthoplex,
    case_predicates,
    grid_values,
    is_orthoplex,
    lattice_enumerate,
    lemma_checks,
    orthoplex_match,
    perturb_orthoplex,
    perturb_vertex,
)


def test_grid_values():
    assert grid_values(F(1, 2), 1) == [-1, F(-1, 2), 0, F(1, 2), 1]
    with pytest.raises(ContractError):
        grid_values(0, 1)


def test_augment_single_candidates():
    base = orthoplex(3)
    assert census(base.with_point((0, 0, 0))).n_triangles >= 3
    assert census(base.with_point((2, 0, 0))).n_triangles >= 3
    res = augment_orthoplex(3, candidates=[(0, 0, 0), (2, 0, 0)])
    assert res.candidates_tested == 2 and not res.violations
    with pytest.raises(DegenerateInputError):
        augment_orthoplex(3, candidates=[(1, 0, 0)])


def test_augment_grid_d3():
    res = augment_orthoplex(3)
    assert res.candidates_tested == 9 ** 3 - 6
    assert res.violations == [] and res.min_triangle_classes_observed >= 3


def test_augment_is_thread_invariant():
    a = augment_orthoplex(3, radius=1, threads=1)
    b = augment_orthoplex(3, radius=1, threads=3)
    assert a.rows == b.rows and a.summary() == b.summary()


def test_augment_budget():
    res = augment_orthoplex(3, budget=10)
    assert res.candidates_tested == 10 and not res.completed


def test_perturb_vertex():
    base = orthoplex(3)
    assert census(perturb_vertex(base, 0, (-1, F(1, 2), 0))).n_triangles >= 3
    with pytest.raises(DegenerateInputError):
        perturb_vertex(base, 0, (-1, 1, 0))


def test_perturb_d3():
    res = perturb_orthoplex(3)
    assert res.candidates_tested == 6 * 26
    assert res.violations == []


@pytest.mark.slow
def test_perturb_and_augment_d4():
    assert perturb_orthoplex(4).violations == []
    assert augment_orthoplex(4, threads=2).violations == []


def test_perturb_counts_coincidences():
    # a step of 1 lets a vertex land on another
    res = perturb_orthoplex(3, offsets=(-1, 0, 1))
    assert res.rejected > 0 and res.violations == []


def test_orthoplex_match():
    assert orthoplex_match(orthoplex(3)).r2 == 1
    assert orthoplex_match(orthoplex(4, 3)).dim == 4
    assert is_orthoplex(orthoplex(3, 4)) and is_orthoplex(orthoplex(3, 4), 4)
    assert not is_orthoplex(orthoplex(3, 4), 1)
    assert orthoplex_match(square_center()) is None
    assert orthoplex_match(simplex(3)) is None
    # two distances in ratio 2 but a point with two far partners
    sq = [[0, 2, 2, 4], [2, 0, 4, 2], [2, 4, 0, 4], [4, 2, 4, 0]]
    assert orthoplex_match(DistanceMatrix(sq)) is None
    # relabeled orthoplex still matches
    perm = [3, 0, 5, 1, 4, 2]
    assert is_orthoplex(orthoplex(3).distance_matrix.permuted(perm))


def test_case_predicates():
    r = case_predicates(orthoplex(3))
    assert (r.max_dds, r.elim_dds, r.tri_geom) == ("pass", "pass", "pass")
    r = case_predicates(pentagon())
    assert (r.elim_dds, r.tri_geom) == ("skipped", "skipped") and r.affine_dim == 2
    r = case_predicates(simplex(3))
    assert r.n_triangles == 1 and r.tri_geom == "skipped" and r.ok


def test_case_predicates_needs_enough_points():
    r = case_predicates(orthoplex(3).subset([0, 2, 4, 5]))
    assert r.affine_dim == 3 and r.tri_geom == "skipped"


def test_lemma_checks():
    out = lemma_checks(orthoplex(3))
    assert {c["status"] for c in out} == {"pass"}
    assert {c["lemma"] for c in out} == {"max_dds", "distinct_bound", "repeat_bound", "elim_dds", "tri_geom"}
    skipped = [c for c in lemma_checks(square_center(), "distinct_bound") if c["status"] == "skipped"]
    assert len(skipped) == 5
    with pytest.raises(ContractError):
        lemma_checks(orthoplex(3), "nope")


def test_lattice_examples():
    assert lattice_enumerate(3, lattice_points("rhombus", 3, 4)).best_size == 7
    assert lattice_enumerate(1, lattice_points("hexagon", 2)).best_size == 3
    two = lattice_enumerate(2, lattice_points("hexagon", 2))
    assert two.best_size == 4 and two.completed
    assert census(pentagon()).n_distances == 2 and len(pentagon()) == 5


@pytest.mark.parametrize("k, size", [(3, 7), (4, 9), (5, 12), (6, 13)])
def test_lattice_rediscovers_fig1_counts(k, size):
    res = lattice_enumerate(k, lattice_points("hexagon", 2))
    assert res.best_size == size and res.completed
    assert size == len(fig1_lattice_points(k))


def test_lattice_budget_flags_partial():
    res = lattice_enumerate(5, lattice_points("hexagon", 2), node_limit=20)
    assert not res.completed


def test_search_spec():
    res = SearchSpec("lattice", k=3, size=1).run()
    assert res.best_size == 7
    with pytest.raises(ContractError):
        SearchSpec("walk")
    with pytest.raises(ContractError):
        SearchSpec("augment", grid_step=0)

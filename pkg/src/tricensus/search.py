"""Desk-scale searches around the orthoplex and on the triangular lattice.

None of this proves anything about a continuum of configurations.  It
checks finite rational grids exhaustively and reports every candidate that
breaks the predicted triangle count.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import lcm

from . import kernels
from .bounds import lemma_distinct_bound, lemma_max_dds_bound, lemma_repeat_bound
from .census import census, point_census
from .exactnum import ContractError, render
from .generators import lattice_configuration, lattice_sq_norm, orthoplex
from .geometry import (
    Configuration,
    DegenerateInputError,
    DistanceMatrix,
    NotEuclideanError,
    as_distance_matrix,
    embedding_rank,
)

log = logging.getLogger(__name__)

__all__ = [
    "SearchSpec",
    "SearchResult",
    "Violation",
    "CandidateRow",
    "OrthoplexMatch",
    "orthoplex_match",
    "is_orthoplex",
    "grid_values",
    "perturb_vertex",
    "augment_orthoplex",
    "perturb_orthoplex",
    "case_predicates",
    "CaseReport",
    "lemma_checks",
    "lattice_enumerate",
]


@dataclass(frozen=True)
class CandidateRow:
    candidate: tuple  # exact coordinates (text)
    vertex: int | None  # moved vertex for perturbations
    n_triangles: int
    n_distances: int
    violation: bool


@dataclass(frozen=True)
class Violation:
    candidate: tuple
    vertex: int | None
    n_triangles: int
    n_distances: int
    classes: tuple


@dataclass
class SearchResult:
    mode: str
    candidates_tested: int = 0
    violations: list = field(default_factory=list)
    min_triangle_classes_observed: int | None = None
    rejected: int = 0
    completed: bool = True
    rows: list = field(default_factory=list)
    best_size: int | None = None
    best_subset: tuple = ()

    def to_csv(self) -> str:
        if self.mode == "lattice":
            lines = ["a,b"] + [f"{a},{b}" for a, b in self.best_subset]
            return "\n".join(lines) + "\n"
        lines = ["candidate,vertex,triangle_classes,distance_classes,violation"]
        for r in self.rows:
            vertex = "" if r.vertex is None else str(r.vertex)
            lines.append(f"\"{' '.join(r.candidate)}\",{vertex},{r.n_triangles},{r.n_distances},{int(r.violation)}")
        return "\n".join(lines) + "\n"

    def summary(self) -> dict:
        out = {
            "mode": self.mode,
            "candidates_tested": self.candidates_tested,
            "rejected": self.rejected,
            "completed": self.completed,
            "min_triangle_classes_observed": self.min_triangle_classes_observed,
            "violations": [
                {"candidate": list(v.candidate), "vertex": v.vertex, "triangle_classes": v.n_triangles,
                 "distance_classes": v.n_distances, "classes": list(v.classes)}
                for v in self.violations
            ],
        }
        if self.best_size is not None:
            out["best_size"] = self.best_size
            out["best_subset"] = [list(p) for p in self.best_subset]
        return out


# ---------------------------------------------------------------- orthoplex test

@dataclass(frozen=True)
class OrthoplexMatch:
    dim: int
    r2: Fraction  # squared circumradius
    antipodes: tuple  # antipodes[i] = index opposite point i


def orthoplex_match(obj) -> OrthoplexMatch | None:
    """Recognize an orthoplex from its squared distances, up to relabeling and scale.

    Needs an even number 2d >= 4 of points, exactly two squared distances
    x and 2x, and every point at 2x from exactly one other point.
    """
    dm = as_distance_matrix(obj)
    n = dm.n
    if n < 4 or n % 2:
        return None
    values = sorted({dm.sq[i][j] for i, j in combinations(range(n), 2)})
    if len(values) != 2 or values[1] != values[0] * 2:
        return None
    near, far = values
    antipodes = []
    for i in range(n):
        opp = [j for j in range(n) if j != i and dm.sq[i][j] == far]
        if len(opp) != 1:
            return None
        antipodes.append(opp[0])
    if not values[0].is_rational():
        raise ContractError("orthoplex scale outside Q")
    return OrthoplexMatch(n // 2, near.a / 2, tuple(antipodes))


def is_orthoplex(obj, r2=None) -> bool:
    """Similar to an orthoplex; with ``r2`` given, congruent to ``orthoplex(d, r2)``."""
    match = orthoplex_match(obj)
    if match is None:
        return False
    return r2 is None or match.r2 == Fraction(r2)


# ---------------------------------------------------------------- grids

def grid_values(step, radius) -> list[Fraction]:
    step, radius = Fraction(step), Fraction(radius)
    if step <= 0:
        raise ContractError("grid step must be positive")
    if radius < 0:
        raise ContractError("grid radius must be nonnegative")
    k = int(radius / step)
    return [i * step for i in range(-k, k + 1)]


def _integer_points(points, scale: int):
    return [tuple(int(c * scale) for c in p) for p in points]


def _int_sq_matrix(pts):
    n = len(pts)
    return [[sum((a - b) * (a - b) for a, b in zip(pts[i], pts[j])) for j in range(n)] for i in range(n)]


def _count_chunk(args):
    pts_list, impl_name = args
    impl = kernels.implementations()[impl_name] if impl_name else None
    return [kernels.census_counts(_int_sq_matrix(pts), impl=impl) for pts in pts_list]


def _evaluate(point_sets: list, threads: int, impl_name: str | None):
    """Census counts for many integer point sets; order-preserving."""
    if threads <= 1 or len(point_sets) < 64:
        return _count_chunk((point_sets, impl_name))
    chunk = -(-len(point_sets) // (threads * 4))
    parts = [(point_sets[i:i + chunk], impl_name) for i in range(0, len(point_sets), chunk)]
    out = []
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for res in pool.map(_count_chunk, parts):
            out.extend(res)
    return out


def _fmt_point(p) -> tuple:
    return tuple(render(c) if not isinstance(c, Fraction) else
                 (str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}")
                 for c in p)


def _base_orthoplex(d: int) -> Configuration:
    base = orthoplex(d, 1)
    assert isinstance(base, Configuration)
    return base


# ---------------------------------------------------------------- augment

def augment_orthoplex(d: int, step=Fraction(1, 2), radius=2, *, candidates=None,
                      budget: int = 0, threads: int = 1, impl: str | None = None) -> SearchResult:
    """Append each grid point to orthoplex(d) and demand at least 3 triangle classes."""
    if not 3 <= d <= 5:
        raise ContractError(f"augment_orthoplex supports 3 <= d <= 5, got {d}")
    base = _base_orthoplex(d)
    verts = {tuple(c.a for c in p) for p in base.points}
    if candidates is None:
        vals = grid_values(step, radius)
        candidates = [p for p in product(vals, repeat=d) if p not in verts]
        scale = Fraction(step).denominator
    else:
        candidates = [tuple(Fraction(c) for c in p) for p in candidates]
        bad = [p for p in candidates if p in verts]
        if bad:
            raise DegenerateInputError(f"candidate {bad[0]} coincides with a vertex")
        scale = lcm(1, *(c.denominator for p in candidates for c in p))
    if not candidates:
        raise ContractError("empty candidate grid")
    result = SearchResult("augment")
    if budget and len(candidates) > budget:
        candidates = candidates[:budget]
        result.completed = False
    base_int = _integer_points([[c.a for c in p] for p in base.points], scale)
    sets = [base_int + [tuple(int(c * scale) for c in p)] for p in candidates]
    counts = _evaluate(sets, threads, impl)
    for p, (nd, nt, _) in zip(candidates, counts):
        bad = nt <= 2
        if bad:
            rep = census(base.with_point(p))
            if rep.n_triangles <= 2:
                result.violations.append(Violation(_fmt_point(p), None, rep.n_triangles, rep.n_distances,
                                                   tuple(str(t) for t in rep.classes)))
            else:
                raise AssertionError(f"fast census disagrees with exact census at {p}")
        result.rows.append(CandidateRow(_fmt_point(p), None, nt, nd, bad))
    result.candidates_tested = len(candidates)
    result.min_triangle_classes_observed = min(nt for _, nt, _ in counts)
    log.info("augment d=%d: %d candidates, %d violations", d, len(candidates), len(result.violations))
    return result


# ---------------------------------------------------------------- perturb

def perturb_vertex(cfg: Configuration, i: int, offset) -> Configuration:
    """Move point ``i`` by ``offset``; coincidence with another point is rejected."""
    p = cfg.points[i]
    if len(offset) != len(p):
        raise ContractError("offset dimension mismatch")
    moved = tuple(c + Fraction(o) for c, o in zip(p, offset))
    return cfg.replace_point(i, moved)


def perturb_orthoplex(d: int, offsets=(Fraction(-1, 2), Fraction(0), Fraction(1, 2)), *,
                      budget: int = 0, threads: int = 1, impl: str | None = None) -> SearchResult:
    """Move one orthoplex vertex by each nonzero grid offset.

    A perturbed set with at most 2 triangle classes must itself be an
    orthoplex (distance-matrix test); anything else is a violation.
    """
    if not 3 <= d <= 4:
        raise ContractError(f"perturb_orthoplex supports 3 <= d <= 4, got {d}")
    offsets = [Fraction(o) for o in offsets]
    base = _base_orthoplex(d)
    base_pts = [[c.a for c in p] for p in base.points]
    scale = lcm(1, *(o.denominator for o in offsets))
    jobs = []
    for i in range(len(base_pts)):
        for off in product(offsets, repeat=d):
            if any(off):
                jobs.append((i, off))
    result = SearchResult("perturb")
    if budget and len(jobs) > budget:
        jobs = jobs[:budget]
        result.completed = False
    kept, sets = [], []
    for i, off in jobs:
        moved = tuple(c + o for c, o in zip(base_pts[i], off))
        if any(tuple(q) == moved for j, q in enumerate(base_pts) if j != i):
            result.rejected += 1
            continue
        pts = [tuple(q) for q in base_pts]
        pts[i] = moved
        kept.append((i, off, moved))
        sets.append(_integer_points(pts, scale))
    counts = _evaluate(sets, threads, impl)
    for (i, off, moved), (nd, nt, _) in zip(kept, counts):
        bad = False
        if nt <= 2:
            cfg = perturb_vertex(base, i, off)
            rep = census(cfg)
            bad = orthoplex_match(cfg) is None
            if bad:
                result.violations.append(Violation(_fmt_point(moved), i, rep.n_triangles, rep.n_distances,
                                                   tuple(str(t) for t in rep.classes)))
        result.rows.append(CandidateRow(_fmt_point(moved), i, nt, nd, bad))
    result.candidates_tested = len(kept)
    result.min_triangle_classes_observed = min((nt for _, nt, _ in counts), default=None)
    return result


# ---------------------------------------------------------------- predicates

@dataclass
class CaseReport:
    n_points: int
    ambient_dim: int | None
    affine_dim: int
    n_triangles: int
    n_distances: int
    max_dds: str
    elim_dds: str
    tri_geom: str
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return "fail" not in (self.max_dds, self.elim_dds, self.tri_geom)

    def to_dict(self) -> dict:
        return {
            "n_points": self.n_points,
            "ambient_dim": self.ambient_dim,
            "affine_dim": self.affine_dim,
            "triangle_classes": self.n_triangles,
            "distance_classes": self.n_distances,
            "max_dds": self.max_dds,
            "elim_dds": self.elim_dds,
            "tri_geom": self.tri_geom,
            "notes": list(self.notes),
        }


def case_predicates(cfg) -> CaseReport:
    """Check a configuration against the known structure of two-triangle sets.

    The structural checks apply when the set has exactly 2 triangle classes,
    affine dimension d >= 3 and at least 2d points; otherwise they are
    reported as skipped.
    """
    rep = census(cfg)
    dm = as_distance_matrix(cfg)
    try:
        d = embedding_rank(dm)
    except NotEuclideanError:
        raise ContractError("distance matrix is not Euclidean") from None
    ambient = cfg.dim if isinstance(cfg, Configuration) else None
    t, k, n = rep.n_triangles, rep.n_distances, dm.n
    notes = []
    if t >= 1:
        bound = lemma_max_dds_bound(t)
        max_dds = "pass" if k <= bound else "fail"
        notes.append(f"distances {k} <= 2t+1 = {bound}")
    else:
        max_dds = "skipped"
        notes.append("no noncollinear triple")
    if t == 2 and d >= 3 and n >= 2 * d:
        elim = "pass" if k == 2 else "fail"
        a, b = rep.classes
        equ = [c for c in (a, b) if c.is_equilateral]
        tri_geom = "fail"
        if len(equ) == 1:
            x = equ[0].sides2[0]
            other = b if equ[0] is a else a
            s = other.sides2
            if other.is_isosceles and sorted(s).count(x) == 2:
                tri_geom = "pass"
        notes.append(f"classes {a} and {b}")
    else:
        elim = tri_geom = "skipped"
        notes.append(f"needs 2 triangle classes, d >= 3, n >= 2d (t={t}, d={d}, n={n})")
    return CaseReport(n, ambient, d, t, k, max_dds, elim, tri_geom, notes)


def _points_on_collinear_triples(cfg) -> set[int]:
    out = set()
    n = len(cfg)
    for i, j, k in combinations(range(n), 3):
        if cfg.triple_collinear(i, j, k):
            out.update((i, j, k))
    return out


def lemma_checks(cfg, lemma: str = "all") -> list[dict]:
    """Evaluate lemma inequalities on one configuration.

    Each entry has ``lemma``, ``scope``, ``lhs``, ``rhs`` and ``status``
    (``pass``/``fail``/``skipped``).  The per-point covering bounds are
    skipped at points lying on a collinear triple, where a pair of distances
    need not appear in any triangle.
    """
    names = ("max_dds", "distinct_bound", "repeat_bound", "elim_dds", "tri_geom")
    if lemma != "all" and lemma not in names:
        raise ContractError(f"unknown lemma {lemma!r}")
    want = names if lemma == "all" else (lemma,)
    rep = census(cfg)
    t = rep.n_triangles
    out = []
    if "max_dds" in want:
        if t >= 1:
            b = lemma_max_dds_bound(t)
            out.append({"lemma": "max_dds", "scope": "configuration", "lhs": rep.n_distances, "rhs": b,
                        "relation": "<=", "status": "pass" if rep.n_distances <= b else "fail"})
        else:
            out.append({"lemma": "max_dds", "scope": "configuration", "lhs": rep.n_distances, "rhs": None,
                        "relation": "<=", "status": "skipped"})
    if "distinct_bound" in want or "repeat_bound" in want:
        on_line = _points_on_collinear_triples(as_distance_matrix(cfg) if not isinstance(cfg, Configuration) else cfg)
        for i in range(len(cfg)):
            pc = point_census(cfg, i)
            skip = i in on_line
            if "distinct_bound" in want:
                b = lemma_distinct_bound(pc.n_distinct)
                out.append({"lemma": "distinct_bound", "scope": f"point {i}", "n": pc.n_distinct,
                            "lhs": t, "rhs": b, "relation": ">=",
                            "status": "skipped" if skip else ("pass" if t >= b else "fail")})
            if "repeat_bound" in want:
                b = lemma_repeat_bound(pc.n_distinct, pc.m_repeated)
                out.append({"lemma": "repeat_bound", "scope": f"point {i}", "n": pc.n_distinct,
                            "m": pc.m_repeated, "lhs": t, "rhs": b, "relation": ">=",
                            "status": "skipped" if skip else ("pass" if t >= b else "fail")})
    if "elim_dds" in want or "tri_geom" in want:
        cr = case_predicates(cfg)
        if "elim_dds" in want:
            out.append({"lemma": "elim_dds", "scope": "configuration", "lhs": rep.n_distances, "rhs": 2,
                        "relation": "==", "status": cr.elim_dds})
        if "tri_geom" in want:
            out.append({"lemma": "tri_geom", "scope": "configuration",
                        "lhs": [str(c) for c in rep.classes], "rhs": "(x,x,x) and (x,x,y)",
                        "relation": "shape", "status": cr.tri_geom})
    return out


# ---------------------------------------------------------------- lattice

def lattice_enumerate(k: int, points, *, size_cap: int = 0, node_limit: int = 0,
                      impl: str | None = None) -> SearchResult:
    """Largest subset of a triangular-lattice patch with exactly ``k`` distances.

    ``points`` are integer lattice coordinates (see ``generators.lattice_points``).
    The search is exhaustive unless ``node_limit`` cuts it short, in which
    case ``completed`` is False and the size is only a lower bound.
    """
    pts = [tuple(p) for p in points]
    if len(set(pts)) != len(pts):
        raise DegenerateInputError("repeated lattice point")
    if k < 1:
        raise ContractError("k must be positive")
    norms = {}
    dist = []
    for a1, b1 in pts:
        row = []
        for a2, b2 in pts:
            v = lattice_sq_norm(a1 - a2, b1 - b2)
            row.append(norms.setdefault(v, len(norms)))
        dist.append(row)
    mod = kernels.implementations()[impl] if impl else None
    size, subset, nodes, done = kernels.max_k_distance_subset(dist, k, size_cap, node_limit, impl=mod)
    result = SearchResult("lattice", candidates_tested=nodes, completed=bool(done))
    result.best_size = size
    result.best_subset = tuple(pts[i] for i in subset)
    if size:
        rep = census(lattice_configuration(result.best_subset))
        if rep.n_distances != k:
            raise AssertionError("lattice search result does not have k distances")
    return result


@dataclass(frozen=True)
class SearchSpec:
    mode: str
    dim: int = 3
    grid_step: Fraction = Fraction(1, 2)
    grid_radius: Fraction = Fraction(2)
    budget: int = 0
    k: int = 3
    shape: str = "hexagon"
    size: int = 2
    size_cap: int = 0

    def __post_init__(self):
        if self.mode not in ("augment", "perturb", "lattice"):
            raise ContractError(f"unknown search mode {self.mode!r}")
        if Fraction(self.grid_step) <= 0:
            raise ContractError("grid step must be positive")
        if self.budget < 0:
            raise ContractError("budget must be finite and nonnegative")

    def run(self, threads: int = 1) -> SearchResult:
        if self.mode == "augment":
            return augment_orthoplex(self.dim, self.grid_step, self.grid_radius,
                                     budget=self.budget, threads=threads)
        if self.mode == "perturb":
            step = Fraction(self.grid_step)
            offs = grid_values(step, self.grid_radius)
            return perturb_orthoplex(self.dim, offs, budget=self.budget, threads=threads)
        from .generators import lattice_points
        return lattice_enumerate(self.k, lattice_points(self.shape, self.size),
                                 size_cap=self.size_cap, node_limit=self.budget)

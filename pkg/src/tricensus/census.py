"""Distinct-triangle and distinct-distance census of a configuration."""
from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm

from .exactnum import ContractError, QuadExt, as_quad, parse, render
from .geometry import (
    Configuration,
    DistanceMatrix,
    as_distance_matrix,
    cayley_menger_triangle,
    is_collinear,
    squared_distance,
)

__all__ = [
    "TriangleClass",
    "CensusReport",
    "PointCensus",
    "triangle_class_of",
    "census",
    "point_census",
    "point_censuses",
]


@dataclass(frozen=True, order=False)
class TriangleClass:
    """Congruence class of a noncollinear triple, keyed by its sorted squared sides."""

    sides2: tuple

    def __post_init__(self):
        s = tuple(self.sides2)
        D = next((v.D for v in s if isinstance(v, QuadExt)), 0)
        s = tuple(as_quad(v, D) for v in s)
        if len(s) != 3:
            raise ContractError("a triangle class has three sides")
        if s[0] > s[1] or s[1] > s[2]:
            raise ContractError(f"sides must be sorted nondecreasing: {s}")
        if s[0].sign() <= 0:
            raise ContractError("squared sides must be positive")
        if cayley_menger_triangle(*s).sign() <= 0:
            raise ContractError(f"degenerate triangle {tuple(map(str, s))}")
        object.__setattr__(self, "sides2", s)

    @classmethod
    def from_sides(cls, x, y, z) -> "TriangleClass":
        return cls(tuple(sorted((x, y, z))))

    @property
    def is_equilateral(self) -> bool:
        return self.sides2[0] == self.sides2[2]

    @property
    def is_isosceles(self) -> bool:
        """Exactly two equal sides (equilateral excluded)."""
        a, b, c = self.sides2
        return (a == b) != (b == c)

    @property
    def is_scalene(self) -> bool:
        a, b, c = self.sides2
        return a != b and b != c

    def __lt__(self, other: "TriangleClass") -> bool:
        return self.sides2 < other.sides2

    def __str__(self) -> str:
        return "(" + ", ".join(render(s) for s in self.sides2) + ")"


def triangle_class_of(a, b, c) -> TriangleClass | None:
    """Class of the triangle ``abc``; ``None`` when the points are collinear."""
    if a == b or b == c or a == c:
        raise ContractError("coincident points")
    if is_collinear(a, b, c):
        return None
    return TriangleClass.from_sides(squared_distance(a, b), squared_distance(b, c), squared_distance(a, c))


@dataclass(frozen=True)
class PointCensus:
    point: int
    n_distinct: int
    m_repeated: int


@dataclass(frozen=True)
class CensusReport:
    n_points: int
    D: int
    distance_classes: tuple  # ((value, multiplicity), ...) ascending
    triangle_classes: tuple  # ((TriangleClass, count), ...) ascending by sides
    collinear_triple_count: int

    @property
    def n_distances(self) -> int:
        return len(self.distance_classes)

    @property
    def n_triangles(self) -> int:
        return len(self.triangle_classes)

    @property
    def distances(self) -> list:
        return [v for v, _ in self.distance_classes]

    @property
    def classes(self) -> list[TriangleClass]:
        return [t for t, _ in self.triangle_classes]

    def check(self) -> None:
        n = self.n_points
        if sum(c for _, c in self.distance_classes) != n * (n - 1) // 2:
            raise AssertionError("distance multiplicities do not sum to C(n, 2)")
        total = sum(c for _, c in self.triangle_classes) + self.collinear_triple_count
        if total != n * (n - 1) * (n - 2) // 6:
            raise AssertionError("triangle counts do not sum to C(n, 3)")

    def to_dict(self) -> dict:
        return {
            "format": 1,
            "n_points": self.n_points,
            "D": self.D,
            "distance_classes": [
                {"sq": render(v), "count": c, "approx": float(v)} for v, c in self.distance_classes
            ],
            "triangle_classes": [
                {"sides2": [render(s) for s in t.sides2], "count": c,
                 "approx": [float(s) for s in t.sides2]}
                for t, c in self.triangle_classes
            ],
            "collinear_triple_count": self.collinear_triple_count,
            "n_distances": self.n_distances,
            "n_triangles": self.n_triangles,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CensusReport":
        D = int(data["D"])
        dists = tuple((parse(e["sq"], D), int(e["count"])) for e in data["distance_classes"])
        tris = tuple(
            (TriangleClass(tuple(parse(s, D) for s in e["sides2"])), int(e["count"]))
            for e in data["triangle_classes"]
        )
        return cls(int(data["n_points"]), D, dists, tris, int(data["collinear_triple_count"]))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["kind", "s1", "s2", "s3", "count", "approx"])
        for v, c in self.distance_classes:
            w.writerow(["distance", render(v), "", "", c, f"{float(v):.12g}"])
        for t, c in self.triangle_classes:
            w.writerow(["triangle", *(render(s) for s in t.sides2), c,
                        " ".join(f"{float(s):.12g}" for s in t.sides2)])
        w.writerow(["collinear", "", "", "", self.collinear_triple_count, ""])
        return buf.getvalue()


def _integer_form(dm: DistanceMatrix):
    """Rational matrix rescaled to integers: returns ``(rows, scale)``, entry = int / scale."""
    n = dm.n
    scale = 1
    for i in range(n):
        for j in range(i + 1, n):
            scale = lcm(scale, dm.sq[i][j].a.denominator)
    rows = [[int(dm.sq[i][j].a * scale) for j in range(n)] for i in range(n)]
    return rows, scale


def census(cfg) -> CensusReport:
    """Exact census of a :class:`Configuration` or :class:`DistanceMatrix`."""
    dm = as_distance_matrix(cfg)
    n = dm.n
    rational = all(v.is_rational() for row in dm.sq for v in row)
    use_coords = isinstance(cfg, Configuration)

    if rational:
        rows, scale = _integer_form(dm)
        key = lambda i, j: rows[i][j]  # noqa: E731
    else:
        key = lambda i, j: dm.sq[i][j]  # noqa: E731

    dcount: Counter = Counter()
    for i, j in combinations(range(n), 2):
        dcount[key(i, j)] += 1

    tcount: Counter = Counter()
    collinear = 0
    for i, j, k in combinations(range(n), 3):
        x, y, z = sorted((key(i, j), key(j, k), key(i, k)))
        if use_coords:
            degenerate = is_collinear(cfg.points[i], cfg.points[j], cfg.points[k])
        else:
            degenerate = not cayley_menger_triangle(x, y, z)
        if degenerate:
            collinear += 1
        else:
            tcount[(x, y, z)] += 1

    if rational:
        conv = lambda v: QuadExt(Fraction(v, scale), 0, dm.D)  # noqa: E731
    else:
        conv = lambda v: v  # noqa: E731

    dists = tuple((conv(v), c) for v, c in sorted(dcount.items()))
    tris = tuple(
        (TriangleClass(tuple(conv(v) for v in t)), c) for t, c in sorted(tcount.items())
    )
    report = CensusReport(n, dm.D, dists, tris, collinear)
    report.check()
    return report


def point_census(cfg, i: int) -> PointCensus:
    dm = as_distance_matrix(cfg)
    if not 0 <= i < dm.n:
        raise IndexError(f"point index {i} out of range for {dm.n} points")
    counts = Counter(dm.sq[i][j] for j in range(dm.n) if j != i)
    return PointCensus(i, len(counts), sum(1 for c in counts.values() if c >= 2))


def point_censuses(cfg) -> list[PointCensus]:
    dm = as_distance_matrix(cfg)
    return [point_census(dm, i) for i in range(dm.n)]

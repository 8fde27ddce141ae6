"""Exact point configurations, distance matrices and elementary predicates.

A :class:`Configuration` holds coordinates; a :class:`DistanceMatrix` holds
only squared distances (the d-simplex lives here without irrational
coordinates).  Both feed the census through :func:`as_distance_matrix`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .exactnum import ContractError, QuadExt, as_quad

Point = tuple  # tuple[QuadExt, ...]

__all__ = [
    "Configuration",
    "DistanceMatrix",
    "DegenerateInputError",
    "EmptyLocusError",
    "NotEuclideanError",
    "squared_distance",
    "is_collinear",
    "cayley_menger_triangle",
    "gram_matrix",
    "embedding_rank",
    "circumcenter",
    "bisector_hyperplane",
    "equidistant_locus_check",
    "midpoint",
    "biequidistant_sphere_check",
    "solve_linear",
    "as_distance_matrix",
]


class DegenerateInputError(ContractError):
    """Points that were required to be in general position are not."""


class EmptyLocusError(ContractError):
    pass


class NotEuclideanError(ValueError):
    """A squared-distance matrix that no Euclidean point set realizes."""


def _point(coords: Sequence, D: int) -> Point:
    return tuple(as_quad(c, D) for c in coords)


def squared_distance(p: Point, q: Point) -> QuadExt:
    if len(p) != len(q):
        raise ContractError(f"dimension mismatch: {len(p)} vs {len(q)}")
    total = None
    for x, y in zip(p, q):
        diff = x - y
        term = diff * diff
        total = term if total is None else total + term
    if total is None:
        raise ContractError("points must have at least one coordinate")
    return total


def midpoint(a: Point, b: Point) -> Point:
    return tuple((x + y) * Fraction(1, 2) for x, y in zip(a, b))


def is_collinear(a: Point, b: Point, c: Point) -> bool:
    """True iff ``b - a`` and ``c - a`` are linearly dependent (all 2x2 minors zero)."""
    if not len(a) == len(b) == len(c):
        raise ContractError("dimension mismatch")
    u = [y - x for x, y in zip(a, b)]
    v = [y - x for x, y in zip(a, c)]
    for i, j in combinations(range(len(u)), 2):
        if u[i] * v[j] - u[j] * v[i]:
            return False
    return True


def cayley_menger_triangle(x2, y2, z2):
    """Sixteen times the squared area of a triangle with squared sides x2, y2, z2."""
    return 2 * (x2 * y2 + y2 * z2 + z2 * x2) - (x2 * x2 + y2 * y2 + z2 * z2)


@dataclass(frozen=True)
class Configuration:
    """A finite labeled point set in R^dim with coordinates in Q(sqrt(D))."""

    dim: int
    points: tuple
    D: int = 0
    labels: tuple | None = None

    def __init__(self, dim: int, points, D: int = 0, labels=None, *, validate: bool = True):
        if dim < 1:
            raise ContractError(f"dimension must be positive, got {dim}")
        pts = []
        for k, p in enumerate(points):
            if len(p) != dim:
                raise ContractError(f"point {k} has {len(p)} coordinates, expected {dim}")
            pts.append(_point(p, D))
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != len(pts):
                raise ContractError("labels and points differ in length")
        object.__setattr__(self, "dim", int(dim))
        object.__setattr__(self, "points", tuple(pts))
        object.__setattr__(self, "D", int(D))
        object.__setattr__(self, "labels", labels)
        if validate:
            seen = {}
            for k, p in enumerate(pts):
                if p in seen:
                    raise DegenerateInputError(f"points {seen[p]} and {k} coincide")
                seen[p] = k

    def __len__(self) -> int:
        return len(self.points)

    @cached_property
    def distance_matrix(self) -> "DistanceMatrix":
        n = len(self.points)
        zero = QuadExt(0, 0, self.D)
        rows = [[zero] * n for _ in range(n)]
        for i, j in combinations(range(n), 2):
            s = squared_distance(self.points[i], self.points[j])
            rows[i][j] = rows[j][i] = s
        return DistanceMatrix(rows, D=self.D, validate=False)

    def with_point(self, p, label: str | None = None) -> "Configuration":
        labels = None if self.labels is None else self.labels + (label or str(len(self.points)),)
        return Configuration(self.dim, self.points + (_point(p, self.D),), self.D, labels)

    def replace_point(self, i: int, p) -> "Configuration":
        pts = list(self.points)
        pts[i] = _point(p, self.D)
        return Configuration(self.dim, pts, self.D, self.labels)

    def subset(self, indices: Sequence[int]) -> "Configuration":
        labels = None if self.labels is None else tuple(self.labels[i] for i in indices)
        return Configuration(self.dim, [self.points[i] for i in indices], self.D, labels, validate=False)

    def triple_collinear(self, i: int, j: int, k: int) -> bool:
        return is_collinear(self.points[i], self.points[j], self.points[k])


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Symmetric matrix of squared distances with zero diagonal."""

    sq: tuple
    D: int = 0

    def __init__(self, sq, D: int = 0, *, validate: bool = True):
        rows = tuple(tuple(as_quad(v, D) for v in row) for row in sq)
        object.__setattr__(self, "sq", rows)
        object.__setattr__(self, "D", int(D))
        if validate:
            n = len(rows)
            for i in range(n):
                if len(rows[i]) != n:
                    raise ContractError("distance matrix must be square")
                if rows[i][i]:
                    raise ContractError(f"nonzero diagonal entry at {i}")
                for j in range(i + 1, n):
                    if rows[i][j] != rows[j][i]:
                        raise ContractError(f"asymmetric entries at ({i}, {j})")
                    if rows[i][j].sign() <= 0:
                        raise DegenerateInputError(f"nonpositive squared distance at ({i}, {j})")

    @property
    def n(self) -> int:
        return len(self.sq)

    def __len__(self) -> int:
        return len(self.sq)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return self.sq == other.sq

    def __hash__(self) -> int:
        return hash(self.sq)

    @property
    def distance_matrix(self) -> "DistanceMatrix":
        return self

    @cached_property
    def dim(self) -> int:
        return embedding_rank(self)

    def triple_collinear(self, i: int, j: int, k: int) -> bool:
        s = self.sq
        return not cayley_menger_triangle(s[i][j], s[j][k], s[i][k])

    def permuted(self, perm: Sequence[int]) -> "DistanceMatrix":
        return DistanceMatrix([[self.sq[a][b] for b in perm] for a in perm], self.D, validate=False)

    def subset(self, indices: Sequence[int]) -> "DistanceMatrix":
        return self.permuted(list(indices))


def as_distance_matrix(obj) -> DistanceMatrix:
    return obj if isinstance(obj, DistanceMatrix) else obj.distance_matrix


def gram_matrix(dm: DistanceMatrix, base: int = 0) -> list[list[QuadExt]]:
    """Gram matrix of the vectors ``p_i - p_base`` over all ``i != base``."""
    s = dm.sq
    idx = [i for i in range(dm.n) if i != base]
    half = Fraction(1, 2)
    return [[(s[base][i] + s[base][j] - s[i][j]) * half for j in idx] for i in idx]


def embedding_rank(dm: DistanceMatrix) -> int:
    """Minimal Euclidean dimension realizing ``dm``.

    Runs symmetric elimination on the Gram matrix, always pivoting on a
    positive diagonal entry.  Raises :class:`NotEuclideanError` when the Gram
    matrix is not positive semidefinite.
    """
    if dm.n <= 1:
        return 0
    g = [row[:] for row in gram_matrix(dm, 0)]
    m = len(g)
    active = list(range(m))
    rank = 0
    while active:
        pivot = None
        for i in active:
            s = g[i][i].sign()
            if s < 0:
                raise NotEuclideanError(f"negative pivot {g[i][i]} in Gram elimination")
            if s > 0 and pivot is None:
                pivot = i
        if pivot is None:
            # PSD with zero diagonal forces a zero block
            for i in active:
                for j in active:
                    if g[i][j]:
                        raise NotEuclideanError("zero diagonal with nonzero off-diagonal entry")
            break
        p = g[pivot][pivot]
        active.remove(pivot)
        for i in active:
            f = g[i][pivot] / p
            if f:
                for j in active:
                    g[i][j] = g[i][j] - f * g[pivot][j]
        rank += 1
    return rank


def solve_linear(A: list[list[QuadExt]], rhs: list[QuadExt]) -> list[QuadExt]:
    """Exact Gauss-Jordan solve of a square system; raises on singular ``A``."""
    n = len(A)
    M = [list(A[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            raise DegenerateInputError("singular linear system")
        M[col], M[piv] = M[piv], M[col]
        inv = M[col][col].inverse()
        M[col] = [v * inv for v in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return [M[i][n] for i in range(n)]


def _dot(u, v):
    total = None
    for x, y in zip(u, v):
        total = x * y if total is None else total + x * y
    return total


def circumcenter(points: Sequence[Point]) -> Point:
    """Center of the unique sphere through d+1 affinely independent points of R^d."""
    pts = [tuple(p) for p in points]
    if not pts:
        raise ContractError("need at least one point")
    d = len(pts[0])
    if len(pts) != d + 1 or any(len(p) != d for p in pts):
        raise ContractError(f"circumcenter needs exactly {d + 1} points in R^{d}")
    p0 = pts[0]
    n0 = _dot(p0, p0)
    A = [[2 * (x - y) for x, y in zip(p, p0)] for p in pts[1:]]
    rhs = [_dot(p, p) - n0 for p in pts[1:]]
    try:
        c = tuple(solve_linear(A, rhs))
    except DegenerateInputError:
        raise DegenerateInputError("points are affinely dependent") from None
    r2 = squared_distance(c, p0)
    for p in pts[1:]:
        if squared_distance(c, p) != r2:
            raise AssertionError("circumcenter failed its equidistance postcondition")
    return c


def bisector_hyperplane(a: Point, b: Point) -> tuple[tuple, QuadExt]:
    """``(normal, offset)`` with ``x . normal == offset`` iff ``|x-a| == |x-b|``."""
    if tuple(a) == tuple(b):
        raise DegenerateInputError("bisector of coincident points")
    normal = tuple(2 * (y - x) for x, y in zip(a, b))
    return normal, _dot(b, b) - _dot(a, a)


def equidistant_locus_check(a: Point, b: Point, x: Point) -> bool:
    result = squared_distance(x, a) == squared_distance(x, b)
    normal, offset = bisector_hyperplane(a, b)
    if (_dot(x, normal) == offset) != result:
        raise AssertionError("bisector hyperplane disagrees with equidistance")
    return result


def biequidistant_sphere_check(a: Point, b: Point, r2, x: Point) -> bool:
    """True iff ``x`` lies at squared distance ``r2`` from both ``a`` and ``b``.

    The locus is a (d-2)-sphere around the midpoint of ``ab``; the function
    cross-checks that characterization on every call.
    """
    ab2 = squared_distance(a, b)
    r2 = as_quad(r2, a[0].D) if not isinstance(r2, QuadExt) else r2
    rho2 = r2 - ab2 * Fraction(1, 4)
    if rho2.sign() <= 0:
        raise EmptyLocusError(f"squared radius {r2} does not exceed the squared half-gap {ab2 * Fraction(1, 4)}")
    direct = squared_distance(x, a) == r2 and squared_distance(x, b) == r2
    on_plane = equidistant_locus_check(a, b, x)
    via_midpoint = on_plane and squared_distance(x, midpoint(a, b)) == rho2
    if direct != via_midpoint:
        raise AssertionError("midpoint-sphere characterization disagrees with direct check")
    return direct

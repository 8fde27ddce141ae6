"""Exact constructions of the canonical configurations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .exactnum import ContractError, QuadExt
from .geometry import Configuration, DistanceMatrix

__all__ = [
    "GeneratorSpec",
    "orthoplex",
    "simplex",
    "square_center",
    "pentagon",
    "fig1_config",
    "FIG1_POINT_COUNTS",
    "lattice_points",
    "lattice_configuration",
    "lattice_sq_norm",
]

# Largest planar sets with exactly k distances, k = 2..6
FIG1_POINT_COUNTS = {2: 5, 3: 7, 4: 9, 5: 12, 6: 13}

# Triangular-lattice realizations in (a, b) coordinates, a*(1,0) + b*(1/2, sqrt3/2).
# Found by exhaustive search over the radius-2 hexagonal patch.
_FIG1_LATTICE = {
    3: ((0, 0), (1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)),
    4: ((-2, 0), (-2, 1), (-2, 2), (-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 0), (0, 1)),
    5: ((-2, 0), (-2, 1), (-2, 2), (-1, -1), (-1, 0), (-1, 1), (-1, 2), (0, -1), (0, 0),
        (0, 1), (1, -1), (1, 0)),
    6: ((-2, 1), (-1, -1), (-1, 0), (-1, 1), (-1, 2), (0, -1), (0, 0), (0, 1), (1, -2),
        (1, -1), (1, 0), (1, 1), (2, -1)),
}


def _rational_sqrt(q: Fraction) -> Fraction | None:
    q = Fraction(q)
    if q < 0:
        return None
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def orthoplex(d: int, r2=1) -> Configuration | DistanceMatrix:
    """The 2d points ``+-r e_i``.

    With a rational ``r`` the result carries coordinates; otherwise only the
    squared-distance matrix (2 r^2 between neighbours, 4 r^2 across) exists
    over Q and that is returned.
    """
    if d < 2:
        raise ContractError(f"orthoplex needs d >= 2, got {d}")
    r2 = Fraction(r2)
    if r2 <= 0:
        raise ContractError("squared radius must be positive")
    r = _rational_sqrt(r2)
    if r is None:
        n = 2 * d
        sq = [[0 if i == j else (4 * r2 if i // 2 == j // 2 else 2 * r2) for j in range(n)]
              for i in range(n)]
        return DistanceMatrix(sq)
    pts = []
    labels = []
    for i in range(d):
        for s in (1, -1):
            p = [0] * d
            p[i] = s * r
            pts.append(p)
            labels.append(f"{'+' if s > 0 else '-'}e{i + 1}")
    return Configuration(d, pts, 0, labels)


def simplex(d: int, scale2=1) -> DistanceMatrix:
    """d+1 mutually equidistant points (squared distance ``scale2``)."""
    if d < 1:
        raise ContractError(f"simplex needs d >= 1, got {d}")
    s = Fraction(scale2)
    if s <= 0:
        raise ContractError("squared edge must be positive")
    n = d + 1
    return DistanceMatrix([[0 if i == j else s for j in range(n)] for i in range(n)])


def square_center() -> Configuration:
    pts = [(1, 0), (0, 1), (-1, 0), (0, -1), (0, 0)]
    return Configuration(2, pts, 0, ["A", "B", "C", "D", "O"])


def pentagon() -> Configuration:
    """Regular pentagon with unit side, coordinates in Q(sqrt 5).

    No planar copy has coordinates in Q(sqrt 5) (sin 72 degrees needs a
    nested radical), so the pentagon is the vertex figure of an icosahedron:
    the five neighbours of (0, 1, phi), halved.  It spans a plane in R^3.
    """
    phi = QuadExt(Fraction(1, 2), Fraction(1, 2), 5)
    z = QuadExt(0, 0, 5)
    one = QuadExt(1, 0, 5)
    ring = [(z, -one, phi), (phi, z, one), (one, phi, z), (-one, phi, z), (-phi, z, one)]
    half = Fraction(1, 2)
    pts = [tuple(c * half for c in p) for p in ring]
    return Configuration(3, pts, 5, [f"V{i}" for i in range(5)])


def lattice_sq_norm(a: int, b: int) -> int:
    """Squared length of ``a*(1,0) + b*(1/2, sqrt3/2)``."""
    return a * a + a * b + b * b


def lattice_points(shape: str, size: int, size2: int | None = None) -> list[tuple[int, int]]:
    """Integer lattice coordinates of a triangular-lattice patch.

    ``hexagon``: all points within ``size`` steps of the origin.
    ``rhombus``: ``size`` by ``size2`` parallelogram.
    ``triangle``: triangle with ``size`` points per side.
    """
    if size < 1:
        raise ContractError("patch size must be positive")
    if shape == "hexagon":
        r = size
        return [(a, b) for a in range(-r, r + 1) for b in range(-r, r + 1) if abs(a + b) <= r]
    if shape == "rhombus":
        return [(a, b) for a in range(size) for b in range(size2 or size)]
    if shape == "triangle":
        return [(a, b) for a in range(size) for b in range(size - a)]
    raise ContractError(f"unknown lattice patch shape {shape!r}")


def lattice_configuration(points, labels=None) -> Configuration:
    half = Fraction(1, 2)
    coords = [(QuadExt(a + b * half, 0, 3), QuadExt(0, b * half, 3)) for a, b in points]
    return Configuration(2, coords, 3, labels or [f"({a},{b})" for a, b in points])


def fig1_config(k: int) -> Configuration:
    """A maximal planar set with exactly ``k`` distinct distances (2 <= k <= 6)."""
    if k == 2:
        return pentagon()
    if k not in _FIG1_LATTICE:
        raise ContractError(f"fig1_config supports 2 <= k <= 6, got {k}")
    return lattice_configuration(_FIG1_LATTICE[k])


def fig1_lattice_points(k: int) -> tuple:
    return _FIG1_LATTICE[k]


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    dim: int | None = None
    scale2: Fraction = Fraction(1)
    k: int | None = None
    shape: str = "hexagon"
    size: int = 1

    KINDS = ("orthoplex", "simplex", "square_center", "pentagon", "fig1", "lattice")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ContractError(f"unknown generator kind {self.kind!r}")
        if self.kind in ("orthoplex", "simplex") and self.dim is None:
            raise ContractError(f"{self.kind} needs a dimension")
        if self.kind == "orthoplex" and self.dim < 2:
            raise ContractError("orthoplex needs dim >= 2")
        if self.kind == "fig1" and self.k is None:
            raise ContractError("fig1 needs k")
        object.__setattr__(self, "scale2", Fraction(self.scale2))
        if self.scale2 <= 0:
            raise ContractError("scale2 must be positive")

    def build(self):
        if self.kind == "orthoplex":
            return orthoplex(self.dim, self.scale2)
        if self.kind == "simplex":
            return simplex(self.dim, self.scale2)
        if self.kind == "square_center":
            return square_center()
        if self.kind == "pentagon":
            return pentagon()
        if self.kind == "fig1":
            return fig1_config(self.k)
        return lattice_configuration(lattice_points(self.shape, self.size))

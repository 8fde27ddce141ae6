"""Lower bounds on triangle counts and the exact triple-cover oracle behind them.

A point that determines ``n`` distinct distances sees every pair of them in
some triangle through that point; a triangle carries at most three distance
values, so counting triangles reduces to covering pairs by triples.  The
closed forms here are checked against :func:`min_triple_cover` and
:func:`min_cover_with_repeats`, which find minimal covers by exhaustive
branch and bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from . import kernels
from .exactnum import ContractError

__all__ = [
    "ResourceError",
    "lemma_max_dds_bound",
    "lemma_distinct_bound",
    "lemma_distinct_bound_as_stated",
    "lemma_repeat_bound",
    "CoverInstance",
    "CoverSolution",
    "solve_cover",
    "min_triple_cover",
    "min_cover_with_repeats",
    "MAX_TRIPLE_COVER_N",
    "MAX_REPEAT_COVER_N",
]

MAX_TRIPLE_COVER_N = 12
MAX_REPEAT_COVER_N = 10


class ResourceError(RuntimeError):
    """Instance outside the range the exact solver is meant to handle."""


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def lemma_max_dds_bound(t: int) -> int:
    """Most distinct distances a set with ``t`` distinct triangles can determine."""
    if t < 1:
        raise ContractError(f"need at least one triangle, got t={t}")
    return 2 * t + 1


def lemma_distinct_bound(n: int) -> int:
    """Fewest triangles forced by a point with ``n`` distinct distances: ceil(n/3 * floor(n/2))."""
    if n < 1:
        raise ContractError(f"need n >= 1, got {n}")
    return _ceil_div(n * (n // 2), 3)


def lemma_distinct_bound_as_stated(n: int) -> int:
    """The transposed form ceil(n/2 * floor(n/3)); kept to document that it differs."""
    if n < 1:
        raise ContractError(f"need n >= 1, got {n}")
    return _ceil_div(n * (n // 3), 2)


def lemma_repeat_bound(n: int, m: int) -> int:
    """ceil((n(n-1) + 4m) / 6) for ``n`` distances at a point, ``m`` of them repeated."""
    if n < 1:
        raise ContractError(f"need n >= 1, got {n}")
    if not 0 <= m <= n:
        raise ContractError(f"need 0 <= m <= n, got n={n}, m={m}")
    return _ceil_div(n * (n - 1) + 4 * m, 6)


@dataclass(frozen=True)
class CoverInstance:
    """Pairs over symbols ``1..universe`` to be covered by 3-element multisets.

    A doubled pair ``(a, a)`` stands for a repeated distance and is covered
    only by a triple containing ``a`` twice.
    """

    universe: int
    required_pairs: frozenset

    def __post_init__(self):
        if self.universe < 1:
            raise ContractError("universe must be at least 1")
        pairs = set()
        for p in self.required_pairs:
            a, b = sorted(p)
            if not (1 <= a <= self.universe and 1 <= b <= self.universe):
                raise ContractError(f"pair {p} uses a symbol outside 1..{self.universe}")
            pairs.add((a, b))
        object.__setattr__(self, "required_pairs", frozenset(pairs))

    @classmethod
    def distinct_pairs(cls, n: int, doubled=()) -> "CoverInstance":
        pairs = set(combinations(range(1, n + 1), 2))
        pairs.update((a, a) for a in doubled)
        return cls(n, frozenset(pairs))

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self.required_pairs)

    @property
    def doubled(self) -> list[int]:
        return sorted(a for a, b in self.required_pairs if a == b)

    @property
    def is_symmetric(self) -> bool:
        """All distinct pairs and no doubled ones: invariant under every relabeling."""
        n = self.universe
        return not self.doubled and len(self.required_pairs) == n * (n - 1) // 2


def triple_covers(triple, pair) -> bool:
    a, b = pair
    t = list(triple)
    if a == b:
        return t.count(a) >= 2
    return a in t and b in t


@dataclass(frozen=True)
class CoverSolution:
    triples: tuple
    certified_minimal: bool = False
    search_nodes: int = 0
    certificate_nodes: int = 0
    bound: str = "count"

    @property
    def size(self) -> int:
        return len(self.triples)

    def uncovered(self, instance: CoverInstance) -> list:
        return [p for p in instance.pairs if not any(triple_covers(t, p) for t in self.triples)]

    def covers(self, instance: CoverInstance) -> bool:
        return not self.uncovered(instance)

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "triples": [list(t) for t in self.triples],
            "certified_minimal": self.certified_minimal,
            "bound": self.bound,
            "search_nodes": self.search_nodes,
            "certificate_nodes": self.certificate_nodes,
        }


def _candidates(instance: CoverInstance):
    """All useful 3-multisets with their pair masks, dominated ones removed."""
    index = {p: i for i, p in enumerate(instance.pairs)}
    raw = []
    for t in combinations_with_replacement(range(1, instance.universe + 1), 3):
        mask = 0
        for p, i in index.items():
            if triple_covers(t, p):
                mask |= 1 << i
        if mask:
            raw.append((t, mask))
    # a triple whose covered pairs sit inside another's is never needed
    kept = []
    for i, (t, m) in enumerate(raw):
        dominated = False
        for j, (u, mu) in enumerate(raw):
            if j != i and m | mu == mu and (m != mu or j < i):
                dominated = True
                break
        if not dominated:
            kept.append((t, m))
    return kept


def _symbol_groups(instance: CoverInstance) -> list[int]:
    groups = []
    for v in range(1, instance.universe + 1):
        g = 0
        for i, p in enumerate(instance.pairs):
            if v in p:
                g |= 1 << i
        groups.append(g)
    return groups


def solve_cover(instance: CoverInstance, *, bound: str = "count", node_limit: int = 0,
                impl=None) -> CoverSolution:
    """Minimum cover of ``instance`` plus an exhaustive proof that one fewer fails.

    ``bound="count"`` prunes with ceil(uncovered / 3) only.  ``bound="symbol"``
    adds the per-symbol bound (each triple meets a symbol's pairs at most
    twice) and, with doubled pairs present, the rule that a doubled pair
    needs a triple of its own.  Both are much stronger and are what makes
    the largest instances tractable.
    """
    if bound not in ("count", "symbol"):
        raise ValueError(f"unknown bound {bound!r}")
    pairs = instance.pairs
    if not pairs:
        return CoverSolution((), True, 0, 0, bound)
    cands = _candidates(instance)
    masks = [m for _, m in cands]
    groups = _symbol_groups(instance) if bound == "symbol" else ()
    special = 0
    if bound == "symbol":
        for i, (a, b) in enumerate(pairs):
            if a == b:
                special |= 1 << i
    root_single = instance.is_symmetric
    E = len(pairs)

    def run(limit):
        chosen, nodes, done = kernels.cover_search(
            masks, E, limit, node_limit, root_single, groups, 2, 3, special, impl=impl
        )
        if not done:
            raise ResourceError(f"node limit {node_limit} exceeded at size {limit}")
        return chosen, nodes

    size = _ceil_div(E, 3)
    total_nodes = 0
    while True:
        chosen, nodes = run(size)
        total_nodes += nodes
        if chosen is not None:
            break
        size += 1
    # explicit exhaustive run one below the optimum
    refuted, cert_nodes = run(len(chosen) - 1)
    if refuted is not None:
        raise AssertionError("search found a smaller cover on the certificate run")
    triples = tuple(sorted(cands[s][0] for s in chosen))
    sol = CoverSolution(triples, True, total_nodes, cert_nodes, bound)
    if not sol.covers(instance):
        raise AssertionError("solver returned a non-cover")
    return sol


def min_triple_cover(n: int, *, bound: str | None = None, impl=None) -> CoverSolution:
    """Fewest triples covering all pairs of distinct symbols in ``1..n``."""
    if not 1 <= n <= MAX_TRIPLE_COVER_N:
        raise ResourceError(f"min_triple_cover supports 1 <= n <= {MAX_TRIPLE_COVER_N}, got {n}")
    if bound is None:
        bound = "count" if n <= 9 else "symbol"
    return solve_cover(CoverInstance.distinct_pairs(n), bound=bound, impl=impl)


def min_cover_with_repeats(n: int, m: int, *, bound: str | None = None, impl=None) -> CoverSolution:
    """Fewest triples covering all distinct pairs plus doubled pairs on symbols ``1..m``."""
    if not (0 <= m <= n and 1 <= n <= MAX_REPEAT_COVER_N):
        raise ResourceError(f"min_cover_with_repeats needs 0 <= m <= n <= {MAX_REPEAT_COVER_N}")
    if bound is None:
        bound = "count" if n <= 7 else "symbol"
    return solve_cover(CoverInstance.distinct_pairs(n, range(1, m + 1)), bound=bound, impl=impl)

"""Pure-Python versions of the hot search kernels.

Signatures and results match the compiled ``_kernels`` module exactly; the
two are interchangeable and the test suite runs both.
"""
from __future__ import annotations

__all__ = ["cover_search", "max_k_distance_subset", "census_counts"]


class _Abort(Exception):
    pass


def _popcount(x: int) -> int:
    return bin(x).count("1")


def cover_search(masks, n_elements, limit, node_limit=0, root_single=False,
                 groups=(), group_cap=1, group_touch=1, special=0):
    """Look for at most ``limit`` of the ``masks`` whose union is every element.

    Branches on the uncovered element with the fewest non-excluded covering
    sets (ties: lowest element).  A set that failed at a node is excluded for
    its later siblings.  Returns ``(chosen, nodes, completed)``; ``chosen`` is
    ``None`` when no cover exists (or the node limit hit, ``completed`` False).

    Pruning always uses ``ceil(uncovered / widest set)``.  If ``groups`` are
    given, every set must meet each group in at most ``group_cap`` elements
    and meet at most ``group_touch`` groups; then
    ``ceil(sum_g ceil(|uncovered & g| / group_cap) / group_touch)`` is also a
    valid lower bound and is used too.  A nonzero ``special`` mask promises
    that a set meets it at most once and then covers at most two elements,
    giving the bound ``s + ceil((uncovered - 2 s) / widest)`` with
    ``s = |uncovered & special|``.
    """
    masks = [int(m) for m in masks]
    groups = [int(g) for g in groups]
    special = int(special)
    full = (1 << n_elements) - 1
    if limit < 0:
        return None, 0, True
    covering = [[s for s, m in enumerate(masks) if (m >> e) & 1] for e in range(n_elements)]
    maxw = max((_popcount(m) for m in masks), default=1) or 1
    excluded = [False] * len(masks)
    chosen: list[int] = []
    nodes = 0

    def rec(covered: int, depth: int) -> bool:
        nonlocal nodes
        nodes += 1
        if node_limit and nodes > node_limit:
            raise _Abort
        if covered == full:
            return True
        unc = full & ~covered
        if depth + -(-_popcount(unc) // maxw) > limit:
            return False
        if special:
            sp = _popcount(unc & special)
            rest_need = max(0, _popcount(unc) - 2 * sp)
            if depth + sp + -(-rest_need // maxw) > limit:
                return False
        if groups:
            need = 0
            for g in groups:
                need += -(-_popcount(unc & g) // group_cap)
            if depth + -(-need // group_touch) > limit:
                return False
        best_e, best_c = -1, 1 << 30
        rest = unc
        while rest:
            low = rest & -rest
            e = low.bit_length() - 1
            rest ^= low
            c = 0
            for s in covering[e]:
                if not excluded[s]:
                    c += 1
            if c == 0:
                return False
            if c < best_c:
                best_e, best_c = e, c
        options = [s for s in covering[best_e] if not excluded[s]]
        if root_single and depth == 0:
            options = options[:1]
        tried = []
        for s in options:
            chosen.append(s)
            if rec(covered | masks[s], depth + 1):
                return True
            chosen.pop()
            excluded[s] = True
            tried.append(s)
        for s in tried:
            excluded[s] = False
        return False

    try:
        found = rec(0, 0)
    except _Abort:
        return None, nodes, False
    return (list(chosen) if found else None), nodes, True


def max_k_distance_subset(dist, k, size_cap=0, node_limit=0):
    """Largest subset (index-lexicographically first) spanning exactly ``k`` distance ids.

    ``dist`` is an n-by-n matrix of small integer distance ids.  Returns
    ``(best_size, best_subset, nodes, completed)``.
    """
    n = len(dist)
    if size_cap <= 0:
        size_cap = n
    bit = [[1 << int(dist[i][j]) for j in range(n)] for i in range(n)]
    best_size = 0
    best: tuple = ()
    cur: list[int] = []
    nodes = 0

    def rec(cands, mask):
        nonlocal nodes, best_size, best
        nodes += 1
        if node_limit and nodes > node_limit:
            raise _Abort
        if len(cur) > best_size and _popcount(mask) == k:
            best_size = len(cur)
            best = tuple(cur)
        if len(cur) >= size_cap:
            return
        ncand = len(cands)
        for idx in range(ncand):
            if len(cur) + ncand - idx <= best_size:
                return
            p, pm = cands[idx]
            newmask = mask | pm
            row = bit[p]
            newc = []
            for q, qm in cands[idx + 1:]:
                qm2 = qm | row[q]
                if _popcount(newmask | qm2) <= k:
                    newc.append((q, qm2))
            cur.append(p)
            rec(newc, newmask)
            cur.pop()

    try:
        rec([(p, 0) for p in range(n)], 0)
    except _Abort:
        return best_size, best, nodes, False
    return best_size, best, nodes, True


def census_counts(sq):
    """``(distance classes, triangle classes, collinear triples)`` of an integer matrix."""
    n = len(sq)
    dists = set()
    tris = set()
    collinear = 0
    for i in range(n):
        ri = sq[i]
        for j in range(i + 1, n):
            a = int(ri[j])
            dists.add(a)
            rj = sq[j]
            for k in range(j + 1, n):
                b = int(rj[k])
                c = int(ri[k])
                if 2 * (a * b + b * c + c * a) - (a * a + b * b + c * c) == 0:
                    collinear += 1
                    continue
                if a <= b:
                    t = (a, b, c) if b <= c else ((a, c, b) if a <= c else (c, a, b))
                else:
                    t = (b, a, c) if a <= c else ((b, c, a) if b <= c else (c, b, a))
                tris.add(t)
    return len(dists), len(tris), collinear

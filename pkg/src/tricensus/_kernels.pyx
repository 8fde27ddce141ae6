# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; the reference semantics live in ``_kernels_py``."""
from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, calloc, free, qsort

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil

__all__ = ["cover_search", "max_k_distance_subset", "census_counts"]

DEF BIG = 1 << 30


# ---------------------------------------------------------------- cover search

cdef struct CoverCtx:
    int n_sets
    int limit
    int maxw
    int root_single
    int max_cov
    uint64_t *lo
    uint64_t *hi
    int *cov_start
    int *cov_list
    char *excluded
    int *chosen
    int *trybuf
    long long nodes
    long long node_limit
    int aborted
    int found_depth
    uint64_t full_lo
    uint64_t full_hi
    int n_groups
    int group_cap
    int group_touch
    uint64_t *glo
    uint64_t *ghi
    uint64_t slo
    uint64_t shi


cdef int _count_open(CoverCtx *c, int e) nogil:
    cdef int k, cnt = 0
    for k in range(c.cov_start[e], c.cov_start[e + 1]):
        if not c.excluded[c.cov_list[k]]:
            cnt += 1
    return cnt


cdef int _cover_rec(CoverCtx *c, uint64_t clo, uint64_t chi, int depth) nogil:
    cdef uint64_t ulo, uhi, w
    cdef int unc, e, cnt, best_e, best_c, k, s, ntried, word, i, need
    cdef int *tried
    c.nodes += 1
    if c.node_limit > 0 and c.nodes > c.node_limit:
        c.aborted = 1
        return 0
    if clo == c.full_lo and chi == c.full_hi:
        c.found_depth = depth
        return 1
    ulo = c.full_lo & ~clo
    uhi = c.full_hi & ~chi
    unc = popcount64(ulo) + popcount64(uhi)
    if depth + (unc + c.maxw - 1) // c.maxw > c.limit:
        return 0
    if c.slo or c.shi:
        cnt = popcount64(ulo & c.slo) + popcount64(uhi & c.shi)
        need = unc - 2 * cnt
        if need < 0:
            need = 0
        if depth + cnt + (need + c.maxw - 1) // c.maxw > c.limit:
            return 0
    if c.n_groups > 0:
        need = 0
        for i in range(c.n_groups):
            cnt = popcount64(ulo & c.glo[i]) + popcount64(uhi & c.ghi[i])
            need += (cnt + c.group_cap - 1) // c.group_cap
        if depth + (need + c.group_touch - 1) // c.group_touch > c.limit:
            return 0
    best_e = -1
    best_c = BIG
    for word in range(2):
        w = ulo if word == 0 else uhi
        while w:
            e = ctz64(w) + 64 * word
            w &= w - 1
            cnt = _count_open(c, e)
            if cnt == 0:
                return 0
            if cnt < best_c:
                best_c = cnt
                best_e = e
    tried = c.trybuf + depth * c.max_cov
    ntried = 0
    for k in range(c.cov_start[best_e], c.cov_start[best_e + 1]):
        s = c.cov_list[k]
        if c.excluded[s]:
            continue
        c.chosen[depth] = s
        if _cover_rec(c, clo | c.lo[s], chi | c.hi[s], depth + 1):
            for i in range(ntried):
                c.excluded[tried[i]] = 0
            return 1
        if c.aborted:
            break
        c.excluded[s] = 1
        tried[ntried] = s
        ntried += 1
        if c.root_single and depth == 0:
            break
    for i in range(ntried):
        c.excluded[tried[i]] = 0
    return 0


def cover_search(masks, int n_elements, int limit, long long node_limit=0, root_single=False,
                 groups=(), int group_cap=1, int group_touch=1, special=0):
    """Compiled twin of :func:`tricensus._kernels_py.cover_search`."""
    cdef CoverCtx c
    cdef int n_sets = len(masks)
    cdef int e, s, k, found, w
    cdef object m
    if n_elements > 128:
        raise ValueError("compiled cover kernel supports at most 128 elements")
    if limit < 0:
        return None, 0, True
    c.n_sets = n_sets
    c.limit = limit
    c.root_single = 1 if root_single else 0
    c.nodes = 0
    c.node_limit = node_limit
    c.aborted = 0
    c.found_depth = 0
    c.full_lo = (<uint64_t>0xFFFFFFFFFFFFFFFF) if n_elements >= 64 else ((<uint64_t>1 << n_elements) - 1)
    if n_elements > 64:
        c.full_hi = (<uint64_t>0xFFFFFFFFFFFFFFFF) if n_elements == 128 else ((<uint64_t>1 << (n_elements - 64)) - 1)
    else:
        c.full_hi = 0
    c.lo = <uint64_t *> malloc(max(n_sets, 1) * sizeof(uint64_t))
    c.hi = <uint64_t *> malloc(max(n_sets, 1) * sizeof(uint64_t))
    c.cov_start = <int *> calloc(n_elements + 1, sizeof(int))
    c.excluded = <char *> calloc(max(n_sets, 1), sizeof(char))
    c.chosen = <int *> malloc((limit + 1) * sizeof(int))
    c.cov_list = NULL
    c.trybuf = NULL
    c.n_groups = len(groups)
    c.slo = <uint64_t>(int(special) & 0xFFFFFFFFFFFFFFFF)
    c.shi = <uint64_t>((int(special) >> 64) & 0xFFFFFFFFFFFFFFFF)
    c.group_cap = max(group_cap, 1)
    c.group_touch = max(group_touch, 1)
    c.glo = <uint64_t *> malloc(max(c.n_groups, 1) * sizeof(uint64_t))
    c.ghi = <uint64_t *> malloc(max(c.n_groups, 1) * sizeof(uint64_t))
    try:
        for k in range(c.n_groups):
            m = int(groups[k])
            c.glo[k] = <uint64_t>(m & 0xFFFFFFFFFFFFFFFF)
            c.ghi[k] = <uint64_t>((m >> 64) & 0xFFFFFFFFFFFFFFFF)
        c.maxw = 1
        for s in range(n_sets):
            m = int(masks[s])
            c.lo[s] = <uint64_t>(m & 0xFFFFFFFFFFFFFFFF)
            c.hi[s] = <uint64_t>((m >> 64) & 0xFFFFFFFFFFFFFFFF)
            w = popcount64(c.lo[s]) + popcount64(c.hi[s])
            if w > c.maxw:
                c.maxw = w
            for e in range(n_elements):
                if (m >> e) & 1:
                    c.cov_start[e + 1] += 1
        c.max_cov = 1
        for e in range(n_elements):
            if c.cov_start[e + 1] > c.max_cov:
                c.max_cov = c.cov_start[e + 1]
            c.cov_start[e + 1] += c.cov_start[e]
        c.cov_list = <int *> malloc(max(c.cov_start[n_elements], 1) * sizeof(int))
        c.trybuf = <int *> malloc((limit + 1) * c.max_cov * sizeof(int))
        fill = [c.cov_start[e] for e in range(n_elements)]
        for s in range(n_sets):
            m = int(masks[s])
            for e in range(n_elements):
                if (m >> e) & 1:
                    c.cov_list[fill[e]] = s
                    fill[e] += 1
        with nogil:
            found = _cover_rec(&c, 0, 0, 0)
        if c.aborted:
            return None, c.nodes, False
        if found:
            return [c.chosen[k] for k in range(c.found_depth)], c.nodes, True
        return None, c.nodes, True
    finally:
        free(c.lo)
        free(c.hi)
        free(c.cov_start)
        free(c.excluded)
        free(c.chosen)
        free(c.cov_list)
        free(c.trybuf)
        free(c.glo)
        free(c.ghi)


# ------------------------------------------------------- k-distance subsets

cdef struct SubCtx:
    int n
    int k
    int size_cap
    uint64_t *blo
    uint64_t *bhi
    int *cand
    uint64_t *cmlo
    uint64_t *cmhi
    int *cur
    int depth
    int best_size
    int *best
    long long nodes
    long long node_limit
    int aborted


cdef void _sub_rec(SubCtx *c, int ncand, int off, uint64_t mlo, uint64_t mhi) nogil:
    cdef int idx, p, q, j, nn, noff, i
    cdef uint64_t nlo, nhi, qlo, qhi
    c.nodes += 1
    if c.node_limit > 0 and c.nodes > c.node_limit:
        c.aborted = 1
        return
    if c.depth > c.best_size and popcount64(mlo) + popcount64(mhi) == c.k:
        c.best_size = c.depth
        for i in range(c.depth):
            c.best[i] = c.cur[i]
    if c.depth >= c.size_cap:
        return
    noff = off + ncand
    for idx in range(ncand):
        if c.depth + ncand - idx <= c.best_size:
            return
        p = c.cand[off + idx]
        nlo = mlo | c.cmlo[off + idx]
        nhi = mhi | c.cmhi[off + idx]
        nn = 0
        for j in range(idx + 1, ncand):
            q = c.cand[off + j]
            qlo = c.cmlo[off + j] | c.blo[p * c.n + q]
            qhi = c.cmhi[off + j] | c.bhi[p * c.n + q]
            if popcount64(nlo | qlo) + popcount64(nhi | qhi) <= c.k:
                c.cand[noff + nn] = q
                c.cmlo[noff + nn] = qlo
                c.cmhi[noff + nn] = qhi
                nn += 1
        c.cur[c.depth] = p
        c.depth += 1
        _sub_rec(c, nn, noff, nlo, nhi)
        c.depth -= 1
        if c.aborted:
            return


def max_k_distance_subset(dist, int k, int size_cap=0, long long node_limit=0):
    """Compiled twin of :func:`tricensus._kernels_py.max_k_distance_subset`."""
    cdef SubCtx c
    cdef int n = len(dist)
    cdef int i, j, v
    if size_cap <= 0:
        size_cap = n
    c.n = n
    c.k = k
    c.size_cap = size_cap
    c.depth = 0
    c.best_size = 0
    c.nodes = 0
    c.node_limit = node_limit
    c.aborted = 0
    c.blo = <uint64_t *> calloc(max(n * n, 1), sizeof(uint64_t))
    c.bhi = <uint64_t *> calloc(max(n * n, 1), sizeof(uint64_t))
    # candidate slabs: depth levels are nested so n*(n+1) entries suffice
    c.cand = <int *> malloc((n * (n + 2) + 1) * sizeof(int))
    c.cmlo = <uint64_t *> calloc(n * (n + 2) + 1, sizeof(uint64_t))
    c.cmhi = <uint64_t *> calloc(n * (n + 2) + 1, sizeof(uint64_t))
    c.cur = <int *> malloc((n + 1) * sizeof(int))
    c.best = <int *> malloc((n + 1) * sizeof(int))
    try:
        for i in range(n):
            row = dist[i]
            for j in range(n):
                v = int(row[j])
                if v < 0 or v >= 128:
                    raise ValueError("distance ids must lie in [0, 128)")
                if v < 64:
                    c.blo[i * n + j] = (<uint64_t>1) << v
                else:
                    c.bhi[i * n + j] = (<uint64_t>1) << (v - 64)
        for i in range(n):
            c.cand[i] = i
        with nogil:
            _sub_rec(&c, n, 0, 0, 0)
        best = tuple(c.best[i] for i in range(c.best_size))
        return c.best_size, best, c.nodes, not c.aborted
    finally:
        free(c.blo)
        free(c.bhi)
        free(c.cand)
        free(c.cmlo)
        free(c.cmhi)
        free(c.cur)
        free(c.best)


# ------------------------------------------------------------ census counts

cdef int _cmp_tri(const void *x, const void *y) noexcept nogil:
    cdef const int64_t *a = <const int64_t *> x
    cdef const int64_t *b = <const int64_t *> y
    cdef int i
    for i in range(3):
        if a[i] < b[i]:
            return -1
        if a[i] > b[i]:
            return 1
    return 0


cdef int _cmp_i64(const void *x, const void *y) noexcept nogil:
    cdef int64_t a = (<const int64_t *> x)[0]
    cdef int64_t b = (<const int64_t *> y)[0]
    return (a > b) - (a < b)


def census_counts(sq):
    """Compiled twin of :func:`tricensus._kernels_py.census_counts` (entries < 2**20)."""
    cdef int n = len(sq)
    cdef int i, j, k, nt = 0, nd = 0, collinear = 0, ud, ut
    cdef int64_t a, b, c, t0, t1, t2, cm
    cdef int64_t *m = <int64_t *> malloc(max(n * n, 1) * sizeof(int64_t))
    cdef int64_t *d = <int64_t *> malloc(max(n * n, 1) * sizeof(int64_t))
    cdef int64_t *t = <int64_t *> malloc(max(3 * n * n * n // 6 + 3, 3) * sizeof(int64_t))
    try:
        for i in range(n):
            row = sq[i]
            for j in range(n):
                a = int(row[j])
                if a < 0 or a >= (1 << 20):
                    raise ValueError("compiled census supports entries in [0, 2**20)")
                m[i * n + j] = a
        with nogil:
            for i in range(n):
                for j in range(i + 1, n):
                    a = m[i * n + j]
                    d[nd] = a
                    nd += 1
                    for k in range(j + 1, n):
                        b = m[j * n + k]
                        c = m[i * n + k]
                        cm = 2 * (a * b + b * c + c * a) - (a * a + b * b + c * c)
                        if cm == 0:
                            collinear += 1
                            continue
                        t0 = a; t1 = b; t2 = c
                        if t0 > t1:
                            t0, t1 = t1, t0
                        if t1 > t2:
                            t1, t2 = t2, t1
                        if t0 > t1:
                            t0, t1 = t1, t0
                        t[3 * nt] = t0
                        t[3 * nt + 1] = t1
                        t[3 * nt + 2] = t2
                        nt += 1
            qsort(d, nd, sizeof(int64_t), _cmp_i64)
            qsort(t, nt, 3 * sizeof(int64_t), _cmp_tri)
            ud = 0
            for i in range(nd):
                if i == 0 or d[i] != d[i - 1]:
                    ud += 1
            ut = 0
            for i in range(nt):
                if i == 0 or _cmp_tri(&t[3 * i], &t[3 * (i - 1)]) != 0:
                    ut += 1
        return ud, ut, collinear
    finally:
        free(m)
        free(d)
        free(t)

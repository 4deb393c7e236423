# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.  Signatures and results match ``_pykernels`` exactly."""

from libc.stdlib cimport malloc, calloc, free


cdef int* _flatten(list lists, int n, int** ptr_out) except NULL:
    cdef int total = 0, i, j, k
    for i in range(n):
        total += len(lists[i])
    cdef int* ptr = <int*> malloc((n + 1) * sizeof(int))
    cdef int* idx = <int*> malloc((total + 1) * sizeof(int))
    if ptr == NULL or idx == NULL:
        free(ptr)
        free(idx)
        raise MemoryError()
    k = 0
    for i in range(n):
        ptr[i] = k
        for j in lists[i]:
            idx[k] = j
            k += 1
    ptr[n] = k
    ptr_out[0] = ptr
    return idx


def extrema(int n, list before, tuple prefix, bint canonical):
    """Min and max of sum |p[u] - p[v]| over patterns extending ``prefix``.

    ``before[d]`` lists the neighbors of 0-based vertex d that precede it.
    Patterns are visited in lexicographic order, so the first optimum found is
    the lexicographically least witness.  With ``canonical`` only patterns with
    ``p <= reverse(p)`` are visited.  Returns None when nothing is visited.
    """
    cdef int* ptr = NULL
    cdef int* idx = _flatten(before, n, &ptr)
    cdef int* val = <int*> calloc(n + 1, sizeof(int))
    cdef int* cand = <int*> calloc(n + 1, sizeof(int))
    cdef char* used = <char*> calloc(n + 2, sizeof(char))
    cdef long long* cost = <long long*> calloc(n + 2, sizeof(long long))
    cdef int* best_min = <int*> calloc(n + 1, sizeof(int))
    cdef int* best_max = <int*> calloc(n + 1, sizeof(int))
    cdef int plen = len(prefix)
    cdef int d, v, j, u, diff, i
    cdef long long c, mn = -1, mx = -1, count = 0
    cdef int center2 = n + 1
    cdef bint ok = True
    try:
        if val == NULL or cand == NULL or used == NULL or cost == NULL \
                or best_min == NULL or best_max == NULL:
            raise MemoryError()
        # lay down the prefix
        for d in range(plen):
            v = prefix[d]
            if v < 1 or v > n or used[v]:
                raise ValueError("prefix is not a partial permutation")
            if canonical and ((d == 0 and 2 * v > center2)
                              or (d == 1 and 2 * val[0] == center2 and 2 * v > center2)):
                ok = False
            val[d] = v
            used[v] = 1
            c = cost[d]
            for j in range(ptr[d], ptr[d + 1]):
                diff = v - val[idx[j]]
                c += diff if diff > 0 else -diff
            cost[d + 1] = c
        if not ok:
            return None
        if plen == n:
            c = cost[n]
            return (c, tuple(val[i] for i in range(n)), c,
                    tuple(val[i] for i in range(n)), 1)
        d = plen
        cand[d] = 0
        while d >= plen:
            if cand[d] > 0:
                used[cand[d]] = 0
            v = cand[d] + 1
            while v <= n:
                if not used[v]:
                    if not canonical:
                        break
                    if d == 0:
                        if 2 * v <= center2:
                            break
                    elif d == 1:
                        if 2 * val[0] != center2 or 2 * v < center2:
                            break
                    else:
                        break
                v += 1
            if v > n:
                cand[d] = 0
                d -= 1
                continue
            cand[d] = v
            used[v] = 1
            val[d] = v
            c = cost[d]
            for j in range(ptr[d], ptr[d + 1]):
                diff = v - val[idx[j]]
                c += diff if diff > 0 else -diff
            if d + 1 == n:
                count += 1
                if mn < 0 or c < mn:
                    mn = c
                    for i in range(n):
                        best_min[i] = val[i]
                if c > mx:
                    mx = c
                    for i in range(n):
                        best_max[i] = val[i]
            else:
                cost[d + 1] = c
                d += 1
                cand[d] = 0
        if count == 0:
            return None
        return (mn, tuple(best_min[i] for i in range(n)),
                mx, tuple(best_max[i] for i in range(n)), count)
    finally:
        free(ptr)
        free(idx)
        free(val)
        free(cand)
        free(used)
        free(cost)
        free(best_min)
        free(best_max)


def bnb_min(int n, list adj, long long incumbent, tuple incumbent_order):
    """Branch-and-bound minimum of sum |pos[u] - pos[v]|.

    Positions 0, 1, ... are filled in order, each with the smallest untried
    free vertex.  The bound adds, to the weight of fully placed edges, the gap
    to the next free position for half-placed edges and 1 per unplaced edge.
    Returns ``(value, order, nodes)`` where ``order[k]`` is the 0-based vertex
    at position k.
    """
    cdef int* ptr = NULL
    cdef int* idx = _flatten(adj, n, &ptr)
    cdef int* pos = <int*> malloc((n + 1) * sizeof(int))
    cdef int* at = <int*> calloc(n + 1, sizeof(int))
    cdef int* best = <int*> calloc(n + 1, sizeof(int))
    cdef int* cand = <int*> calloc(n + 1, sizeof(int))
    cdef int k, v, j, w, i
    cdef long long full = 0, half = 0, hsum = 0, free_edges = 0, bound, nodes = 0
    cdef long long best_val = incumbent
    try:
        if pos == NULL or at == NULL or best == NULL or cand == NULL:
            raise MemoryError()
        for i in range(n):
            pos[i] = -1
            best[i] = incumbent_order[i]
        free_edges = ptr[n] // 2
        k = 0
        cand[0] = -1
        while k >= 0:
            # undo the vertex currently sitting at position k
            if cand[k] >= 0:
                v = cand[k]
                for j in range(ptr[v], ptr[v + 1]):
                    w = idx[j]
                    if pos[w] >= 0:
                        full -= k - pos[w]
                        half += 1
                        hsum += pos[w]
                    else:
                        free_edges += 1
                        half -= 1
                        hsum -= k
                pos[v] = -1
            v = cand[k] + 1
            while v < n and pos[v] >= 0:
                v += 1
            if v >= n:
                cand[k] = -1
                k -= 1
                continue
            cand[k] = v
            pos[v] = k
            at[k] = v
            for j in range(ptr[v], ptr[v + 1]):
                w = idx[j]
                if pos[w] >= 0:
                    full += k - pos[w]
                    half -= 1
                    hsum -= pos[w]
                else:
                    free_edges -= 1
                    half += 1
                    hsum += k
            nodes += 1
            bound = full + half * (k + 1) - hsum + free_edges
            if bound >= best_val:
                continue
            if k + 1 == n:
                best_val = full
                for i in range(n):
                    best[i] = at[i]
                continue
            k += 1
            cand[k] = -1
        return (best_val, tuple(best[i] for i in range(n)), nodes)
    finally:
        free(ptr)
        free(idx)
        free(pos)
        free(at)
        free(best)
        free(cand)


def unit_chain(int n, list adj):
    """First pattern (lexicographic) whose consecutive indices are all adjacent.

    Returns ``(pattern or None, patterns examined)``.
    """
    cdef char* mat = <char*> calloc(n * n + 1, sizeof(char))
    cdef int* p = <int*> malloc((n + 1) * sizeof(int))
    cdef int* inv = <int*> malloc((n + 1) * sizeof(int))
    cdef int i, j, t, a, b
    cdef long long examined = 0
    cdef bint good
    try:
        if mat == NULL or p == NULL or inv == NULL:
            raise MemoryError()
        for i in range(n):
            for j in adj[i]:
                mat[i * n + j] = 1
            p[i] = i
        while True:
            examined += 1
            for i in range(n):
                inv[p[i]] = i
            good = True
            for i in range(n - 1):
                if not mat[inv[i] * n + inv[i + 1]]:
                    good = False
                    break
            if good:
                return (tuple(p[i] + 1 for i in range(n)), examined)
            # next permutation
            i = n - 2
            while i >= 0 and p[i] >= p[i + 1]:
                i -= 1
            if i < 0:
                return (None, examined)
            j = n - 1
            while p[j] <= p[i]:
                j -= 1
            t = p[i]
            p[i] = p[j]
            p[j] = t
            a = i + 1
            b = n - 1
            while a < b:
                t = p[a]
                p[a] = p[b]
                p[b] = t
                a += 1
                b -= 1
    finally:
        free(mat)
        free(p)
        free(inv)

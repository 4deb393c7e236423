"""Pure-Python versions of the compiled kernels (same signatures, same results)."""

from itertools import permutations


def extrema(n, before, prefix, canonical):
    used = set(prefix)
    if len(used) != len(prefix) or any(not 1 <= v <= n for v in prefix):
        raise ValueError("prefix is not a partial permutation")
    center2 = n + 1
    if canonical and prefix:
        if 2 * prefix[0] > center2:
            return None
        if len(prefix) > 1 and 2 * prefix[0] == center2 and 2 * prefix[1] > center2:
            return None
    rest = [v for v in range(1, n + 1) if v not in used]
    plen = len(prefix)
    mn = mx = None
    best_min = best_max = None
    count = 0
    for tail in permutations(rest):
        p = prefix + tail
        if canonical:
            if 2 * p[0] > center2:
                continue
            if n > 1 and 2 * p[0] == center2 and 2 * p[1] > center2:
                continue
        c = 0
        for d in range(n):
            v = p[d]
            for u in before[d]:
                c += abs(v - p[u])
        count += 1
        if mn is None or c < mn:
            mn, best_min = c, p
        if mx is None or c > mx:
            mx, best_max = c, p
    if count == 0:
        return None
    return (mn, best_min, mx, best_max, count)


def bnb_min(n, adj, incumbent, incumbent_order):
    pos = [-1] * n
    at = [0] * n
    state = {"full": 0, "half": 0, "hsum": 0, "free": sum(len(a) for a in adj) // 2}
    best = [incumbent, tuple(incumbent_order)]
    nodes = 0

    def place(v, k, sign):
        for w in adj[v]:
            if pos[w] >= 0:
                state["full"] += sign * (k - pos[w])
                state["half"] -= sign
                state["hsum"] -= sign * pos[w]
            else:
                state["free"] -= sign
                state["half"] += sign
                state["hsum"] += sign * k

    def search(k):
        nonlocal nodes
        for v in range(n):
            if pos[v] >= 0:
                continue
            pos[v] = k
            at[k] = v
            place(v, k, 1)
            nodes += 1
            bound = state["full"] + state["half"] * (k + 1) - state["hsum"] + state["free"]
            if bound < best[0]:
                if k + 1 == n:
                    best[0] = state["full"]
                    best[1] = tuple(at)
                else:
                    search(k + 1)
            place(v, k, -1)
            pos[v] = -1

    search(0)
    return (best[0], best[1], nodes)


def unit_chain(n, adj):
    adjacent = [set(a) for a in adj]
    examined = 0
    for p in permutations(range(n)):
        examined += 1
        inv = [0] * n
        for v, i in enumerate(p):
            inv[i] = v
        if all(inv[i + 1] in adjacent[inv[i]] for i in range(n - 1)):
            return (tuple(i + 1 for i in p), examined)
    return (None, examined)

"""Simple undirected graphs over default labels 1..n and the families built on them."""

from __future__ import annotations

from collections import deque
from itertools import combinations

from .errors import ConnectivityError, GraphFormatError, ParameterError, SizeLimitError

HAMILTON_CAP = 15


class Graph:
    """Immutable simple undirected graph on vertices ``1..order``.

    Edges are stored canonically as sorted ``(u, v)`` pairs with ``u < v``.
    Input pairs may come in either orientation; loops, duplicates (in either
    orientation) and out-of-range endpoints raise :class:`GraphFormatError`.
    """

    __slots__ = ("_order", "_edges", "_adj")

    def __init__(self, order: int, edges=()):
        if not isinstance(order, int) or isinstance(order, bool) or order < 1:
            raise GraphFormatError(f"order must be a positive integer, got {order!r}")
        seen = set()
        for e in edges:
            try:
                u, v = e
                u, v = int(u), int(v)
            except (TypeError, ValueError):
                raise GraphFormatError(f"edge {e!r} is not a pair of integers") from None
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (1 <= u <= order and 1 <= v <= order):
                raise GraphFormatError(f"edge ({u}, {v}) has an endpoint outside 1..{order}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphFormatError(f"duplicate edge {key}")
            seen.add(key)
        self._order = order
        self._edges = tuple(sorted(seen))
        adj = [[] for _ in range(order + 1)]
        for u, v in self._edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    @property
    def order(self) -> int:
        return self._order

    @property
    def edges(self) -> tuple:
        return self._edges

    @property
    def size(self) -> int:
        """Edge count, written epsilon(G) in the literature."""
        return len(self._edges)

    @property
    def vertices(self) -> range:
        return range(1, self._order + 1)

    def neighbors(self, v: int) -> tuple:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list:
        return [len(self._adj[v]) for v in self.vertices]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def components(self) -> list:
        """Connected components as sorted vertex lists, ordered by least vertex."""
        seen = [False] * (self._order + 1)
        comps = []
        for s in self.vertices:
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.size == self._order - 1 and self.is_connected()

    def is_path_shaped(self) -> bool:
        """Connected, acyclic and of maximum degree at most 2."""
        return self.is_tree() and all(d <= 2 for d in self.degrees())

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._edges == other._edges

    def __hash__(self):
        return hash((self._order, self._edges))

    def __repr__(self):
        return f"Graph({self._order}, {list(self._edges)!r})"


# ---------------------------------------------------------------------------
# families


def _require(name, value, minimum):
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParameterError(name, value, "must be an integer")
    if value < minimum:
        raise ParameterError(name, value, f"must be >= {minimum}")


def path(n: int) -> Graph:
    _require("n", n, 1)
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    _require("n", n, 3)
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete(n: int) -> Graph:
    _require("n", n, 1)
    return Graph(n, combinations(range(1, n + 1), 2))


def edgeless(n: int) -> Graph:
    _require("n", n, 1)
    return Graph(n)


def star(n: int) -> Graph:
    """K_(1,n): center is vertex 1, leaves are 2..n+1."""
    _require("n", n, 1)
    return Graph(n + 1, [(1, i) for i in range(2, n + 2)])


def complete_bipartite(n: int, m: int) -> Graph:
    """K_(n,m): left part 1..n, right part n+1..n+m."""
    _require("n", n, 1)
    _require("m", m, 1)
    return Graph(n + m, [(i, n + j) for i in range(1, n + 1) for j in range(1, m + 1)])


def wheel(n: int) -> Graph:
    """W_(n+1) = C_n + K_1 with the hub as vertex 1 and the rim on 2..n+1."""
    _require("n", n, 3)
    rim = [(i, i + 1) for i in range(2, n + 1)] + [(2, n + 1)]
    return Graph(n + 1, rim + [(1, i) for i in range(2, n + 2)])


def ladder(n: int) -> Graph:
    """Two pillars 1..n and n+1..2n joined by steps i -- n+i for 2 <= i <= n-1.

    The corner rows carry no step; see :func:`full_ladder` for the usual
    ladder with every rung.
    """
    _require("n", n, 3)
    edges = [(i, i + 1) for i in range(1, n)]
    edges += [(n + i, n + i + 1) for i in range(1, n)]
    edges += [(i, n + i) for i in range(2, n)]
    return Graph(2 * n, edges)


def full_ladder(n: int) -> Graph:
    """P_n x K_2 with rungs i -- n+i for every 1 <= i <= n."""
    _require("n", n, 2)
    edges = [(i, i + 1) for i in range(1, n)]
    edges += [(n + i, n + i + 1) for i in range(1, n)]
    edges += [(i, n + i) for i in range(1, n + 1)]
    return Graph(2 * n, edges)


FAMILIES = {
    "path": (path, ("n",)),
    "cycle": (cycle, ("n",)),
    "complete": (complete, ("n",)),
    "edgeless": (edgeless, ("n",)),
    "star": (star, ("n",)),
    "complete_bipartite": (complete_bipartite, ("n", "m")),
    "wheel": (wheel, ("n",)),
    "ladder": (ladder, ("n",)),
    "full_ladder": (full_ladder, ("n",)),
}


def make_family(name: str, *params: int) -> Graph:
    """Build a named family member, e.g. ``make_family("star", 3)``."""
    key = name.replace("-", "_")
    if key == "bipartite":
        key = "complete_bipartite"
    if key not in FAMILIES:
        raise ParameterError("family", name, f"unknown family; choose from {sorted(FAMILIES)}")
    builder, names = FAMILIES[key]
    if len(params) != len(names):
        raise ParameterError(
            "params", params, f"family {key!r} takes {len(names)} parameter(s) {names}"
        )
    return builder(*params)


# ---------------------------------------------------------------------------
# operations


def complement(g: Graph) -> Graph:
    return Graph(g.order, (e for e in combinations(g.vertices, 2) if not g.has_edge(*e)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Union with h's labels shifted past g's (so the result depends on argument order)."""
    k = g.order
    return Graph(k + h.order, list(g.edges) + [(u + k, v + k) for u, v in h.edges])


def join(g: Graph, h: Graph) -> Graph:
    k = g.order
    cross = [(u, k + v) for u in g.vertices for v in h.vertices]
    return Graph(k + h.order, list(disjoint_union(g, h).edges) + cross)


def edge_joint(g: Graph, h: Graph, v: int, u: int) -> Graph:
    """Disjoint union plus one bridge from v in g to u in h."""
    if not 1 <= v <= g.order:
        raise ParameterError("v", v, f"must be a vertex of g (1..{g.order})")
    if not 1 <= u <= h.order:
        raise ParameterError("u", u, f"must be a vertex of h (1..{h.order})")
    base = disjoint_union(g, h)
    return Graph(base.order, list(base.edges) + [(v, u + g.order)])


def find_hamilton_path(g: Graph, cap: int = HAMILTON_CAP):
    """Lexicographically least Hamilton path as a vertex tuple, or None.

    Plain backtracking: start vertices and neighbors are tried in ascending
    order, so the first complete path found is the lexicographic minimum.
    """
    n = g.order
    if n > cap:
        raise SizeLimitError(n, cap, "Hamilton path search")
    if n == 1:
        return (1,)
    if not g.is_connected():
        return None
    visited = [False] * (n + 1)
    trail = []

    def extend(x):
        if len(trail) == n:
            return True
        for y in g.neighbors(x):
            if not visited[y]:
                visited[y] = True
                trail.append(y)
                if extend(y):
                    return True
                trail.pop()
                visited[y] = False
        return False

    for s in g.vertices:
        visited[s] = True
        trail.append(s)
        if extend(s):
            return tuple(trail)
        trail.pop()
        visited[s] = False
    return None


def spanning_tree(g: Graph) -> Graph:
    """Depth-first spanning tree from vertex 1, neighbors visited in ascending order."""
    if not g.is_connected():
        raise ConnectivityError("spanning_tree needs a connected graph")
    visited = [False] * (g.order + 1)
    tree_edges = []
    visited[1] = True
    stack = [(1, iter(g.neighbors(1)))]
    while stack:
        x, it = stack[-1]
        for y in it:
            if not visited[y]:
                visited[y] = True
                tree_edges.append((x, y))
                stack.append((y, iter(g.neighbors(y))))
                break
        else:
            stack.pop()
    return Graph(g.order, tree_edges)


def connected_graphs(n: int):
    """Yield every connected labeled graph on vertices 1..n (edge-mask order)."""
    pairs = list(combinations(range(1, n + 1), 2))
    if n == 1:
        yield Graph(1)
        return
    for mask in range(1, 1 << len(pairs)):
        g = Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
        if g.is_connected():
            yield g


def _connected_graphs_with_edges(k: int, q: int):
    pairs = list(combinations(range(1, k + 1), 2))
    for chosen in combinations(pairs, q):
        g = Graph(k, chosen)
        if g.is_connected():
            yield g


def connected_graphs_by_size(q: int):
    """Yield every connected labeled graph with exactly q edges and no isolated vertex.

    Such a graph has at most q + 1 vertices; each vertex count k is scanned by
    choosing q of the k(k-1)/2 possible edges and keeping the connected ones.
    """
    if q < 1:
        raise ParameterError("q", q, "must be >= 1")
    for k in range(2, q + 2):
        if k * (k - 1) // 2 < q:
            continue
        yield from _connected_graphs_with_edges(k, q)


def random_graph(n: int, p: float, rng) -> Graph:
    return Graph(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < p])


def random_tree(n: int, rng) -> Graph:
    """Uniform labeled tree on 1..n via a random Pruefer sequence."""
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(1, 2)])
    seq = [rng.randint(1, n) for _ in range(n - 2)]
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(1, n + 1) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(1, n + 1) if degree[w] == 1]
    edges.append((u, v))
    return Graph(n, edges)


def bfs_order(g: Graph) -> list:
    """Breadth-first vertex order covering every component, ascending neighbors."""
    seen = [False] * (g.order + 1)
    order = []
    for s in g.vertices:
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in g.neighbors(x):
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    return order

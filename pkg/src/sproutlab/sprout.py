"""Index patterns and the sprouting construction.

A pattern assigns every default vertex d an index ``pattern[d]``.  Sprouting
orients each edge from its lower-index endpoint to the higher one and weights
the arc by the index difference.  Arcs appear on the timeline at the level
equal to their weight.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

from .errors import ConnectivityError, PatternError
from .graph import Graph


@dataclass(frozen=True)
class IndexPattern:
    """Bijection from default labels 1..n to indices 1..n.

    ``assignment[d - 1]`` is the index given to default vertex ``d``.
    """

    assignment: tuple

    def __init__(self, assignment):
        values = tuple(int(x) for x in assignment)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise PatternError(f"{list(values)} is not a permutation of 1..{len(values)}")
        object.__setattr__(self, "assignment", values)

    @classmethod
    def identity(cls, n: int) -> "IndexPattern":
        return cls(range(1, n + 1))

    @classmethod
    def from_order(cls, order) -> "IndexPattern":
        """Pattern giving index i to the i-th vertex of ``order``."""
        assignment = [0] * len(order)
        for i, v in enumerate(order, start=1):
            assignment[v - 1] = i
        return cls(assignment)

    def __len__(self):
        return len(self.assignment)

    def __iter__(self):
        return iter(self.assignment)

    def __lt__(self, other):
        return self.assignment < other.assignment

    def index_of(self, v: int) -> int:
        return self.assignment[v - 1]

    def inverse(self) -> tuple:
        """View from index to default label: ``inverse()[i - 1]`` holds index i."""
        out = [0] * len(self.assignment)
        for d, i in enumerate(self.assignment, start=1):
            out[i - 1] = d
        return tuple(out)

    def reverse(self) -> "IndexPattern":
        n = len(self.assignment)
        return IndexPattern(n + 1 - i for i in self.assignment)

    def __str__(self):
        return ",".join(map(str, self.assignment))

    def as_list(self) -> list:
        return list(self.assignment)


class Arc(NamedTuple):
    tail: int
    head: int
    weight: int


@dataclass(frozen=True)
class Timeline:
    levels: tuple
    maturity: int


@dataclass(frozen=True)
class Snapshot:
    level: int
    arcs: tuple


@dataclass(frozen=True)
class SproutGraph:
    base: Graph
    pattern: IndexPattern
    arcs: tuple

    def in_degree(self, v: int) -> int:
        return sum(1 for a in self.arcs if a.head == v)

    def out_degree(self, v: int) -> int:
        return sum(1 for a in self.arcs if a.tail == v)

    def weights(self) -> list:
        return [a.weight for a in self.arcs]


def _check_pattern(g: Graph, p) -> IndexPattern:
    if not isinstance(p, IndexPattern):
        p = IndexPattern(p)
    if len(p) != g.order:
        raise PatternError(f"pattern has length {len(p)}, graph has {g.order} vertices")
    return p


def sprout(g: Graph, p) -> SproutGraph:
    p = _check_pattern(g, p)
    idx = p.assignment
    arcs = []
    for u, v in g.edges:
        iu, iv = idx[u - 1], idx[v - 1]
        if iu < iv:
            arcs.append(Arc(u, v, iv - iu))
        else:
            arcs.append(Arc(v, u, iu - iv))
    return SproutGraph(g, p, tuple(arcs))


def maturity_weight(s: SproutGraph) -> int:
    return sum(a.weight for a in s.arcs)


def mw(g: Graph, p) -> int:
    """Maturity weight of ``sprout(g, p)`` without building the arc list."""
    idx = p.assignment if isinstance(p, IndexPattern) else tuple(p)
    return sum(abs(idx[u - 1] - idx[v - 1]) for u, v in g.edges)


def timeline(s: SproutGraph) -> Timeline:
    """Levels {0} plus every distinct arc weight; an arcless sprout graph gives ({0}, 0)."""
    levels = tuple(sorted({0} | {a.weight for a in s.arcs}))
    return Timeline(levels, levels[-1])


def timeline_counts(s: SproutGraph) -> list:
    """``(level, number of arcs arcing at that level)`` for every timeline level."""
    counts = Counter(a.weight for a in s.arcs)
    return [(t, counts.get(t, 0)) for t in timeline(s).levels]


def snapshot(s: SproutGraph, t: int) -> Snapshot:
    if t < 0:
        raise ValueError(f"snapshot level must be non-negative, got {t}")
    return Snapshot(t, tuple(a for a in s.arcs if a.weight <= t))


def adult_vertices(s: SproutGraph) -> set:
    """Pure sinks: in-degree equals full degree (isolated vertices included)."""
    outs = {a.tail for a in s.arcs}
    return {v for v in s.base.vertices if v not in outs}


def initiator_vertices(s: SproutGraph) -> set:
    """Pure sources: out-degree equals full degree (isolated vertices included)."""
    ins = {a.head for a in s.arcs}
    return {v for v in s.base.vertices if v not in ins}


def is_directed_spanning_path(order: int, arcs) -> bool:
    """True iff ``arcs`` form one directed path through all ``order`` vertices."""
    if len(arcs) != order - 1:
        return False
    succ, pred = {}, {}
    for a in arcs:
        if a.tail in succ or a.head in pred:
            return False
        succ[a.tail] = a.head
        pred[a.head] = a.tail
    starts = [v for v in range(1, order + 1) if v not in pred]
    if len(starts) != 1:
        return False
    seen, x = 1, starts[0]
    while x in succ:
        x = succ[x]
        seen += 1
    return seen == order


def leaf_lob_pattern(t: Graph, mode: str = "unique-adult") -> IndexPattern:
    """Leaf-lobbing labeling of a tree.

    In ``unique-adult`` mode each round hands the lowest unused indices to the
    current leaves (ascending default label), removes them and repeats, so the
    last surviving vertex carries index n and is the only sink.
    ``unique-initiator`` mode is the reversal: leaves take the highest indices
    first, leaving index 1 as the only source.
    """
    if mode not in ("unique-adult", "unique-initiator"):
        raise ValueError(f"mode must be 'unique-adult' or 'unique-initiator', got {mode!r}")
    if not t.is_tree():
        raise ConnectivityError("leaf_lob_pattern needs a tree")
    n = t.order
    degree = t.degrees()
    degree.insert(0, 0)
    alive = set(t.vertices)
    assignment = [0] * n
    nxt = 1
    while alive:
        leaves = sorted(v for v in alive if degree[v] <= 1)
        for v in leaves:
            assignment[v - 1] = nxt
            nxt += 1
        for v in leaves:
            alive.discard(v)
            for w in t.neighbors(v):
                if w in alive:
                    degree[w] -= 1
    p = IndexPattern(assignment)
    return p if mode == "unique-adult" else p.reverse()


def combine_patterns(p1: IndexPattern, p2: IndexPattern) -> IndexPattern:
    """Pattern on the union labeling: p1 first, then p2 shifted by len(p1)."""
    k = len(p1)
    return IndexPattern(list(p1.assignment) + [i + k for i in p2.assignment])


def reverse_pattern(p: IndexPattern) -> IndexPattern:
    return p.reverse()


def shift_pad(g: Graph, p: IndexPattern, k: int):
    """Add k isolated vertices holding indices 1..k and shift the original indices by k."""
    if k < 0:
        raise ValueError("shift must be non-negative")
    padded = Graph(g.order + k, g.edges)
    shifted = IndexPattern([i + k for i in p.assignment] + list(range(1, k + 1)))
    return padded, shifted


def weight_multiset(s) -> Counter:
    return Counter(a.weight for a in s.arcs)


# ---------------------------------------------------------------------------
# DOT export


def _dot_lines(s: SproutGraph, arcs, level, name):
    idx = s.pattern.assignment
    lines = [f"digraph {name} {{"]
    comment = f"mw={maturity_weight(s)}"
    if level is not None:
        comment += f" t={level}"
    lines.append(f'  label="{comment}";')
    for v in s.base.vertices:
        lines.append(f'  {v} [label="v{idx[v - 1]}", tooltip="d{v}"];')
    for a in arcs:
        lines.append(f'  {a.tail} -> {a.head} [weight={a.weight}, label="{a.weight}"];')
    lines.append("}")
    return lines


def to_dot(s: SproutGraph, t=None, name: str = "sprout") -> str:
    """DOT digraph of the sprout graph, or of its snapshot at level ``t``."""
    arcs = s.arcs if t is None else snapshot(s, t).arcs
    return "\n".join(_dot_lines(s, arcs, t, name)) + "\n"


def sprout_to_dict(s: SproutGraph, t=None) -> dict:
    arcs = s.arcs if t is None else snapshot(s, t).arcs
    tl = timeline(s)
    return {
        "n": s.base.order,
        "pattern": s.pattern.as_list(),
        "arcs": [[a.tail, a.head, a.weight] for a in arcs],
        "level": t,
        "mw": maturity_weight(s),
        "timeline": list(tl.levels),
        "maturity": tl.maturity,
        "adults": sorted(adult_vertices(s)),
        "initiators": sorted(initiator_vertices(s)),
    }

"""Exhaustive search harnesses for conjectures and uniqueness claims on small graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import partial
from itertools import permutations

from .config import check_order, parallel_map
from .errors import ParameterError, SizeLimitError
from .graph import (
    Graph,
    connected_graphs,
    connected_graphs_by_size,
    find_hamilton_path,
    spanning_tree,
)
from .kernels import backend_name, get_backend
from .sprout import (
    IndexPattern,
    Timeline,
    adult_vertices,
    initiator_vertices,
    is_directed_spanning_path,
    leaf_lob_pattern,
    snapshot,
    sprout,
    timeline,
)

PATTERN_CAP = 8
ZANE_CAP = 6
HAMILTON_T1_CAP = 7

PATTERN_CONJECTURE = "pattern-conjecture"
EQUAL_TIMELINE = "equal-timeline-equal-weight"


@dataclass(frozen=True)
class CounterexampleRecord:
    graph: Graph
    pattern_a: IndexPattern
    pattern_b: IndexPattern
    timeline_a: Timeline
    timeline_b: Timeline
    mw_a: int
    mw_b: int
    claim: str

    def reverify(self) -> bool:
        """Recompute timelines and weights from the graph and patterns and compare."""
        sa, sb = sprout(self.graph, self.pattern_a), sprout(self.graph, self.pattern_b)
        ta, tb = timeline(sa), timeline(sb)
        wa, wb = sum(sa.weights()), sum(sb.weights())
        if (ta, tb, wa, wb) != (self.timeline_a, self.timeline_b, self.mw_a, self.mw_b):
            return False
        if self.claim == PATTERN_CONJECTURE:
            proper = set(ta.levels) < set(tb.levels)
            return proper and wa >= wb
        if self.claim == EQUAL_TIMELINE:
            return ta == tb and wa != wb
        return False

    def sort_key(self):
        return (
            self.graph.order,
            self.graph.edges,
            self.pattern_a.assignment,
            self.pattern_b.assignment,
        )

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "graph": {"n": self.graph.order, "edges": [list(e) for e in self.graph.edges]},
            "pattern_a": self.pattern_a.as_list(),
            "pattern_b": self.pattern_b.as_list(),
            "timeline_a": list(self.timeline_a.levels),
            "timeline_b": list(self.timeline_b.levels),
            "mw_a": self.mw_a,
            "mw_b": self.mw_b,
        }


@dataclass
class _Group:
    min_value: int
    min_pattern: tuple
    max_value: int
    max_pattern: tuple
    count: int = 1


def timeline_profile(g: Graph, cap=PATTERN_CAP, force_large=False) -> dict:
    """Group every pattern by its timeline; per group keep min/max weight and lex-least witnesses."""
    check_order(g.order, cap, force_large, "timeline profile")
    groups = {}
    edges = g.edges
    for p in permutations(range(1, g.order + 1)):
        weights = [abs(p[u - 1] - p[v - 1]) for u, v in edges]
        levels = tuple(sorted({0, *weights}))
        w = sum(weights)
        grp = groups.get(levels)
        if grp is None:
            groups[levels] = _Group(w, p, w, p)
            continue
        grp.count += 1
        if w < grp.min_value:
            grp.min_value, grp.min_pattern = w, p
        if w > grp.max_value:
            grp.max_value, grp.max_pattern = w, p
    return dict(sorted(groups.items()))


def _record(g, pa, pb, ta, tb, wa, wb, claim):
    return CounterexampleRecord(
        g,
        IndexPattern(pa),
        IndexPattern(pb),
        Timeline(ta, ta[-1]),
        Timeline(tb, tb[-1]),
        wa,
        wb,
        claim,
    )


def hunt_pattern_conjecture(g: Graph, cap=PATTERN_CAP, force_large=False) -> list:
    """Violations of "timeline A strictly inside timeline B implies mw(A) < mw(B)".

    For each proper inclusion of timelines, the heaviest pattern on the smaller
    timeline is compared with the lightest on the larger; one record per
    violating pair.  An empty list means the statement holds on ``g``.
    """
    profile = timeline_profile(g, cap, force_large)
    out = []
    for ta, a in profile.items():
        sa = set(ta)
        for tb, b in profile.items():
            if sa < set(tb) and a.max_value >= b.min_value:
                out.append(_record(g, a.max_pattern, b.min_pattern, ta, tb, a.max_value, b.min_value, PATTERN_CONJECTURE))
    return sorted(out, key=CounterexampleRecord.sort_key)


def equal_timeline_witness(g: Graph, cap=PATTERN_CAP, force_large=False):
    """Two patterns sharing a timeline but differing in weight, or None."""
    for t, grp in timeline_profile(g, cap, force_large).items():
        if grp.min_value != grp.max_value:
            return _record(g, grp.min_pattern, grp.max_pattern, t, t, grp.min_value, grp.max_value, EQUAL_TIMELINE)
    return None


@dataclass
class PatternSweep:
    n: int
    graphs_checked: int
    violating_graphs: int
    records: list = field(default_factory=list)
    equal_timeline_witnesses: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "graphs_checked": self.graphs_checked,
            "violating_graphs": self.violating_graphs,
            "record_count": len(self.records),
            "records": [r.to_dict() for r in self.records],
            "equal_timeline_witnesses": [r.to_dict() for r in self.equal_timeline_witnesses],
        }


def _sweep_one(g, cap):
    return hunt_pattern_conjecture(g, cap), equal_timeline_witness(g, cap)


def hunt_all_connected(n: int, cap=PATTERN_CAP, force_large=False, jobs=1) -> PatternSweep:
    check_order(n, cap, force_large, "pattern-conjecture sweep")
    graphs = list(connected_graphs(n))
    results = parallel_map(partial(_sweep_one, cap=max(n, cap)), graphs, jobs)
    sweep = PatternSweep(n, len(graphs), 0)
    for recs, witness in results:
        if recs:
            sweep.violating_graphs += 1
            sweep.records.extend(recs)
        if witness is not None:
            sweep.equal_timeline_witnesses.append(witness)
    sweep.records.sort(key=CounterexampleRecord.sort_key)
    sweep.equal_timeline_witnesses.sort(key=CounterexampleRecord.sort_key)
    return sweep


# ---------------------------------------------------------------------------
# minimum weight over all graphs with q edges


@dataclass
class ZaneReport:
    q: int
    graphs_checked: int
    global_min: int
    attainers: list
    path_shaped: int
    path_shaped_attaining: int

    @property
    def attainers_all_path_shaped(self) -> bool:
        return all(g.is_path_shaped() for g in self.attainers)

    @property
    def all_path_shaped_attain(self) -> bool:
        return self.path_shaped == self.path_shaped_attaining

    @property
    def holds(self) -> bool:
        return (
            self.global_min == self.q
            and self.attainers_all_path_shaped
            and self.all_path_shaped_attain
            and self.path_shaped > 0
        )

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "graphs_checked": self.graphs_checked,
            "global_min": self.global_min,
            "attainers": len(self.attainers),
            "path_shaped": self.path_shaped,
            "path_shaped_attaining": self.path_shaped_attaining,
            "attainers_all_path_shaped": self.attainers_all_path_shaped,
            "holds": self.holds,
        }


def _min_weights(graphs, backend):
    k = get_backend(backend)
    out = []
    for g in graphs:
        before = [[u - 1 for u in g.neighbors(d) if u < d] for d in g.vertices]
        out.append(k.extrema(g.order, before, (), True)[0])
    return out


def _chunks(items, size):
    return [items[i : i + size] for i in range(0, len(items), size)]


def hunt_zane(q: int, cap=ZANE_CAP, force_large=False, jobs=1, backend=None) -> ZaneReport:
    """Minimum weight over every connected labeled graph with q edges, and who attains it."""
    if q < 1:
        raise ParameterError("q", q, "must be >= 1")
    if q > cap and not force_large:
        raise SizeLimitError(q, cap, "edge-count sweep")
    graphs = list(connected_graphs_by_size(q))
    backend = backend or backend_name()
    parts = parallel_map(partial(_min_weights, backend=backend), _chunks(graphs, 500), jobs)
    values = [v for part in parts for v in part]
    best = min(values)
    attainers = [g for g, v in zip(graphs, values) if v == best]
    shaped = [v for g, v in zip(graphs, values) if g.is_path_shaped()]
    return ZaneReport(q, len(graphs), best, attainers, len(shaped), sum(1 for v in shaped if v == best))


# ---------------------------------------------------------------------------
# unit-level snapshot vs Hamilton path


@dataclass
class HamiltonT1Report:
    n: int
    graphs_checked: int
    with_hamilton_path: int
    violations: list

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "graphs_checked": self.graphs_checked,
            "with_hamilton_path": self.with_hamilton_path,
            "violations": [{"n": g.order, "edges": [list(e) for e in g.edges]} for g in self.violations],
        }


def unit_snapshot_pattern(g: Graph, backend=None):
    """A pattern whose level-1 snapshot is a directed spanning path, or None.

    Searches the pattern space directly (no traversal along edges) and
    confirms any hit by sprouting and taking the snapshot.
    """
    adj = [[u - 1 for u in g.neighbors(d)] for d in g.vertices]
    found, _ = get_backend(backend).unit_chain(g.order, adj)
    if found is None:
        return None
    p = IndexPattern(found)
    if not is_directed_spanning_path(g.order, snapshot(sprout(g, p), 1).arcs):
        raise AssertionError(f"kernel returned a pattern that fails the snapshot check on {g!r}")
    return p


def _t1_check(g, backend):
    has_path = find_hamilton_path(g) is not None
    has_pattern = unit_snapshot_pattern(g, backend) is not None
    return has_path, has_path != has_pattern


def hunt_hamilton_t1(n: int, cap=HAMILTON_T1_CAP, force_large=False, jobs=1, backend=None) -> HamiltonT1Report:
    check_order(n, cap, force_large, "Hamilton/snapshot sweep")
    graphs = list(connected_graphs(n))
    backend = backend or backend_name()
    results = parallel_map(partial(_t1_check, backend=backend), graphs, jobs)
    violations = [g for g, (_, bad) in zip(graphs, results) if bad]
    return HamiltonT1Report(n, len(graphs), sum(1 for has, _ in results if has), violations)


# ---------------------------------------------------------------------------
# leaf-lobbing on spanning trees


def spanning_tree_adult_exceptions(graphs) -> list:
    """Connected graphs where the spanning-tree leaf-lob labelings fail to give
    exactly one adult (unique-adult mode) or exactly one initiator."""
    out = []
    for g in graphs:
        t = spanning_tree(g)
        adults = adult_vertices(sprout(g, leaf_lob_pattern(t, "unique-adult")))
        inits = initiator_vertices(sprout(g, leaf_lob_pattern(t, "unique-initiator")))
        if len(adults) != 1 or len(inits) != 1:
            out.append(g)
    return out

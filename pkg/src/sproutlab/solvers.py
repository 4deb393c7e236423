"""Exact and constructive solvers for the min/max maturity-weight problems."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import partial
from itertools import permutations
from math import ceil

from .config import BNB_CAP, check_order, parallel_map
from .formulas import complete_mw
from .graph import Graph, bfs_order, complement
from .kernels import backend_name, get_backend
from .sprout import IndexPattern, mw

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtremaResult:
    min_value: int
    min_pattern: IndexPattern
    max_value: int
    max_pattern: IndexPattern
    explored: int

    def to_dict(self) -> dict:
        return {
            "min": self.min_value,
            "min_pattern": self.min_pattern.as_list(),
            "max": self.max_value,
            "max_pattern": self.max_pattern.as_list(),
            "explored": self.explored,
        }


def _before_lists(g: Graph) -> list:
    return [[u - 1 for u in g.neighbors(d) if u < d] for d in g.vertices]


def _adjacency(g: Graph) -> list:
    return [[u - 1 for u in g.neighbors(d)] for d in g.vertices]


def _work_units(n: int, canonical: bool) -> list:
    """Two-entry pattern prefixes in lexicographic order, pre-filtered for canonicity."""
    if n < 3:
        return [()]
    units = []
    for a in range(1, n + 1):
        if canonical and 2 * a > n + 1:
            continue
        for b in range(1, n + 1):
            if b == a:
                continue
            if canonical and 2 * a == n + 1 and 2 * b > n + 1:
                continue
            units.append((a, b))
    return units


def _run_unit(prefix, n, before, canonical, backend):
    return get_backend(backend).extrema(n, before, prefix, canonical)


def _merge(parts) -> ExtremaResult:
    parts = [p for p in parts if p is not None]
    lo = min(parts, key=lambda r: (r[0], r[1]))
    hi = min(parts, key=lambda r: (-r[2], r[3]))
    return ExtremaResult(
        lo[0], IndexPattern(lo[1]), hi[2], IndexPattern(hi[3]), sum(p[4] for p in parts)
    )


def brute_force_extrema(
    g: Graph, cap=None, force_large=False, jobs=1, symmetric=True, backend=None
) -> ExtremaResult:
    """Exact min and max maturity weight over every index pattern of ``g``.

    With ``symmetric`` only patterns with ``p <= reverse(p)`` are scored; the
    reversal leaves every arc weight unchanged and the lexicographically least
    witness of an optimum pair is always the canonical one, so values and
    witnesses equal those of the full enumeration.  Witnesses are the
    lexicographically least optimal patterns.  Work is split by two-entry
    prefixes and merged by ``(value, witness)``, so ``jobs`` never changes the
    result.
    """
    check_order(g.order, cap, force_large)
    backend = backend or backend_name()
    n = g.order
    run = partial(
        _run_unit, n=n, before=_before_lists(g), canonical=symmetric, backend=backend
    )
    return _merge(parallel_map(run, _work_units(n, symmetric), jobs))


def extrema_by_index(g: Graph, vertex: int = 1, cap=None, force_large=False, backend=None):
    """``{index: (min, max)}`` over patterns that give ``vertex`` that index."""
    check_order(g.order, cap, force_large)
    n = g.order
    # relabel so the chosen vertex comes first; the kernel fixes prefixes by vertex order
    order = [vertex] + [v for v in g.vertices if v != vertex]
    where = {v: i for i, v in enumerate(order, start=1)}
    h = Graph(n, [(where[u], where[v]) for u, v in g.edges])
    k = get_backend(backend)
    before = _before_lists(h)
    out = {}
    for i in range(1, n + 1):
        r = k.extrema(n, before, (i,), False)
        out[i] = (r[0], r[2])
    return out


def branch_and_bound_search(g: Graph, cap=BNB_CAP, force_large=False, backend=None):
    """Exact minimum by position-by-position branch and bound.

    Returns ``(value, pattern, nodes)``.  The incumbent starts at the better of
    the identity and breadth-first labelings.
    """
    check_order(g.order, cap, force_large, "branch and bound")
    n = g.order
    candidates = [IndexPattern.identity(n), IndexPattern.from_order(bfs_order(g))]
    start = min(candidates, key=lambda p: (mw(g, p), p.assignment))
    start_order = tuple(v - 1 for v in start.inverse())
    value, order, nodes = get_backend(backend).bnb_min(
        n, _adjacency(g), mw(g, start), start_order
    )
    pattern = IndexPattern.from_order([v + 1 for v in order])
    log.debug("bnb order=%d value=%d nodes=%d", n, value, nodes)
    return value, pattern, nodes


def branch_and_bound_min(g: Graph, cap=BNB_CAP, force_large=False, backend=None):
    value, pattern, _ = branch_and_bound_search(g, cap, force_large, backend)
    return value, pattern


# ---------------------------------------------------------------------------
# constructive labelings


def mmaw_sequence(n: int) -> list:
    """Zig-zag index sequence maximizing the sum of consecutive differences.

    Starts from ``[n, 1, n-1]`` and alternately prepends and appends the unused
    value farthest from the current end, preferring the smaller value on ties.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return [1]
    if n == 2:
        return [1, 2]
    seq = [n, 1, n - 1]
    unused = set(range(2, n - 1))
    front = True
    while unused:
        end = seq[0] if front else seq[-1]
        pick = max(sorted(unused), key=lambda x: abs(x - end))
        unused.discard(pick)
        if front:
            seq.insert(0, pick)
        else:
            seq.append(pick)
        front = not front
    return seq


def s4_end_pairs(n: int) -> set:
    """The admissible (first, last) pairs of a complete zig-zag."""
    half, half_down = ceil(n / 2), ceil((n - 1) / 2)
    return {(half, half + 1), (half + 1, half), (half_down, half_down + 1)}


def mmaw_path_pattern(n: int) -> IndexPattern:
    if n < 2:
        raise ValueError("path pattern needs n >= 2")
    return IndexPattern(mmaw_sequence(n))


def mmaw_cycle_pattern(n: int) -> IndexPattern:
    if n < 3:
        raise ValueError("cycle pattern needs n >= 3")
    return IndexPattern(mmaw_sequence(n))


def mmaw_identity_pattern(n: int) -> IndexPattern:
    return IndexPattern.identity(n)


# ---------------------------------------------------------------------------
# complement duality


@dataclass(frozen=True)
class DualityReport:
    order: int
    constant: int
    extrema: ExtremaResult
    complement_extrema: ExtremaResult
    exhaustive: bool
    patterns_checked: int
    sum_identity_holds: bool | None
    argmin_is_complement_argmax: bool | None
    argmax_is_complement_argmin: bool | None

    @property
    def holds(self) -> bool:
        values_ok = (
            self.extrema.min_value + self.complement_extrema.max_value == self.constant
            and self.extrema.max_value + self.complement_extrema.min_value == self.constant
        )
        flags = (
            self.sum_identity_holds,
            self.argmin_is_complement_argmax,
            self.argmax_is_complement_argmin,
        )
        return values_ok and all(f is not False for f in flags)

    def to_dict(self) -> dict:
        return {
            "n": self.order,
            "constant": self.constant,
            "graph": self.extrema.to_dict(),
            "complement": self.complement_extrema.to_dict(),
            "exhaustive": self.exhaustive,
            "patterns_checked": self.patterns_checked,
            "sum_identity_holds": self.sum_identity_holds,
            "argmin_is_complement_argmax": self.argmin_is_complement_argmax,
            "argmax_is_complement_argmin": self.argmax_is_complement_argmin,
            "holds": self.holds,
        }


def complement_duality(g: Graph, cap=None, force_large=False, exhaustive_limit=8, jobs=1):
    """Check mw(G, p) + mw(co-G, p) = mw(K_n) and the argmin/argmax exchange.

    Extrema come from the exact solver.  Pattern-by-pattern checks (and the
    comparison of full optimal-pattern sets) run when ``g.order`` is at most
    ``exhaustive_limit``; above it those fields are None.
    """
    n = g.order
    co = complement(g)
    ext = brute_force_extrema(g, cap, force_large, jobs)
    co_ext = brute_force_extrema(co, cap, force_large, jobs)
    constant = complete_mw(n)
    if n > exhaustive_limit:
        return DualityReport(n, constant, ext, co_ext, False, 0, None, None, None)
    identity = True
    argmin, argmax, co_argmin, co_argmax = set(), set(), set(), set()
    checked = 0
    for p in permutations(range(1, n + 1)):
        a, b = mw(g, p), mw(co, p)
        checked += 1
        identity &= a + b == constant
        if a == ext.min_value:
            argmin.add(p)
        if a == ext.max_value:
            argmax.add(p)
        if b == co_ext.min_value:
            co_argmin.add(p)
        if b == co_ext.max_value:
            co_argmax.add(p)
    return DualityReport(
        n, constant, ext, co_ext, True, checked, identity, argmin == co_argmax, argmax == co_argmin
    )

"""Closed-form maturity-weight expressions for the standard families, evaluated as printed.

Several of these expressions do not agree with exhaustive search; they are
kept verbatim on purpose and checked by :mod:`sproutlab.verify`.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil

from .errors import ParameterError
from .graph import Graph, complete_bipartite, edge_joint
from .sprout import IndexPattern, combine_patterns, mw


def _need(name, value, minimum):
    if value < minimum:
        raise ParameterError(name, value, f"must be >= {minimum}")


def _exact(x):
    """Integer if ``x`` is integral, otherwise the Fraction itself."""
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x


def complete_mw(n: int) -> int:
    """Double sum over j = 1..n-1 of (1 + 2 + ... + (n-j))."""
    _need("n", n, 1)
    return sum(i for j in range(1, n) for i in range(1, n - j + 1))


def path_min(n: int) -> int:
    _need("n", n, 2)
    return n - 1


def path_max_paper(n: int) -> int:
    """Sum over i = 0..ceil(n/2)-2 of (2n - 3 - 4i); empty for n = 2."""
    _need("n", n, 2)
    return sum(2 * n - 3 - 4 * i for i in range(0, ceil(n / 2) - 1))


def cycle_min(n: int) -> int:
    _need("n", n, 3)
    if n == 3:
        return complete_mw(3)
    return 2 * (n - 1)


def cycle_max_paper(n: int) -> int:
    _need("n", n, 3)
    if n == 3:
        return complete_mw(3)
    return path_max_paper(n) + 1


def _star_center(n):
    return ceil(Fraction(n + 1, 2))


def star_min(n: int) -> int:
    """Parity-cased minimum for K_(1,n); n = 1 takes the odd branch."""
    _need("n", n, 1)
    c = _star_center(n)
    twice = 2 * sum(range(1, c))
    return twice + c if n % 2 == 1 else twice


def star_max(n: int) -> int:
    _need("n", n, 1)
    return sum(range(1, n + 1))


def star_center_indices(n: int, objective: str) -> set:
    """Center indices claimed to attain the star's ``"min"`` or ``"max"``."""
    _need("n", n, 1)
    if objective == "max":
        return {1, n + 1}
    if objective != "min":
        raise ValueError("objective must be 'min' or 'max'")
    c = _star_center(n)
    return {c, c + 1} if n % 2 == 1 else {c}


def bipartite_min_paper(n: int, m: int):
    _need("n", n, 2)
    _need("m", m, 2)
    if (n + m) % 2 == 1:
        return _exact(Fraction(n * m, 2) * (n + m - 1) + Fraction(m, 2) * (m + 1))
    return _exact(Fraction(n * m, 2) * (n + m))


def bipartite_max_paper(n: int, m: int, bracketing: str = "a"):
    """Printed maximum for K_(n,m).

    The even case carries an unbalanced parenthesis; ``bracketing="a"`` reads
    it as ``n(n-1) + (nm/2)(n+m)``, ``"b"`` as ``(n(n-1) + nm/2)(n+m)``.  The
    odd case is unambiguous and identical for both.
    """
    _need("n", n, 2)
    _need("m", m, 2)
    if bracketing not in ("a", "b"):
        raise ValueError("bracketing must be 'a' or 'b'")
    if (n + m) % 2 == 0:
        if bracketing == "a":
            return _exact(n * (n - 1) + Fraction(n * m, 2) * (n + m))
        return _exact((n * (n - 1) + Fraction(n * m, 2)) * (n + m))
    return _exact((n * ((n + m) // 2 - 1) + Fraction(n, 2) * (n + 1)) * (n + m))


def bipartite_labeling(n: int, m: int, which: str) -> IndexPattern:
    """The two labelings used to argue the bipartite extrema.

    ``"min"``: left part gets 1, m+2, ..., m+n and right part 2, ..., m+1.
    ``"max"``: left part gets 1..n and right part n+1..n+m.
    """
    if which == "min":
        return IndexPattern([1] + list(range(m + 2, m + n + 1)) + list(range(2, m + 2)))
    if which == "max":
        return IndexPattern.identity(n + m)
    raise ValueError("which must be 'min' or 'max'")


def bipartite_labeling_value(n: int, m: int, which: str) -> int:
    _need("n", n, 2)
    _need("m", m, 2)
    return mw(complete_bipartite(n, m), bipartite_labeling(n, m, which))


def edge_joint_mw(g: Graph, p1, h: Graph, p2, k: int, l: int, mirrored: bool = False) -> int:
    """Weight of an edge-joint from the parts' weights plus the bridge arc.

    ``k`` is a vertex of g and ``l`` a vertex of h.  Forward form (g first):
    the bridge weighs ``|p1(k) - (p2(l) + g.order)|``.  Mirrored form (h
    first): ``|(p1(k) + h.order) - p2(l)|``.
    """
    if not 1 <= k <= g.order:
        raise ParameterError("k", k, f"must be a vertex of g (1..{g.order})")
    if not 1 <= l <= h.order:
        raise ParameterError("l", l, f"must be a vertex of h (1..{h.order})")
    p1 = p1 if isinstance(p1, IndexPattern) else IndexPattern(p1)
    p2 = p2 if isinstance(p2, IndexPattern) else IndexPattern(p2)
    ik, il = p1.index_of(k), p2.index_of(l)
    if mirrored:
        bridge = abs((ik + h.order) - il)
    else:
        bridge = abs(ik - (il + g.order))
    return mw(g, p1) + mw(h, p2) + bridge


def edge_joint_direct(g: Graph, p1, h: Graph, p2, k: int, l: int, mirrored: bool = False) -> int:
    """The same quantity computed by building and sprouting the joined graph."""
    p1 = p1 if isinstance(p1, IndexPattern) else IndexPattern(p1)
    p2 = p2 if isinstance(p2, IndexPattern) else IndexPattern(p2)
    if mirrored:
        return mw(edge_joint(h, g, l, k), combine_patterns(p2, p1))
    return mw(edge_joint(g, h, k, l), combine_patterns(p1, p2))


def wheel_min_paper(n: int) -> int:
    _need("n", n, 4)
    return cycle_min(n) + star_min(n) + 2


def wheel_max_paper(n: int) -> int:
    _need("n", n, 4)
    return cycle_max_paper(n) + star_max(n)


def ladder_min_paper(n: int) -> int:
    _need("n", n, 3)
    return 2 * path_min(n) + n * (n - 2)

from itertools import combinations, permutations

import pytest

from sproutlab.graph import Graph
from sproutlab.kernels import compiled_backend
from sproutlab.sprout import IndexPattern, maturity_weight, sprout


def naive_extrema(g):
    """Enumerate all n! patterns through the full sprout construction.

    Returns (min, lex-least min pattern, max, lex-least max pattern).
    """
    best_lo = best_hi = None
    for p in permutations(range(1, g.order + 1)):
        w = maturity_weight(sprout(g, IndexPattern(p)))
        if best_lo is None or w < best_lo[0]:
            best_lo = (w, p)
        if best_hi is None or w > best_hi[0]:
            best_hi = (w, p)
    return best_lo[0], best_lo[1], best_hi[0], best_hi[1]


def all_graphs(n):
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


BACKENDS = ["python"] + (["compiled"] if compiled_backend is not None else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[number])

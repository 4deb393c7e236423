import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from sproutlab import formulas as F
from sproutlab.errors import ParameterError
from sproutlab.graph import complete_bipartite, edge_joint, path, random_graph, star
from sproutlab.sprout import IndexPattern, combine_patterns, maturity_weight, mw, sprout

from .conftest import naive_extrema


@pytest.mark.parametrize("n, value", [(1, 0), (2, 1), (3, 4), (4, 10)])
def test_complete_examples(n, value):
    assert F.complete_mw(n) == value


@pytest.mark.parametrize("n", range(1, 51))
def test_complete_is_pair_sum(n):
    assert F.complete_mw(n) == sum(j - i for i, j in combinations(range(1, n + 1), 2))


def test_path_and_cycle():
    assert F.path_min(9) == 8
    assert (F.path_max_paper(3), F.path_max_paper(4)) == (3, 5)
    assert F.path_max_paper(2) == 0
    assert (F.cycle_min(4), F.cycle_max_paper(4)) == (6, 6)
    assert F.cycle_min(3) == F.cycle_max_paper(3) == 4


def test_star_values():
    assert [(F.star_min(n), F.star_max(n)) for n in range(1, 7)] == [
        (1, 1), (2, 3), (4, 6), (6, 10), (9, 15), (12, 21)
    ]
    assert F.star_center_indices(3, "min") == {2, 3}
    assert F.star_center_indices(4, "min") == {3}
    assert F.star_center_indices(4, "max") == {1, 5}


def _center_table(n):
    rows = {}
    for p in permutations(range(1, n + 2)):
        rows.setdefault(p[0], set()).add(maturity_weight(sprout(star(n), IndexPattern(p))))
    return rows


def test_star_k13_table():
    rows = list(permutations(range(1, 5)))
    assert len(rows) == 24
    table = _center_table(3)
    assert table == {1: {6}, 2: {4}, 3: {4}, 4: {6}}


def test_star_k12_table():
    assert _center_table(2) == {1: {3}, 2: {2}, 3: {3}}


def test_bipartite_examples():
    assert F.bipartite_min_paper(2, 2) == 8
    assert F.bipartite_labeling_value(2, 2, "min") == 6
    assert F.bipartite_labeling_value(3, 2, "min") == 11
    assert naive_extrema(complete_bipartite(2, 2))[0::2] == (6, 8)
    assert naive_extrema(complete_bipartite(3, 2))[0] == 10


def test_bipartite_fractions_are_exact():
    value = F.bipartite_min_paper(3, 2)
    assert isinstance(value, (int, Fraction))
    assert value == Fraction(6, 2) * 4 + Fraction(2, 2) * 3
    assert F.bipartite_max_paper(2, 2, "a") == 10
    assert F.bipartite_max_paper(2, 2, "b") == 16
    assert F.bipartite_max_paper(3, 2, "a") == F.bipartite_max_paper(3, 2, "b")


def test_bipartite_labelings_are_patterns():
    for n in range(2, 5):
        for m in range(2, 5):
            for which in ("min", "max"):
                assert len(F.bipartite_labeling(n, m, which)) == n + m


def test_wheel_and_ladder():
    assert F.wheel_min_paper(4) == 14
    assert F.wheel_max_paper(4) == F.cycle_max_paper(4) + F.star_max(4)
    assert F.ladder_min_paper(3) == 7
    assert F.ladder_min_paper(4) == 14


@pytest.mark.parametrize(
    "func, args", [(F.path_min, (1,)), (F.cycle_min, (2,)), (F.star_min, (0,)),
                   (F.bipartite_min_paper, (1, 3)), (F.wheel_min_paper, (3,)), (F.ladder_min_paper, (2,))],
)
def test_parameter_minimums(func, args):
    with pytest.raises(ParameterError):
        func(*args)


def test_edge_joint_example():
    p = IndexPattern([1, 2])
    assert F.edge_joint_mw(path(2), p, path(2), p, 2, 1) == 3 == mw(path(4), [1, 2, 3, 4])


def test_edge_joint_rejects_vertices():
    p = IndexPattern([1, 2])
    with pytest.raises(ParameterError):
        F.edge_joint_mw(path(2), p, path(2), p, 3, 1)


def _random_instance(rng):
    g = random_graph(rng.randint(1, 6), rng.random(), rng)
    h = random_graph(rng.randint(1, 6), rng.random(), rng)
    p1 = IndexPattern(rng.sample(range(1, g.order + 1), g.order))
    p2 = IndexPattern(rng.sample(range(1, h.order + 1), h.order))
    return g, p1, h, p2, rng.randint(1, g.order), rng.randint(1, h.order)


@pytest.mark.parametrize("mirrored", [False, True])
def test_edge_joint_formula_against_sprouting(mirrored):
    rng = random.Random(17 + mirrored)
    for _ in range(200):
        g, p1, h, p2, k, l = _random_instance(rng)
        if mirrored:
            joined, pattern = edge_joint(h, g, l, k), combine_patterns(p2, p1)
        else:
            joined, pattern = edge_joint(g, h, k, l), combine_patterns(p1, p2)
        direct = maturity_weight(sprout(joined, pattern))
        assert F.edge_joint_mw(g, p1, h, p2, k, l, mirrored) == direct
        assert F.edge_joint_direct(g, p1, h, p2, k, l, mirrored) == direct

import random
from itertools import permutations

import pytest

from sproutlab.config import check_order
from sproutlab.errors import SizeLimitError
from sproutlab.formulas import complete_mw
from sproutlab.graph import (
    Graph,
    complement,
    complete,
    complete_bipartite,
    connected_graphs,
    cycle,
    ladder,
    path,
    random_graph,
    star,
    wheel,
)
from sproutlab.solvers import (
    branch_and_bound_min,
    branch_and_bound_search,
    brute_force_extrema,
    complement_duality,
    extrema_by_index,
    mmaw_cycle_pattern,
    mmaw_identity_pattern,
    mmaw_path_pattern,
    mmaw_sequence,
    s4_end_pairs,
)
from sproutlab.sprout import IndexPattern, mw

from .conftest import all_graphs, naive_extrema


def _tuple(r):
    return r.min_value, r.min_pattern.assignment, r.max_value, r.max_pattern.assignment


class TestBruteForce:
    @pytest.mark.parametrize(
        "g, lo, hi",
        [(path(4), 3, 7), (cycle(4), 6, 8), (star(3), 4, 6), (complete_bipartite(2, 2), 6, 8),
         (complete(5), 20, 20), (Graph(1), 0, 0), (wheel(4), 14, 18), (ladder(3), 7, 19)],
        ids=["P4", "C4", "K13", "K22", "K5", "K1", "W5", "L3"],
    )
    def test_known_values(self, g, lo, hi, backend):
        r = brute_force_extrema(g, backend=backend)
        assert (r.min_value, r.max_value) == (lo, hi)
        assert mw(g, r.min_pattern) == lo and mw(g, r.max_pattern) == hi

    @pytest.mark.parametrize("n", range(1, 6))
    def test_naive_on_every_graph(self, n, backend):
        for g in all_graphs(n):
            assert _tuple(brute_force_extrema(g, backend=backend)) == naive_extrema(g)

    def test_naive_on_random_graphs(self, backend):
        rng = random.Random(6)
        for _ in range(40):
            g = random_graph(rng.randint(5, 6), rng.choice([0.3, 0.5, 0.7]), rng)
            assert _tuple(brute_force_extrema(g, backend=backend)) == naive_extrema(g)

    def test_halving_matches_full(self, backend):
        rng = random.Random(8)
        for _ in range(60):
            g = random_graph(rng.randint(1, 7), 0.5, rng)
            half = brute_force_extrema(g, backend=backend)
            full = brute_force_extrema(g, symmetric=False, backend=backend)
            assert _tuple(half) == _tuple(full)
            assert full.explored == _factorial(g.order)
            assert half.explored <= full.explored

    def test_jobs_do_not_change_result(self):
        g = random_graph(8, 0.4, random.Random(1))
        assert brute_force_extrema(g, jobs=1) == brute_force_extrema(g, jobs=4)

    def test_cap(self):
        with pytest.raises(SizeLimitError):
            brute_force_extrema(path(12))
        with pytest.raises(SizeLimitError):
            brute_force_extrema(path(6), cap=5)
        check_order(12, force=True)

    def test_cap_env(self, monkeypatch):
        monkeypatch.setenv("SPROUTLAB_CAP", "4")
        with pytest.raises(SizeLimitError):
            brute_force_extrema(path(5))

    def test_by_index_on_star(self):
        table = extrema_by_index(star(3))
        assert {i: hi for i, (_, hi) in table.items()} == {1: 6, 2: 4, 3: 4, 4: 6}
        assert table[2][0] == 4


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


class TestBranchAndBound:
    @pytest.mark.parametrize("g, value", [(path(10), 9), (cycle(8), 14), (complete(6), 35)])
    def test_examples(self, g, value, backend):
        got, p = branch_and_bound_min(g, backend=backend)
        assert got == value and mw(g, p) == value

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_brute_on_all_connected(self, n):
        for g in connected_graphs(n):
            assert branch_and_bound_min(g)[0] == brute_force_extrema(g).min_value

    @pytest.mark.slow
    def test_matches_brute_on_all_connected_6(self):
        for g in connected_graphs(6):
            value, p = branch_and_bound_min(g)
            assert value == brute_force_extrema(g).min_value == mw(g, p)

    def test_python_backend_agrees(self):
        rng = random.Random(4)
        for _ in range(30):
            g = random_graph(7, 0.5, rng)
            assert branch_and_bound_min(g, backend="python")[0] == brute_force_extrema(g).min_value

    def test_reports_nodes(self):
        _, _, nodes = branch_and_bound_search(ladder(5))
        assert nodes > 0

    def test_cap(self):
        with pytest.raises(SizeLimitError):
            branch_and_bound_min(path(17))


class TestMmaw:
    @pytest.mark.parametrize(
        "n, seq", [(1, [1]), (2, [1, 2]), (3, [3, 1, 2]), (4, [2, 4, 1, 3]), (5, [2, 5, 1, 4, 3])]
    )
    def test_sequences(self, n, seq):
        assert mmaw_sequence(n) == seq

    @pytest.mark.parametrize("n", range(4, 13))
    def test_end_pairs(self, n):
        seq = mmaw_sequence(n)
        assert (seq[0], seq[-1]) in s4_end_pairs(n)
        assert sorted(seq) == list(range(1, n + 1))

    @pytest.mark.parametrize("n", range(3, 10))
    def test_attains_exhaustive_maxima(self, n):
        assert mw(path(n), mmaw_path_pattern(n)) == brute_force_extrema(path(n)).max_value
        assert mw(cycle(n), mmaw_cycle_pattern(n)) == brute_force_extrema(cycle(n)).max_value

    def test_cycle_examples(self):
        assert mw(cycle(4), mmaw_cycle_pattern(4)) == 8
        assert mw(cycle(3), mmaw_cycle_pattern(3)) == 4
        assert mw(path(5), mmaw_path_pattern(5)) == 11

    def test_identity(self):
        assert mw(path(6), mmaw_identity_pattern(6)) == 5
        assert mw(complete(3), mmaw_identity_pattern(3)) == 4

    def test_rejects(self):
        with pytest.raises(ValueError):
            mmaw_sequence(0)
        with pytest.raises(ValueError):
            mmaw_cycle_pattern(2)


class TestDuality:
    def test_p4(self):
        rep = complement_duality(path(4))
        assert rep.constant == 10 and rep.exhaustive and rep.patterns_checked == 24
        assert rep.holds

    def test_complete_self_check(self):
        rep = complement_duality(complete(5))
        assert rep.complement_extrema.max_value == 0 and rep.holds

    @pytest.mark.parametrize("n", range(1, 6))
    def test_all_graphs(self, n):
        for g in all_graphs(n):
            assert complement_duality(g).holds

    def test_above_exhaustive_limit(self):
        rep = complement_duality(path(9))
        assert not rep.exhaustive and rep.sum_identity_holds is None and rep.holds

    def test_sum_identity_random(self):
        rng = random.Random(10)
        for _ in range(300):
            n = rng.randint(1, 10)
            g = random_graph(n, rng.random(), rng)
            p = IndexPattern(rng.sample(range(1, n + 1), n))
            assert mw(g, p) + mw(complement(g), p) == complete_mw(n)

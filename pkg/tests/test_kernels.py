import random

import pytest

from sproutlab.graph import cycle, path, random_graph
from sproutlab.kernels import backend_name, compiled_backend, get_backend, python_backend
from sproutlab.solvers import _adjacency, _before_lists

needs_ext = pytest.mark.skipif(compiled_backend is None, reason="compiled kernels not built")


def _instances(count, seed, max_n=7):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_graph(rng.randint(1, max_n), rng.choice([0.2, 0.5, 0.8]), rng)


def test_get_backend_names():
    assert get_backend("python") is python_backend
    with pytest.raises(ValueError):
        get_backend("fortran")


def test_env_forces_python(monkeypatch):
    monkeypatch.setenv("SPROUTLAB_PURE_PYTHON", "1")
    assert get_backend() is python_backend
    assert backend_name() == "python"


@needs_ext
def test_compiled_is_default(monkeypatch):
    monkeypatch.delenv("SPROUTLAB_PURE_PYTHON", raising=False)
    assert backend_name() == "compiled"


@needs_ext
@pytest.mark.parametrize("canonical", [True, False])
def test_extrema_equivalence(canonical):
    for g in _instances(150, 11):
        n = g.order
        before = _before_lists(g)
        for prefix in [()] + [(a,) for a in range(1, n + 1)]:
            c = compiled_backend.extrema(n, before, prefix, canonical)
            p = python_backend.extrema(n, before, prefix, canonical)
            if c is not None:
                c = (c[0], tuple(c[1]), c[2], tuple(c[3]), c[4])
            if p is not None:
                p = (p[0], tuple(p[1]), p[2], tuple(p[3]), p[4])
            assert c == p, (g, prefix)


@needs_ext
def test_bnb_and_unit_chain_equivalence():
    for g in _instances(150, 12, max_n=8):
        n, adj = g.order, _adjacency(g)
        start = tuple(range(n))
        inc = sum(abs(u - v) for u, v in g.edges)
        c = compiled_backend.bnb_min(n, adj, inc, start)
        p = python_backend.bnb_min(n, adj, inc, start)
        assert c[0] == p[0]
        uc, up = compiled_backend.unit_chain(n, adj), python_backend.unit_chain(n, adj)
        assert (None if uc[0] is None else tuple(uc[0])) == (None if up[0] is None else tuple(up[0]))


def test_extrema_rejects_bad_prefix(backend):
    k = get_backend(backend)
    with pytest.raises(ValueError):
        k.extrema(3, _before_lists(path(3)), (1, 1), False)


def test_unit_chain_on_cycle(backend):
    found, _ = get_backend(backend).unit_chain(5, _adjacency(cycle(5)))
    assert tuple(found) == (1, 2, 3, 4, 5)


def test_benchmark_runs(capsys):
    import runpy
    import pathlib

    script = pathlib.Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    runpy.run_path(str(script), run_name="bench")["main"](["--max-n", "6", "--repeat", "1"])
    assert "extrema" in capsys.readouterr().out

"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--max-n 9] [--repeat 3]
"""

import argparse
import random
import time

from sproutlab.graph import ladder, random_graph
from sproutlab.kernels import compiled_backend
from sproutlab.solvers import branch_and_bound_min, brute_force_extrema


def _best(func, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        func()
        times.append(time.perf_counter() - start)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = ["python"] + (["compiled"] if compiled_backend is not None else [])
    print(f"{'kernel':<10} {'n':>3} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    rows = [("extrema", n, random_graph(n, 0.5, random.Random(n)), brute_force_extrema) for n in range(6, args.max_n + 1)]
    rows += [("bnb", 2 * k, ladder(k), branch_and_bound_min) for k in range(3, 6)]
    for name, n, g, solver in rows:
        t = {b: _best(lambda: solver(g, backend=b), args.repeat) for b in backends}
        speed = f"{t['python'] / t['compiled']:8.1f}x" if "compiled" in t else "       -"
        print(f"{name:<10} {n:>3} " + " ".join(f"{t[b]:>9.4f}s" for b in backends) + f"  {speed}")


if __name__ == "__main__":
    main()

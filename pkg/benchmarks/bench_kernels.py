"""Benchmark the numba kernels against the pure-numpy fallback.

Runs each hot kernel on representative corpus graphs with both
backends and prints a timing table.  Usage:

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import importlib
import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from medkit import generators as gen  # noqa: E402
from medkit import _kernels_numpy  # noqa: E402

try:
    from medkit import _kernels_numba
    HAVE_NUMBA = True
except ImportError:
    _kernels_numba = None
    HAVE_NUMBA = False
    print("numba unavailable; showing numpy timings only")


def timeit(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_graph(name, graph, repeat):
    adj = graph.adj
    dist = graph.dist
    rng = np.random.default_rng(0)
    tri = rng.integers(0, graph.n, size=(200_000, 3)).astype(np.int64)
    seed_mask = np.zeros(graph.n, dtype=bool)
    seed_mask[rng.choice(graph.n, size=min(3, graph.n), replace=False)] = True

    cases = [
        ("all_pairs_distances", (adj,)),
        ("median_triple_check", (dist,)),
        ("batch_medians", (dist, tri[:, 0], tri[:, 1], tri[:, 2])),
        ("hull_closure", (dist, seed_mask)),
    ]
    for fname, args in cases:
        row = [f"{name:<12} {fname:<22}"]
        base = None
        for label, mod in (("numpy", _kernels_numpy),
                           ("numba", _kernels_numba)):
            if mod is None:
                continue
            fn = getattr(mod, fname)
            if label == "numba":
                fn(*args)  # warm the JIT outside the timing loop
            secs, _ = timeit(fn, *args, repeat=repeat)
            row.append(f"{label} {secs * 1e3:9.2f} ms")
            if label == "numpy":
                base = secs
            elif base:
                row.append(f"speedup {base / secs:6.1f}x")
        print("  ".join(row))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    graphs = [
        ("grid-10x20", gen.grid(10, 20)),
        ("tree-200", gen.prufer_tree(200, seed=1)),
        ("hypercube-6", gen.hypercube(6)),
        ("staircase-6", gen.staircase(6)),
    ]
    print(f"kernel benchmark, repeat={args.repeat} "
          f"(best of N; numba warmed before timing)")
    for name, g in graphs:
        bench_graph(name, g, args.repeat)


if __name__ == "__main__":
    main()

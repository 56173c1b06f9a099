"""Kernel dispatch: numba-compiled hot loops with a pure-numpy fallback.

The backend is chosen once, lazily, from the MEDKIT_KERNELS environment
variable: "numba", "numpy", or unset/"auto" (numba when importable).
``benchmarks/bench_kernels.py`` compares both paths on the same inputs.
"""

import os

_backend = None
_backend_label = None


def _resolve():
    global _backend, _backend_label
    if _backend is not None:
        return _backend
    choice = os.environ.get("MEDKIT_KERNELS", "auto").strip().lower()
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(f"MEDKIT_KERNELS must be auto|numba|numpy, got {choice!r}")
    if choice in ("auto", "numba"):
        try:
            from . import _kernels_numba as impl
            _backend, _backend_label = impl, "numba"
            return impl
        except ImportError:
            if choice == "numba":
                raise
    from . import _kernels_numpy as impl
    _backend, _backend_label = impl, "numpy"
    return impl


def backend_name():
    _resolve()
    return _backend_label


def all_pairs_distances(adj):
    return _resolve().all_pairs_distances(adj)


def median_triple_check(dist):
    return _resolve().median_triple_check(dist)


def batch_medians(dist, xs, ys, zs):
    return _resolve().batch_medians(dist, xs, ys, zs)


def hull_closure(dist, seed):
    return _resolve().hull_closure(dist, seed)

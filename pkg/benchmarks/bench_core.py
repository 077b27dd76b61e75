#!/usr/bin/env python3
"""Benchmark the compiled table kernels against the NumPy fallback.

The four kernels dominate witness verification: the O(n^3) associativity
scan run on every constructed table, subgroup closure, the normality scan,
and commutator generation.  Workloads use the order-294 witness (the
largest group the default suite builds) plus a mid-sized group.
"""

import time

import numpy as np

from groupnum._core import pycore

try:
    from groupnum._core import _ccore
except ImportError:
    _ccore = None

from groupnum.construct import make_case_group, make_cyclic, make_semidirect_elem_abelian
from groupnum.groups import direct_product


def best_of(fn, repeat=5):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def workloads():
    g294 = make_case_group("f2", 2, 7, pprime=3)
    g240 = direct_product(make_semidirect_elem_abelian(2, 2, 3), make_cyclic(20))
    for G in (g240, g294):
        members = pycore.closure(G.table, [1, G.order // 2])
        yield f"associativity n={G.order}", (
            lambda G=G: pycore.associativity_defect(G.table),
            lambda G=G: _ccore.associativity_defect(G.table) if _ccore else None,
        )
        yield f"closure       n={G.order}", (
            lambda G=G: pycore.closure(G.table, [1, 2, G.order - 1]),
            lambda G=G: _ccore.closure(G.table, [1, 2, G.order - 1]) if _ccore else None,
        )
        yield f"is_normal     n={G.order}", (
            lambda G=G, m=members: pycore.is_normal(G.table, G.inverse, m),
            lambda G=G, m=members: _ccore.is_normal(G.table, G.inverse, m) if _ccore else None,
        )
        yield f"commutators   n={G.order}", (
            lambda G=G: pycore.commutator_set(
                G.table, G.inverse, np.arange(G.order, dtype=np.int32)
            ),
            lambda G=G: _ccore.commutator_set(
                G.table, G.inverse, np.arange(G.order, dtype=np.int32)
            )
            if _ccore
            else None,
        )


def main():
    if _ccore is None:
        print("compiled extension not built; benchmarking the fallback only")
    print(f"{'kernel':<24} {'numpy (ms)':>12} {'cython (ms)':>12} {'speedup':>9}")
    for name, (py_fn, c_fn) in workloads():
        py_ms = best_of(py_fn) * 1e3
        if _ccore is not None:
            c_ms = best_of(c_fn) * 1e3
            print(f"{name:<24} {py_ms:>12.3f} {c_ms:>12.3f} {py_ms / c_ms:>8.1f}x")
        else:
            print(f"{name:<24} {py_ms:>12.3f} {'-':>12} {'-':>9}")


if __name__ == "__main__":
    main()

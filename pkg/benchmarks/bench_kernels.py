"""Benchmark the compiled kernels against the numpy fallback.

Times the three operations that dominate lattice-scale runs (subgroup
closure, normal core, product set) plus a full subgroup-lattice enumeration,
on a few groups of increasing order.  Run with ``python benchmarks/bench_kernels.py``.
"""

from __future__ import annotations

import time

import numpy as np

from ssn.families import builtin_family
from ssn.groups import all_subgroups
from ssn.kernels import pyk

try:
    from ssn.kernels import ck
except ImportError:
    ck = None


CASES = [
    "symmetric(4)",
    "wreath_cyclic(2,3)",
    "alternating(5)",
    "direct_product(symmetric(4),cyclic(5))",
]


def time_fn(fn, *args, repeat: int = 200) -> float:
    best = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        for _ in range(repeat):
            fn(*args)
        best = min(best, (time.perf_counter() - t0) / repeat)
    return best


def bench_kernels(group_name: str) -> None:
    g = builtin_family(group_name)
    table = g.table
    inv = g.inverses
    rng = np.random.default_rng(7)
    seed = rng.choice(g.order, size=3, replace=False).astype(np.int32)
    members = pyk.closure(table, seed)
    member_idx = np.flatnonzero(members).astype(np.int32)
    everyone = np.arange(g.order, dtype=np.int32)

    rows = []
    backends = [("python", pyk)] + ([("cython", ck)] if ck is not None else [])
    for name, impl in backends:
        rows.append(
            (
                name,
                time_fn(impl.closure, table, seed),
                time_fn(impl.core_members, table, inv, members, everyone),
                time_fn(impl.product_set, table, member_idx, member_idx),
            )
        )
    print(f"\n{group_name}: order {g.order}, closure size {member_idx.size}")
    print(f"  {'backend':8} {'closure':>12} {'core':>12} {'product':>12}")
    for name, a, b, c in rows:
        print(f"  {name:8} {a * 1e6:>10.1f}us {b * 1e6:>10.1f}us {c * 1e6:>10.1f}us")
    if len(rows) == 2:
        speed = [rows[0][k] / rows[1][k] for k in (1, 2, 3)]
        print(f"  speedup  {speed[0]:>11.1f}x {speed[1]:>11.1f}x {speed[2]:>11.1f}x")


def bench_lattice(group_name: str) -> None:
    # groups.py resolves kernels.<fn> at call time, so patching the attributes
    # on the kernels package switches the backend for a fresh group object.
    import ssn.kernels as kernels_mod

    attrs = ("closure", "product_set", "conjugate_expand", "core_members")
    saved = {a: getattr(kernels_mod, a) for a in attrs}
    timings = {}
    size = 0
    try:
        for backend, impl in (("python", pyk), ("cython", ck)):
            if impl is None:
                continue
            for a in attrs:
                setattr(kernels_mod, a, getattr(impl, a))
            g = builtin_family(group_name)
            t0 = time.perf_counter()
            lat = all_subgroups(g)
            timings[backend] = time.perf_counter() - t0
            size = len(lat)
    finally:
        for a, fn in saved.items():
            setattr(kernels_mod, a, fn)
    line = f"lattice({group_name}): {size} subgroups; " + "  ".join(
        f"{k}={v * 1e3:.1f}ms" for k, v in timings.items()
    )
    if len(timings) == 2:
        line += f"  speedup={timings['python'] / timings['cython']:.1f}x"
    print(line)


if __name__ == "__main__":
    print("kernel microbenchmarks (best of 3 x 200 calls)")
    for case in CASES:
        bench_kernels(case)
    print("\nend-to-end lattice enumeration")
    for case in CASES:
        bench_lattice(case)

#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-python fallbacks.

Run:  python benchmarks/bench_kernels.py
The active backend follows QUANDLEKIT_KERNELS; both variants are timed here
regardless, with the compiled ones warmed up before measuring.
"""

import time

import numpy as np

from quandlekit import _kernels
from quandlekit.catalog import load_bundled_catalog
from quandlekit.construct import conj_quandle
from quandlekit.enumerate import enumerate_degree
from quandlekit.group import make_group
from quandlekit.perm import parse_cycles
from quandlekit.quandle import dihedral_quandle, from_table

WORKED_ROWS = [(1, 4, 2, 3), (3, 2, 4, 1), (4, 1, 3, 2), (2, 3, 1, 4)]


def build_cases():
    s7 = make_group([parse_cycles("(1,2)", 7), parse_cycles("(1,2,3,4,5,6,7)", 7)])
    q21, _ = conj_quandle(s7, parse_cycles("(1,2)", 7))
    prim = load_bundled_catalog("primitive_desk.cat")
    sp = next(r for r in prim if r.label == "Sp6_2-d63").build_group()
    rho63 = parse_cycles(
        next(r for r in prim if r.label == "PSU3_3-d63").gen_strings[0],
        63,
    )
    psu = next(r for r in prim if r.label == "PSU3_3-d63").build_group()
    q63 = conj_quandle(psu, _pick_class_of_size(psu, 63))[0]
    return {
        "worked-4": from_table(4, WORKED_ROWS),
        "dihedral-24": dihedral_quandle(24),
        "conj-S7-21": q21,
        "conj-PSU33-63": q63,
    }


def _pick_class_of_size(group, size):
    for g in sorted(group.elements(10**6), key=lambda p: tuple(p.images)):
        if g.is_identity():
            continue
        if len(group.conjugacy_class(g)) == size:
            return g
    raise RuntimeError("no class of requested size")


def time_fn(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_tables(cases):
    print(f"active backend: {_kernels.backend_name()}")
    print(f"{'case':>16} {'kernel':>24} {'compiled':>12} {'python':>12} {'speedup':>9}")
    for name, q in cases.items():
        t0 = q.table - 1
        for kname in ("is_simple_table", "distributivity_witness"):
            fast = getattr(_kernels, kname)
            slow = _kernels.python_kernels[kname]
            fast(t0)  # warm the JIT
            tf = time_fn(fast, t0)
            ts = time_fn(slow, t0)
            ratio = ts / tf if tf > 0 else float("inf")
            print(f"{name:>16} {kname:>24} {tf:>11.5f}s {ts:>11.5f}s {ratio:>8.1f}x")


def bench_pipeline():
    prim = load_bundled_catalog("primitive_desk.cat")
    t0 = time.perf_counter()
    res = enumerate_degree(10, prim, "primitive")
    dt = time.perf_counter() - t0
    print(f"\nenumerate degree 10 (primitive catalog): {dt:.2f}s, "
          f"raw={res.raw_total} filtered={res.filtered_total}")


if __name__ == "__main__":
    cases = build_cases()
    bench_tables(cases)
    bench_pipeline()

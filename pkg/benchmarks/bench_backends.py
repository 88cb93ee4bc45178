"""Compare the compiled and pure-Python summation backends.

Usage: python3 benchmarks/bench_backends.py [repeats]
"""

from __future__ import annotations

import sys
import time

import numpy as np

from cosasym import _kernels_py

try:
    from cosasym import _kernels_cy
except ImportError:
    _kernels_cy = None


def timeit(fn, repeats):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


CASES = [
    ("h_partial_sum (N=1e6)",
     lambda m: m.h_partial_sum(0.37, 1.5, 1_000_000)),
    ("kernel_partial_sum d=2 (N=1e5)",
     lambda m: m.kernel_partial_sum(np.array([0.5, 0.7]), 2.5, 100_000)),
    ("kernel_partial_sum d=3 (N=1e5)",
     lambda m: m.kernel_partial_sum(np.array([0.3, 0.4, 0.5]), 4.2, 100_000)),
    ("lattice_shell_sums d=2 (N=300)",
     lambda m: float(m.lattice_shell_sums(np.array([0.5, 0.7]), 300).sum())),
    ("lattice_shell_sums d=3 (N=40)",
     lambda m: float(m.lattice_shell_sums(np.array([0.3, 0.4, 0.5]), 40).sum())),
    ("lattice_noise_shell_sums d=2 (N=200)",
     lambda m: float(m.lattice_noise_shell_sums(
         np.array([0.5, 0.7]), 200, 0.5, 2.0, 42).sum())),
]


def main() -> int:
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    if _kernels_cy is None:
        print("compiled backend not built; showing python backend only")
    print(f"{'case':42s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}")
    for name, fn in CASES:
        t_py, v_py = timeit(lambda: fn(_kernels_py), repeats)
        if _kernels_cy is not None:
            t_cy, v_cy = timeit(lambda: fn(_kernels_cy), repeats)
            rel = abs(v_py - v_cy) / max(1.0, abs(v_py))
            assert rel < 1e-9, (name, v_py, v_cy)
            print(f"{name:42s} {t_py*1e3:9.2f}ms {t_cy*1e3:9.2f}ms {t_py/t_cy:7.1f}x")
        else:
            print(f"{name:42s} {t_py*1e3:9.2f}ms {'-':>10s} {'-':>8s}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

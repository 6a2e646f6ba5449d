"""Compare the compiled and pure-Python modular Stirling kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each case is timed with both backends, and the outputs are compared.
"""
from __future__ import annotations

import argparse
import timeit

from lacuna import _pykernels

try:
    from lacuna import _ckernels
except ImportError:
    _ckernels = None

CASES = [
    ("row recurrence, first kind, n=2000, p=13", "stirling_row_mod", (1, 2000, 13)),
    ("row recurrence, second kind, n=2000, p=101", "stirling_row_mod", (2, 2000, 101)),
    ("closed-form row, first kind, n=20000, p=11", "stirling1_row_closed_mod", (20000, 11)),
    ("Lucas binomial, n=10^18, p=7919", "binom_mod_p", (10**18, 10**17 + 3, 7919)),
]


def best_time(fn, args, repeat: int) -> float:
    number = 1
    while timeit.timeit(lambda: fn(*args), number=number) < 0.05:
        number *= 4
    return min(timeit.repeat(lambda: fn(*args), number=number, repeat=repeat)) / number


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the Python backend is available")
    print(f"{'case':48} {'python':>12} {'cython':>12} {'speedup':>9}")
    for label, name, call_args in CASES:
        py_fn = getattr(_pykernels, name)
        py_t = best_time(py_fn, call_args, args.repeat)
        if _ckernels is None:
            print(f"{label:48} {py_t * 1e3:10.3f}ms {'-':>12} {'-':>9}")
            continue
        c_fn = getattr(_ckernels, name)
        if _as_list(py_fn(*call_args)) != _as_list(c_fn(*call_args)):
            raise SystemExit(f"backends disagree on {label}")
        c_t = best_time(c_fn, call_args, args.repeat)
        print(f"{label:48} {py_t * 1e3:10.3f}ms {c_t * 1e3:10.3f}ms {py_t / c_t:8.1f}x")


def _as_list(value):
    return list(value) if not isinstance(value, int) else value


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Benchmark the compiled summation kernels against the pure-Python twin.

The workload is the family of box sums behind the radial entropies: 2q axes
of order k, evaluated at 1/q, which is where runtime concentrates as the
principal quantum number and the entropy order grow.

Run:  python benchmarks/bench_kernels.py [--repeat N] [--heavy]
"""

from __future__ import annotations

import argparse
import sys
import timeit
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hydrenyi import kernels  # noqa: E402


def lauricella_case(D: int, n: int, l: int, q: int):
    k = n - l - 1
    args = (
        (2 * l * q + D, 1),
        [(-k, 1)] * (2 * q),
        [(2 * l + D - 1, 1)] * (2 * q),
        [(1, q)] * (2 * q),
        [k] * (2 * q),
    )
    return args, (k + 1) ** (2 * q)


def daoust_case(D: int, n: int, l: int, q: int):
    k = n - l - 1
    # momentum-entropy shape for odd D: half-integer parameters
    args = (
        ((2 * l + D) * q - D * (q - 1), 2),
        (q * (2 * l + D + 1), 1),
        [(-k, 1)] * (2 * q),
        [(2 * n + 2 * l + 2 * D - 6 + 2, 2)] * (2 * q),
        [(2 * l + D, 2)] * (2 * q),
        [(1, 1)] * (2 * q),
        [k] * (2 * q),
    )
    return args, (k + 1) ** (2 * q)


def time_call(fn, args, repeat: int) -> float:
    timer = timeit.Timer(lambda: fn(*args))
    return min(timer.repeat(repeat=repeat, number=1))


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument(
        "--heavy", action="store_true", help="add the largest (slow) cases"
    )
    args = parser.parse_args()

    backends = {name: kernels.load_backend(name) for name in kernels.available_backends()}
    if "cython" not in backends:
        print("note: compiled backend not built; timing pure Python only")

    cases = [
        ("lauricella D=3 n=4 l=0 q=2", lauricella_case(3, 4, 0, 2)),
        ("lauricella D=3 n=4 l=0 q=3", lauricella_case(3, 4, 0, 3)),
        ("lauricella D=5 n=6 l=0 q=3", lauricella_case(5, 6, 0, 3)),
        ("daoust     D=3 n=4 l=0 q=2", daoust_case(3, 4, 0, 2)),
        ("daoust     D=3 n=4 l=0 q=3", daoust_case(3, 4, 0, 3)),
        ("daoust     D=5 n=6 l=0 q=3", daoust_case(5, 6, 0, 3)),
    ]
    if args.heavy:
        cases += [
            ("lauricella D=3 n=8 l=0 q=3", lauricella_case(3, 8, 0, 3)),
            ("daoust     D=3 n=8 l=0 q=3", daoust_case(3, 8, 0, 3)),
        ]

    header = f"{'case':<30} {'terms':>10}"
    for name in backends:
        header += f" {name + ' (ms)':>14}"
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(f"active backend: {kernels.BACKEND}")
    print(header)
    print("-" * len(header))
    for label, (call_args, terms) in cases:
        fn_name = "lauricella_boxsum" if label.startswith("lauricella") else "daoust_boxsum"
        times = {}
        reference = None
        for name, module in backends.items():
            fn = getattr(module, fn_name)
            result = fn(*call_args)
            if reference is None:
                reference = result
            elif result != reference:
                print(f"BACKEND MISMATCH on {label}: {result} != {reference}")
                return 1
            times[name] = time_call(fn, call_args, args.repeat)
        row = f"{label:<30} {terms:>10}"
        for name in backends:
            row += f" {times[name] * 1000:>14.2f}"
        if len(backends) == 2:
            row += f" {times['python'] / times['cython']:>8.2f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Benchmark the numba scan kernel against the pure-numpy fallback.

Builds the standard codes for one parameter triple and times a full
message-space weight scan under each backend, checking that the resulting
histograms are identical.

    python benchmarks/bench_backends.py --q 11 --p 3 --m 2 --repeats 3
"""

import argparse
import time

import numpy as np

from dihedral_codes import (
    DihedralGroup,
    PrimeField,
    central_idempotents,
    left_ideal_code,
    matrix_units,
    noncentral_generator,
)
from dihedral_codes._kernels import HAS_NUMBA, scan_range


def time_backend(G, q, total, backend, repeats):
    scan_range(G, q, 0, min(total, 1024), backend=backend)  # warm-up / JIT
    best = float("inf")
    hist = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        hist = scan_range(G, q, 0, total, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, hist


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--q", type=int, default=11)
    parser.add_argument("--p", type=int, default=3)
    parser.add_argument("--m", type=int, default=2)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    field = PrimeField(args.q)
    group = DihedralGroup(args.p, args.m)
    catalog = central_idempotents(field, group)

    cases = []
    units1 = matrix_units(catalog, 1)
    cases.append(("f (j=1)", left_ideal_code(noncentral_generator(units1).f)))
    for j in range(1, args.m + 1):
        cases.append((f"e11 (j={j})", left_ideal_code(matrix_units(catalog, j).e11)))

    print(f"q={args.q} p={args.p} m={args.m}   numba available: {HAS_NUMBA}")
    print(f"{'code':<12} {'n':>3} {'k':>2} {'messages':>10} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for label, code in cases:
        total = code.size()
        if total > 1 << 24:
            print(f"{label:<12} {code.n:>3} {code.k:>2} {total:>10}  (skipped: beyond default budget)")
            continue
        G = np.asarray(code.generator_matrix)
        t_np, h_np = time_backend(G, code.q, total, "numpy", args.repeats)
        if HAS_NUMBA:
            t_nb, h_nb = time_backend(G, code.q, total, "numba", args.repeats)
            assert np.array_equal(h_np, h_nb), "backends disagree"
            print(
                f"{label:<12} {code.n:>3} {code.k:>2} {total:>10} {t_np:>9.4f}s {t_nb:>9.4f}s {t_np / t_nb:>7.1f}x"
            )
        else:
            print(f"{label:<12} {code.n:>3} {code.k:>2} {total:>10} {t_np:>9.4f}s {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()

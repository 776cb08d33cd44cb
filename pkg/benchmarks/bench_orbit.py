#!/usr/bin/env python3
"""Weyl orbit enumeration: numba kernel vs pure numpy.

    python benchmarks/bench_orbit.py            # default cases
    python benchmarks/bench_orbit.py E7 --repeat 3
"""

import argparse
import time

from motcalc import _kernels
from motcalc.roots import ParabolicSpec, build_root_system, coset_lengths

CASES = ["B6", "D6", "E6", "F4", "A8", "E7"]


def bench(rs, use_numba, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        prof = coset_lengths(rs, ParabolicSpec(), max_orbit=5_000_000, use_numba=use_numba)
        best = min(best, time.perf_counter() - t0)
    return best, prof


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("types", nargs="*", default=CASES, help="e.g. E7 B5 A6 (full flag varieties)")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if _kernels.HAVE_NUMBA:
        # compile outside the timed region
        coset_lengths(build_root_system("A", 2), ParabolicSpec(), use_numba=True)
    print(f"{'type':>5} {'|W|':>10} {'numpy s':>9} {'numba s':>9} {'speedup':>8}")
    for name in args.types:
        rs = build_root_system(name[0], int(name[1:]))
        t_np, p_np = bench(rs, False, args.repeat)
        if _kernels.HAVE_NUMBA:
            t_nb, p_nb = bench(rs, True, args.repeat)
            assert p_nb == p_np, name
            print(f"{name:>5} {p_np.total:>10} {t_np:>9.3f} {t_nb:>9.3f} {t_np / t_nb:>7.2f}x")
        else:
            print(f"{name:>5} {p_np.total:>10} {t_np:>9.3f} {'-':>9} {'-':>8}")


if __name__ == "__main__":
    main()

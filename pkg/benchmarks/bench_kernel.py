#!/usr/bin/env python3
"""Benchmark: compiled vs pure iteration kernel on the entropy hot loop.

Runs the growth iteration for the degree-(4+2p) small-entropy braids (the
slowest convergers in the acceptance suite) under both kernels and reports
wall time, iterations, and the value agreement.

Usage: python benchmarks/bench_kernel.py [--pmax 8] [--tol 1e-8]
"""

import argparse
import time

from braidseq import dynnikov
from braidseq.standard import StandardForm, TwistProgram, apply_program


def run(kernel: str, word, tol: float, max_iter: int):
    t0 = time.perf_counter()
    est = dynnikov.entropy_estimate(word, tol=tol, max_iter=max_iter,
                                    kernel=kernel)
    return time.perf_counter() - t0, est


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pmax", type=int, default=8)
    ap.add_argument("--tol", type=float, default=1e-8)
    ap.add_argument("--max-iter", type=int, default=4096)
    args = ap.parse_args()

    if not dynnikov.HAVE_COMPILED_KERNEL:
        print("compiled kernel not built; benchmarking pure engine only")

    seed = StandardForm(3, ((-1,),))
    header = f"{'p':>3} {'deg':>4} {'letters':>8} {'iters':>6} " \
             f"{'pure [s]':>10} {'compiled [s]':>13} {'speedup':>8} {'|diff|':>10}"
    print(header)
    print("-" * len(header))
    total_pure = total_comp = 0.0
    for p in range(1, args.pmax + 1):
        word = apply_program(seed, TwistProgram((0, p, 1))).to_braid_word()
        tp, ep = run("pure", word, args.tol, args.max_iter)
        total_pure += tp
        if dynnikov.HAVE_COMPILED_KERNEL:
            tc, ec = run("compiled", word, args.tol, args.max_iter)
            total_comp += tc
            diff = abs(ep.value - ec.value)
            print(f"{p:>3} {word.degree:>4} {len(word):>8} {ep.iterations:>6} "
                  f"{tp:>10.3f} {tc:>13.4f} {tp / tc:>7.1f}x {diff:>10.2e}")
        else:
            print(f"{p:>3} {word.degree:>4} {len(word):>8} {ep.iterations:>6} "
                  f"{tp:>10.3f} {'-':>13} {'-':>8} {'-':>10}")
    if dynnikov.HAVE_COMPILED_KERNEL:
        print(f"\ntotal: pure {total_pure:.2f}s, compiled {total_comp:.2f}s "
              f"({total_pure / total_comp:.1f}x)")


if __name__ == "__main__":
    main()

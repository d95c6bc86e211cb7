#!/usr/bin/env python3
"""Benchmark the compiled Gröbner kernel against the pure-Python twin.

Runs identical Buchberger workloads through both kernels (the conjugacy
systems that dominate the verification suites, plus a synthetic ideal) and
prints wall-clock times and the speedup.  Results are also cross-checked
for exact equality.

Usage: python3 benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import sys
import time

from slocc4 import _gbcore, _gbpure
from slocc4.algebra import StateVector
from slocc4.conjugacy import conjugating_system
from slocc4.groebner import Ideal, Limits
from slocc4.poly import PolyRing, parse_poly


def workloads():
    from slocc4.catalog import nilpotent_representative
    out = []
    # orbit separation inside a filter-tied bucket (trivial-ideal detection)
    out.append(("tied orbits 2 vs 3",
                conjugating_system(nilpotent_representative(2),
                                   nilpotent_representative(3))))
    out.append(("tied orbits 17 vs 22",
                conjugating_system(nilpotent_representative(17),
                                   nilpotent_representative(22))))
    # a conjugacy system with solutions (proper ideal)
    a = StateVector.basis("1100")
    c = StateVector.basis("0011")
    out.append(("product-state conjugacy", conjugating_system(c, a)))
    # katsura-5, a standard stress ideal
    R = PolyRing(6, "degrevlex", names=("a", "b", "c", "d", "e", "f"))
    kat = [
        parse_poly(R, "a+2*b+2*c+2*d+2*e+2*f-1"),
        parse_poly(R, "a^2+2*b^2+2*c^2+2*d^2+2*e^2+2*f^2-a"),
        parse_poly(R, "2*a*b+2*b*c+2*c*d+2*d*e+2*e*f-b"),
        parse_poly(R, "b^2+2*a*c+2*b*d+2*c*e+2*d*f-c"),
        parse_poly(R, "2*b*c+2*a*d+2*b*e+2*c*f-d"),
        parse_poly(R, "c^2+2*b*d+2*a*e+2*b*f-e"),
    ]
    out.append(("katsura-5", kat))
    return out


def run(kernel, gens, limits):
    # run one full Buchberger pass routed through the chosen kernel
    import slocc4.groebner as G
    saved = G.kernel
    G.kernel = kernel
    try:
        t0 = time.perf_counter()
        res = G.buchberger(Ideal(gens, "degrevlex"), limits)
        dt = time.perf_counter() - t0
    finally:
        G.kernel = saved
    return dt, res


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    limits = Limits(max_degree=24, time_budget=600.0)
    print(f"{'workload':28s} {'pure (s)':>10s} {'cython (s)':>11s} {'speedup':>8s}")
    for name, gens in workloads():
        best = {}
        results = {}
        for tag, kernel in (("pure", _gbpure), ("cython", _gbcore)):
            times = []
            for _ in range(args.repeat):
                dt, res = run(kernel, gens, limits)
                times.append(dt)
            best[tag] = min(times)
            results[tag] = res
        if results["pure"].verdict != results["cython"].verdict or \
                results["pure"].basis != results["cython"].basis:
            print(f"MISMATCH on {name}", file=sys.stderr)
            return 1
        speed = best["pure"] / best["cython"] if best["cython"] else float("inf")
        print(f"{name:28s} {best['pure']:10.3f} {best['cython']:11.3f} "
              f"{speed:7.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--bound 20000] [--repeat 3]
"""

import argparse
import time

from pisano_legendre import graphs, kernels
from pisano_legendre.labeling import _label_table
from pisano_legendre.survey import odd_primes_upto


def best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def orbit_scan(mod, primes):
    return [mod.orbit_counts(0, 1, p) for p in primes]


def search(mod, g, p):
    table = _label_table(g.order, p, (0, 1))
    us = [u for u, _ in g.edges]
    vs = [v for _, v in g.edges]
    return mod.first_cordial(g.order, us, vs, table)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bound", type=int, default=20000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = kernels.backends()
    primes = odd_primes_upto(args.bound)
    # no cordial labeling exists, so the whole permutation space is walked
    hard = graphs.complete(9)
    assert all(search(mod, hard, 3) is None for mod in backends.values())

    cases = [
        (f"orbit scan, {len(primes)} primes <= {args.bound}", lambda m: orbit_scan(m, primes)),
        ("exhaustive search, K9 at p=3 (9! assignments)", lambda m: search(m, hard, 3)),
    ]
    print(f"selected backend: {kernels.BACKEND}")
    for label, fn in cases:
        row = {name: best(lambda mod=mod: fn(mod), args.repeat) for name, mod in backends.items()}
        cells = "  ".join(f"{name} {t:8.3f} s" for name, t in sorted(row.items()))
        speedup = ""
        if "cython" in row:
            speedup = f"  speedup x{row['python'] / row['cython']:.1f}"
        print(f"{label:<48} {cells}{speedup}")


if __name__ == "__main__":
    main()

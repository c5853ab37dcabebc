"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernel.py [--generators 10] [--repeat 5]

Times raw ``mul_terms`` on dense random elements, then a law suite end to
end under each backend (the suite runs in a subprocess so the backend is
chosen at import).
"""

import argparse
import os
import random
import subprocess
import sys
import timeit
from fractions import Fraction

from superheap import _pykernel

try:
    from superheap import _ckernel
except ImportError:
    _ckernel = None

SUITE = "closed-form:mult-heap,para-assoc:heapify:mult-group,naturality:trans-group"


def dense_terms(m, n, rng):
    pool = [Fraction(1), Fraction(-2), Fraction(1, 3), Fraction(5, 2)]
    return {rng.randrange(1 << m): rng.choice(pool) for _ in range(n)}


def bench_mul(m, repeat):
    rng = random.Random(0)
    pairs = [(dense_terms(m, 24, rng), dense_terms(m, 24, rng)) for _ in range(50)]
    rows = []
    for name, impl in (("python", _pykernel), ("cython", _ckernel)):
        if impl is None:
            rows.append((name, None))
            continue
        t = min(timeit.repeat(lambda: [impl.mul_terms(a, b) for a, b in pairs], number=1, repeat=repeat))
        rows.append((name, t))
    return rows


def bench_suite(pure, repeat):
    env = dict(os.environ)
    if pure:
        env["SUPERHEAP_PURE_PYTHON"] = "1"
    code = (
        "import time; from superheap.harness import run_suite, SampleConfig;"
        f"t=time.perf_counter(); run_suite({SUITE!r}, SampleConfig()); print(time.perf_counter()-t)"
    )
    times = []
    for _ in range(repeat):
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        times.append(float(out.stdout))
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--generators", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    print(f"mul_terms, 50 products of 24-term elements, m={args.generators}")
    rows = bench_mul(args.generators, args.repeat)
    base = rows[0][1]
    for name, t in rows:
        if t is None:
            print(f"  {name:7s} not built")
        else:
            print(f"  {name:7s} {t * 1e3:8.2f} ms   x{base / t:.2f}")

    print(f"law suite {SUITE} (m=0..4, 200 trials)")
    py = bench_suite(True, max(1, args.repeat // 2))
    print(f"  python  {py:8.2f} s")
    if _ckernel is not None:
        cy = bench_suite(False, max(1, args.repeat // 2))
        print(f"  cython  {cy:8.2f} s   x{py / cy:.2f}")


if __name__ == "__main__":
    main()

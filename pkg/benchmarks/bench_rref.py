"""Compare the compiled and pure numpy row-reduction kernels.

    python3 benchmarks/bench_rref.py [--sizes 8 32 128] [--primes 2 101] [--workload]

Kernel timings are per call on random square matrices; both kernels must
produce identical output. ``--workload`` also times a full verification
run in a subprocess under each backend.
"""

import argparse
import os
import subprocess
import sys
import time
import timeit

import numpy as np

from gfhom.linalg import _kernels_py

try:
    from gfhom.linalg import _kernels_cy
except ImportError:
    _kernels_cy = None


def per_call(fn, a, p, repeat):
    def run():
        fn(a.copy(), p)

    n, _ = timeit.Timer(run).autorange()
    return min(timeit.repeat(run, number=n, repeat=repeat)) / n


def kernel_table(sizes, primes, repeat, seed):
    rng = np.random.default_rng(seed)
    rows = []
    for p in primes:
        for n in sizes:
            a = np.ascontiguousarray(rng.integers(0, p, (n, n)), dtype=np.int64)
            py = a.copy()
            piv_py = _kernels_py.rref_inplace(py, p)
            t_py = per_call(_kernels_py.rref_inplace, a, p, repeat)
            if _kernels_cy is None:
                rows.append((p, n, t_py, None))
                continue
            cy = a.copy()
            piv_cy = _kernels_cy.rref_inplace(cy, p)
            if list(piv_cy) != list(piv_py) or not np.array_equal(cy, py):
                raise SystemExit(f"kernels disagree on a {n}x{n} matrix over GF({p})")
            rows.append((p, n, t_py, per_call(_kernels_cy.rref_inplace, a, p, repeat)))
    return rows


def workload(args):
    cmd = [sys.executable, "-m", "gfhom.cli", "verify", "all", "--algebra", "a3_rad2.alg"]
    out = {}
    for label, pure in (("compiled", False), ("python", True)):
        env = dict(os.environ)
        env.pop("GFHOM_PURE_PYTHON", None)
        if pure:
            env["GFHOM_PURE_PYTHON"] = "1"
        t0 = time.perf_counter()
        subprocess.run(cmd, env=env, check=True, capture_output=True)
        out[label] = time.perf_counter() - t0
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 32, 64, 128, 256])
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 101])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workload", action="store_true")
    args = ap.parse_args(argv)
    if _kernels_cy is None:
        print("compiled kernel not built; timing the fallback only")
    print(f"{'p':>5} {'n':>5} {'python (us)':>13} {'compiled (us)':>14} {'speedup':>8}")
    for p, n, t_py, t_cy in kernel_table(args.sizes, args.primes, args.repeat, args.seed):
        cy = f"{t_cy * 1e6:14.1f}" if t_cy else f"{'-':>14}"
        sp = f"{t_py / t_cy:8.1f}" if t_cy else f"{'-':>8}"
        print(f"{p:5d} {n:5d} {t_py * 1e6:13.1f} {cy} {sp}")
    if args.workload:
        w = workload(args)
        print(f"verify all on a3_rad2: compiled {w['compiled']:.2f}s, python {w['python']:.2f}s")


if __name__ == "__main__":
    main()

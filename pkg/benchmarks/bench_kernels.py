"""Compare the compiled and pure-Python elimination kernels.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Each workload is timed under both backends and the results are checked
to agree.
"""

import argparse
import random
import time

from polyloop import kernels
from polyloop.cobar import tk_complex
from polyloop.homology import integer_homology
from polyloop.linalg import rank
from polyloop.simplicial import octahedron_boundary, polygon, simplex_skeleton


def random_columns(n, per_column=4, seed=1):
    rng = random.Random(seed)
    return [{i: rng.choice([-2, -1, 1, 2, 3]) for i in rng.sample(range(n), per_column)} for _ in range(n)]


def boundary_ranks(K, I, p):
    cx = tk_complex(K, I)
    return [rank(cols, p) for cols in cx.boundary.values()]


def workloads():
    sparse_small, sparse_large = random_columns(300), random_columns(800)
    yield "rank over Q, random sparse 300x300", lambda: rank(sparse_small, 0)
    yield "rank over F7, random sparse 800x800", lambda: rank(sparse_large, 7)
    yield "T_K ranks F3, pentagon (2,2,2,1,1)", lambda: boundary_ranks(polygon(5), (2, 2, 2, 1, 1), 3)
    yield "T_K ranks Q, skel1(5) (2,2,1,1,1)", lambda: boundary_ranks(simplex_skeleton(5, 1), (2, 2, 1, 1, 1), 0)
    yield "Z homology octahedron (1,1,1,1,1,0)", lambda: integer_homology(tk_complex(octahedron_boundary(), (1, 1, 1, 1, 1, 0)))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    try:
        kernels.use("cython")
    except ImportError:
        print("compiled kernels are not built; only the Python backend is available")
        return 1
    print(f"{'workload':40s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, fn in workloads():
        times, results = {}, {}
        for backend in ("python", "cython"):
            kernels.use(backend)
            best = float("inf")
            for _ in range(args.repeat):
                t = time.perf_counter()
                results[backend] = fn()
                best = min(best, time.perf_counter() - t)
            times[backend] = best
        assert results["python"] == results["cython"], name
        print(f"{name:40s} {times['python']:10.3f} {times['cython']:10.3f} {times['python'] / times['cython']:8.2f}")
    kernels.use("cython")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

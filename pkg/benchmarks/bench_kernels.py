"""Compare the compiled and pure-Python homology kernels on oracle workloads.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--graphs H md23 md32]
"""

import argparse
import time

from bei import kernels
from bei.constructions import build_named, complete, minimal_dense_cw
from bei.oracle import hochster_depth_dim

WORKLOADS = {
    "P5": lambda: build_named("P5"),
    "H": lambda: build_named("H"),
    "K5": lambda: complete(5),
    "md23": lambda: minimal_dense_cw(2, 3),
    "md32": lambda: minimal_dense_cw(3, 2),
}


def best_time(g, backend, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = hochster_depth_dim(g, backend=backend)
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--graphs", nargs="+", default=list(WORKLOADS), choices=list(WORKLOADS))
    args = parser.parse_args(argv)

    if kernels.BACKEND != "cython":
        print("compiled kernels unavailable; only the fallback can be timed")
    print(f"{'graph':6} {'n':>3} {'sigmas':>7} {'compiled s':>11} {'python s':>10} {'speedup':>8}")
    for name in args.graphs:
        g = WORKLOADS[name]()
        py_t, py_r = best_time(g, "python", args.repeat)
        if kernels.BACKEND == "cython":
            c_t, c_r = best_time(g, "cython", args.repeat)
            assert (c_r.depth, c_r.dim) == (py_r.depth, py_r.dim), name
            print(f"{name:6} {g.n:3d} {py_r.sigmas_examined:7d} {c_t:11.4f} {py_t:10.4f} "
                  f"{py_t / c_t:7.1f}x")
        else:
            print(f"{name:6} {g.n:3d} {py_r.sigmas_examined:7d} {'-':>11} {py_t:10.4f} {'-':>8}")


if __name__ == "__main__":
    main()

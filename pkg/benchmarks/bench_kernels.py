"""Time the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Each workload runs once per backend before timing so JIT compilation is excluded.
"""
import argparse
import time

from ehrhart_hecke import kernels
from ehrhart_hecke.hecke import similitude_lattices
from ehrhart_hecke.lattice import hnf_block, smith_exponents_batch, superlattices_p_index
from ehrhart_hecke.polytope import count_points_many, cross_polytope, cube

CUBE4 = cube(4)
CROSS3 = cross_polytope(3)
MATS = hnf_block(4, 3, (2, 2, 1, 1), -1, "numpy")
SUPER = list(superlattices_p_index(3, 2, 2))[:20]

WORKLOADS = {
    "enum_hnf n=4 p=3": lambda b: hnf_block(4, 3, (2, 2, 1, 1), -1, b),
    f"smith_exponents {len(MATS)} mats": lambda b: smith_exponents_batch(MATS, 3, 6, b),
    "symplectic_mask n=2 p=3": lambda b: similitude_lattices(2, 3, 1, None, b),
    "count_points 4-cube t<=6": lambda b: count_points_many(CUBE4, range(7), None, b),
    "count_points cross3 x20 lattices": lambda b: [count_points_many(CROSS3, range(5), L, b) for L in SUPER],
}


def best_of(fn, backend, repeat):
    fn(backend)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(backend)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = [b for b in ("numba", "numpy") if b in kernels.available_backends()]
    print(f"{'workload':36s}" + "".join(f"{b:>12s}" for b in backends) + "     speedup")
    for name, fn in WORKLOADS.items():
        times = {b: best_of(fn, b, args.repeat) for b in backends}
        row = f"{name:36s}" + "".join(f"{times[b] * 1e3:10.2f}ms" for b in backends)
        if len(times) == 2:
            row += f"  {times['numpy'] / times['numba']:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()

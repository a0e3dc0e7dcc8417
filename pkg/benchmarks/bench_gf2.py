"""Compare the compiled and pure-Python GF(2) rank kernels.

Usage::

    python benchmarks/bench_gf2.py [--sizes 100,300,600] [--density 0.05]

Generates random sparse square matrices, times both kernels on the same
inputs, and checks that they agree.
"""

from __future__ import annotations

import argparse
import random
import time

from orbfloer import BACKEND, Gf2Matrix
from orbfloer.gf2 import _rank_pure


def random_matrix(rng: random.Random, n: int, density: float) -> Gf2Matrix:
    entries = {
        (i, j)
        for i in range(n)
        for j in range(n)
        if rng.random() < density
    }
    return Gf2Matrix.from_entries(n, n, entries)


def time_kernel(fn, matrices) -> tuple[float, list[int]]:
    t0 = time.perf_counter()
    ranks = [fn(m) for m in matrices]
    return time.perf_counter() - t0, ranks


def run(sizes: list[int], density: float, repeats: int) -> None:
    rng = random.Random(2024)
    print(f"selected backend: {BACKEND}")
    if BACKEND != "compiled":
        print("compiled kernel unavailable; timing the pure kernel only")
    header = f"{'n':>6} {'pure (s)':>10}"
    if BACKEND == "compiled":
        header += f" {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    for n in sizes:
        matrices = [random_matrix(rng, n, density) for _ in range(repeats)]
        pure_t, pure_r = time_kernel(_rank_pure, matrices)
        line = f"{n:>6} {pure_t:>10.4f}"
        if BACKEND == "compiled":
            from orbfloer.gf2 import _rank_compiled

            comp_t, comp_r = time_kernel(_rank_compiled, matrices)
            assert comp_r == pure_r, "kernels disagree"
            line += f" {comp_t:>13.4f} {pure_t / comp_t:>7.1f}x"
        print(line)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="100,300,600",
                    help="comma-separated matrix sizes")
    ap.add_argument("--density", type=float, default=0.05)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    run([int(s) for s in args.sizes.split(",")], args.density, args.repeats)


if __name__ == "__main__":
    main()

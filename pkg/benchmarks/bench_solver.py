"""Compare the compiled and pure-Python solver kernels on identical inputs.

Usage: python benchmarks/bench_solver.py [--repeat N]

Each case is solved with both kernels; tables must agree bit for bit, and
the best-of-N wall times are reported with the speedup.
"""

from __future__ import annotations

import argparse
import time

from copgame import Graph, kernel_backend, random_2k2free, solve
from copgame.graphs import write_graph6


def _cases() -> list[tuple[str, Graph, int]]:
    petersen = Graph(10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                          (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                          (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)])
    cases = [
        ("cycle C20, k=2", Graph(20, [(i, (i + 1) % 20) for i in range(20)]), 2),
        ("Petersen, k=3", petersen, 3),
        ("random 2K2-free n=18, k=2", random_2k2free(18, "bench:a"), 2),
        ("random 2K2-free n=24, k=2", random_2k2free(24, "bench:b"), 2),
        ("grid 5x5, k=2", _grid(5, 5), 2),
        ("random 2K2-free n=14, k=3", random_2k2free(14, "bench:c"), 3),
    ]
    return cases


def _grid(rows: int, cols: int) -> Graph:
    def idx(r, c):
        return r * cols + c

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((idx(r, c), idx(r, c + 1)))
            if r + 1 < rows:
                edges.append((idx(r, c), idx(r + 1, c)))
    return Graph(rows * cols, edges)


def _best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if kernel_backend() != "cy":
        print("note: compiled kernel not built; nothing to compare")

    print(f"{'case':36} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, g, k in _cases():
        res_py = solve(g, k, backend="py")
        if kernel_backend() != "cy":
            t_py = _best_of(lambda: solve(g, k, backend="py"), args.repeat)
            print(f"{name:36} {t_py * 1e3:9.1f}ms {'-':>10} {'-':>8}")
            continue
        res_cy = solve(g, k, backend="cy")
        assert list(res_py._table) == list(res_cy._table), (
            f"kernel mismatch on {name} ({write_graph6(g)})")
        t_py = _best_of(lambda: solve(g, k, backend="py"), args.repeat)
        t_cy = _best_of(lambda: solve(g, k, backend="cy"), args.repeat)
        print(f"{name:36} {t_py * 1e3:9.1f}ms {t_cy * 1e3:9.1f}ms "
              f"{t_py / t_cy:7.1f}x")
    print("tables identical across kernels for every case")


if __name__ == "__main__":
    main()

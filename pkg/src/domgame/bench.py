"""Benchmark the numba search kernel against the pure-Python twin.

Run as ``python -m domgame.bench [--sizes 9,11,13]``.  Solves fresh games
on cycles and random trees with both kernels and reports wall times and
node counts; values must agree exactly.
"""

from __future__ import annotations

import argparse
import time

from .engine import ACTIVE_KERNEL, Engine
from .graph import cycle_graph
from .instances import generate_random_tree
from .position import PointedPosition


def time_solve(graph, kernel: str) -> tuple[float, str, int]:
    engine = Engine(graph, kernel=kernel)
    pp = PointedPosition.fresh(graph)
    t0 = time.perf_counter()
    value = engine.solve(pp)
    dt = time.perf_counter() - t0
    return dt, value.name, engine.stats.nodes_expanded


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="9,11,13", help="comma-separated board sizes")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args(argv)
    sizes = [int(s) for s in args.sizes.split(",")]

    kernels = ["python"]
    if ACTIVE_KERNEL == "numba":
        kernels.append("numba")
        time_solve(cycle_graph(4), "numba")  # JIT warmup outside the timings

    print(f"{'instance':<16}" + "".join(f"{k:>12}" for k in kernels) + f"{'speedup':>10}  value")
    for n in sizes:
        for name, graph in ((f"C_{n}", cycle_graph(n)), (f"tree_{n}", generate_random_tree(n, args.seed))):
            times = {}
            values = set()
            for k in kernels:
                dt, value, _nodes = time_solve(graph, k)
                times[k] = dt
                values.add(value)
            assert len(values) == 1, f"kernel disagreement on {name}: {values}"
            speedup = times["python"] / times["numba"] if "numba" in times else float("nan")
            row = f"{name:<16}" + "".join(f"{times[k]*1000:>10.1f}ms" for k in kernels)
            print(row + f"{speedup:>9.1f}x  {values.pop()}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Forest-solver vs oracle cross-checking harness.

Enumerates every labeled tree up to 7 vertices (one graph per Pruefer
sequence) and samples seeded random trees and forests above that, then
compares `forest_outcome` with the exact engine on each instance.
Instances fan out to a process pool; the report rows keep submission
order regardless of worker count.
"""

from __future__ import annotations

import hashlib
import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .engine import Engine
from .forest import forest_outcome
from .graph import Graph
from .instances import InstanceFile, forest_from_rng, prufer_decode, serialize_instance, tree_from_rng
from .position import PointedPosition


class CrosscheckRow(NamedTuple):
    index: int
    n: int
    digest: str
    solver: str
    oracle: str
    agree: bool


@dataclass
class CrosscheckReport:
    seed: Optional[int]
    rows: list[CrosscheckRow]

    @property
    def instance_count(self) -> int:
        return len(self.rows)

    @property
    def agreements(self) -> int:
        return sum(1 for r in self.rows if r.agree)

    @property
    def disagreements(self) -> int:
        return sum(1 for r in self.rows if not r.agree)

    @property
    def all_agree(self) -> bool:
        return self.disagreements == 0


def instance_digest(g: Graph) -> str:
    text = serialize_instance(InstanceFile(graph=g))
    return hashlib.sha256(text.encode()).hexdigest()[:12]


def all_labeled_trees(n: int) -> Iterable[list[tuple[int, int]]]:
    if n == 1:
        yield []
    elif n == 2:
        yield [(0, 1)]
    else:
        for seq in itertools.product(range(n), repeat=n - 2):
            yield prufer_decode(list(seq), n)


def _check_one(args: tuple[int, int, list[tuple[int, int]]]) -> CrosscheckRow:
    index, n, edges = args
    g = Graph.from_edges(n, edges)
    solver = forest_outcome(g)
    oracle = Engine(g).outcome(PointedPosition.fresh(g))
    return CrosscheckRow(
        index, n, instance_digest(g), solver.value, oracle.value, solver == oracle
    )


def crosscheck_instances(
    max_n: int, samples: int, seed: Optional[int], forests: Optional[int] = None
) -> list[tuple[int, int, list[tuple[int, int]]]]:
    """Deterministic instance list: exhaustive trees to n=7, then samples."""
    out: list[tuple[int, int, list[tuple[int, int]]]] = []
    idx = 0
    for n in range(1, min(7, max_n) + 1):
        for edges in all_labeled_trees(n):
            out.append((idx, n, edges))
            idx += 1
    if max_n >= 8:
        rng = random.Random(seed)
        for n in range(8, max_n + 1):
            for _ in range(samples):
                g = tree_from_rng(n, rng)
                out.append((idx, n, g.edges()))
                idx += 1
        n_forests = samples // 2 if forests is None else forests
        for _ in range(n_forests):
            total = rng.randint(4, max_n)
            comps = rng.randint(2, 3)
            if total < comps:
                comps = total
            g = forest_from_rng(total, comps, rng)
            out.append((idx, total, g.edges()))
            idx += 1
    return out


def run_crosscheck(
    max_n: int,
    samples: int,
    seed: Optional[int],
    forests: Optional[int] = None,
    jobs: Optional[int] = None,
) -> CrosscheckReport:
    instances = crosscheck_instances(max_n, samples, seed, forests)
    jobs = jobs if jobs is not None else min(4, os.cpu_count() or 1)
    if jobs <= 1:
        rows = [_check_one(item) for item in instances]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_check_one, instances, chunksize=64))
    return CrosscheckReport(seed=seed, rows=rows)

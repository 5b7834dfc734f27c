"""Shared fixtures: the figure instances and random-position helpers."""

from __future__ import annotations

import random

import pytest

from domgame.graph import Graph
from domgame.position import Player, PointedPosition, Position


@pytest.fixture(scope="session")
def two_center_spider() -> Graph:
    """Two adjacent centers, each carrying two length-2 legs (10 vertices).

    Bob draws on it, but removing any (leaf, support) pair flips it to an
    Alice win.
    """
    return Graph.from_edges(
        10,
        [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (1, 6), (6, 7), (1, 8), (8, 9)],
    )


@pytest.fixture(scope="session")
def pendant_path_tree() -> Graph:
    """Path v_{-1}..v_10 with a pendant support+leaf at v_4 (14 vertices).

    Ids: v_{-1}=0, v_0=1, ..., v_10=11, pendant support=12, pendant leaf=13.
    The skeleton is the 8-path v_1..v_8; the game is a draw.
    """
    edges = [(i, i + 1) for i in range(11)] + [(5, 12), (12, 13)]
    return Graph.from_edges(14, edges)


@pytest.fixture(scope="session")
def fork_and_p2_forest() -> Graph:
    """Connected tree whose skeleton splits into a P_2 and a 4-branch fork.

    23 vertices; the unique connecting support is vertex 6; outcome A.
    """
    edges = [
        (6, 5), (6, 7), (5, 4), (3, 2), (3, 4), (1, 0), (1, 4),
        (6, 8), (8, 9), (9, 10),
        (10, 11), (11, 12), (12, 13), (13, 14),
        (10, 15), (15, 16), (16, 17), (17, 18),
        (10, 19), (19, 20), (20, 21), (21, 22),
    ]
    return Graph.from_edges(23, edges)


@pytest.fixture(scope="session")
def labeling_example_tree() -> Graph:
    """The 13-vertex labeling illustration: root 0, depth-1 children 1,2,3."""
    edges = [
        (0, 1), (0, 2), (0, 3),
        (1, 4), (1, 5),
        (2, 6), (2, 7), (2, 8),
        (4, 9), (9, 10), (10, 11), (10, 12),
    ]
    return Graph.from_edges(13, edges)


@pytest.fixture(scope="session")
def parity_pendant_tree() -> Graph:
    """Tree realizing the bounded path [Ao^4B] with pendants at indices 2 and 3.

    Every support fails the unique-child labeling condition, yet Alice wins;
    pins the candidate rule to favorability instead of the labeling filter.
    """
    edges = [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7),
        (3, 8), (8, 9), (4, 10), (10, 11),
    ]
    return Graph.from_edges(12, edges)


def random_graph_position(rng: random.Random, max_n: int = 7, edge_p: float = 0.35,
                          claim_p: float = 0.25) -> Position:
    n = rng.randint(1, max_n)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_p]
    g = Graph.from_edges(n, edges)
    alice, bob = [], []
    for v in range(n):
        r = rng.random()
        if r < claim_p:
            alice.append(v)
        elif r < 2 * claim_p:
            bob.append(v)
    return Position.from_sets(g, alice, bob)


def random_pointed(rng: random.Random, **kwargs) -> PointedPosition:
    return PointedPosition(random_graph_position(rng, **kwargs), rng.choice([Player.A, Player.B]))

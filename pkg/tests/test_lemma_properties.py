"""Oracle-verified properties of the bounded-path lemmas, traps, unions,
splits, and leaf exchanges.  Each suite runs on at least 100 seeded
instances; the oracle is the plain engine with every pruning off.
"""

import random

import pytest

from domgame.engine import EngineConfig, solve
from domgame.graph import Graph
from domgame.position import (
    BoundedPathSpec,
    Claim,
    GameValue,
    IllegalStateError,
    Outcome,
    Player,
    PointedPosition,
    Position,
    TrapKind,
    build_bounded_path,
    dominates,
    find_traps,
    game_status,
    union_positions,
)

from conftest import random_graph_position, random_pointed


def checked_outcome(p: Position, turn: Player) -> Outcome:
    return solve(PointedPosition(p, turn)).outcome


def valid_position(p: Position) -> bool:
    return not (dominates(p, Player.A) and dominates(p, Player.B))


def sample_positions(seed: int, count: int, **kwargs):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        p = random_graph_position(rng, **kwargs)
        if valid_position(p):
            out.append((p, rng))
    return out


class TestLemmaABNeutrality:
    def test_adjoining_ao_n_b_never_changes_outcome(self):
        rng = random.Random(101)
        checked = 0
        while checked < 110:
            p = random_graph_position(rng, max_n=7)
            if not valid_position(p):
                continue
            n = rng.randint(1, 5)
            tail = build_bounded_path(BoundedPathSpec(Player.A, n, Player.B))
            combined, _ = union_positions([p, tail])
            assert checked_outcome(combined, Player.B) == checked_outcome(p, Player.B)
            checked += 1


class TestLemmaBBOdd:
    def test_odd_bob_bounded_path_forces_draw(self):
        rng = random.Random(102)
        checked = 0
        while checked < 110:
            p = random_graph_position(rng, max_n=6)
            if not valid_position(p):
                continue
            n = rng.choice([1, 3, 5])
            tail = build_bounded_path(BoundedPathSpec(Player.B, n, Player.B))
            combined, _ = union_positions([p, tail])
            assert checked_outcome(combined, Player.B) is Outcome.D
            checked += 1


class TestLemmaAA:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_multiples_of_three_draw_for_bob_start(self, k):
        pos = build_bounded_path(BoundedPathSpec(Player.A, 3 * k, Player.A))
        assert checked_outcome(pos, Player.B) is Outcome.D

    @pytest.mark.parametrize("n", [1, 2, 4, 5, 7, 8])
    def test_other_lengths_stay_alice_wins(self, n):
        pos = build_bounded_path(BoundedPathSpec(Player.A, n, Player.A))
        assert checked_outcome(pos, Player.B) is Outcome.A


class TestLemmaAABB:
    def test_win_preserved_under_aa_and_even_bb(self):
        rng = random.Random(103)
        checked = 0
        while checked < 110:
            p = random_graph_position(rng, max_n=5)
            if not valid_position(p):
                continue
            if checked_outcome(p, Player.B) is not Outcome.A:
                continue
            n = rng.choice([1, 2, 4, 5])
            n_prime = rng.choice([0, 2, 4])
            parts = [p, build_bounded_path(BoundedPathSpec(Player.A, n, Player.A))]
            if n_prime:
                parts.append(build_bounded_path(BoundedPathSpec(Player.B, n_prime, Player.B)))
            combined, _ = union_positions(parts)
            assert checked_outcome(combined, Player.B) is Outcome.A, (p.graph.edges(), n, n_prime)
            checked += 1


class TestObservationBetterStarts:
    def test_moving_first_is_never_worse_collapsed(self):
        rng = random.Random(104)
        checked = 0
        while checked < 150:
            p = random_graph_position(rng, max_n=8)
            if not valid_position(p):
                continue
            first = checked_outcome(p, Player.A)
            second = checked_outcome(p, Player.B)
            assert first >= second
            checked += 1


class TestCorollaryTwoTraps:
    def test_two_a_traps_cap_both_outcomes_at_draw(self):
        rng = random.Random(105)
        checked = 0
        while checked < 110:
            p = random_graph_position(rng, max_n=8, claim_p=0.3)
            if not valid_position(p):
                continue
            traps = find_traps(p, TrapKind.A_TRAP)
            if len(traps) < 2:
                continue
            assert checked_outcome(p, Player.A) is Outcome.D
            assert checked_outcome(p, Player.B) is Outcome.D
            checked += 1


class TestLemmaTail:
    def test_leaf_support_exchange_preserves_bob_outcome(self):
        rng = random.Random(106)
        checked = 0
        while checked < 110:
            p = random_graph_position(rng, max_n=7)
            if not valid_position(p):
                continue
            g = p.graph
            pairs = [
                (leaf, g.adjacency[leaf][0])
                for leaf in range(g.vertex_count)
                if g.degree(leaf) == 1
                and p.claims[leaf] is Claim.UNCLAIMED
                and p.claims[g.adjacency[leaf][0]] is Claim.UNCLAIMED
            ]
            if not pairs:
                continue
            leaf, support = pairs[rng.randrange(len(pairs))]
            claims = list(p.claims)
            claims[leaf] = Claim.ALICE
            claims[support] = Claim.BOB
            exchanged = Position(g, tuple(claims))
            checked += 1
            if not valid_position(exchanged):
                # footnote case: the exchange would end the game at once
                assert checked_outcome(p, Player.B) is Outcome.D
                continue
            assert checked_outcome(exchanged, Player.B) == checked_outcome(p, Player.B)


class TestObservationUnion:
    def test_union_of_second_player_wins_is_a_win(self):
        rng = random.Random(107)
        checked = 0
        wins: list[Position] = []
        while checked < 110:
            p = random_graph_position(rng, max_n=7)
            if not valid_position(p):
                continue
            if checked_outcome(p, Player.B) is not Outcome.A:
                continue
            wins.append(p)
            if len(wins) < 2:
                continue
            q = wins[rng.randrange(len(wins) - 1)]
            combined, _ = union_positions([p, q])
            assert checked_outcome(combined, Player.B) is Outcome.A
            checked += 1


class TestLemmaSplit:
    def test_split_equivalence_hundred_instances(self):
        from domgame.position import split_on_cutset

        rng = random.Random(108)
        checked = 0
        while checked < 100:
            left = random_graph_position(rng, max_n=4)
            right = random_graph_position(rng, max_n=4)
            nl, nr = left.graph.vertex_count, right.graph.vertex_count
            edges = left.graph.edges()
            edges += [(rng.randrange(nl), nl), (nl, nl + 1), (nl + 1, nl + 2 + rng.randrange(nr))]
            edges += [(u + nl + 2, v + nl + 2) for u, v in right.graph.edges()]
            g = Graph.from_edges(nl + nr + 2, edges)
            alice = [v for v in range(nl) if left.claims[v] is Claim.ALICE] + [nl]
            alice += [v + nl + 2 for v in range(nr) if right.claims[v] is Claim.ALICE]
            bob = [v for v in range(nl) if left.claims[v] is Claim.BOB] + [nl + 1]
            bob += [v + nl + 2 for v in range(nr) if right.claims[v] is Claim.BOB]
            p = Position.from_sets(g, alice, bob)
            if not valid_position(p):
                continue
            p1, p2 = split_on_cutset(p, list(range(nl)), list(range(nl + 2, nl + 2 + nr)), [nl, nl + 1])
            combined, _ = union_positions([p1, p2])
            checked += 1
            for turn in (Player.A, Player.B):
                assert checked_outcome(p, turn) == checked_outcome(combined, turn)


class TestPrunedEnginesMatchPlain:
    def test_collapsed_equivalence_and_exact_dominated_pruning(self):
        rng = random.Random(109)
        checked = 0
        while checked < 120:
            pp = random_pointed(rng, max_n=8)
            try:
                plain = solve(pp)
            except IllegalStateError:
                continue
            checked += 1
            assert solve(pp, EngineConfig(prune_dominated_moves=True)) == plain
            assert solve(pp, EngineConfig(prune_forced_traps=True)).outcome == plain.outcome
            assert solve(pp, EngineConfig(cutoff_double_trap=True)).outcome == plain.outcome
            assert solve(pp, EngineConfig(True, True, True)).outcome == plain.outcome

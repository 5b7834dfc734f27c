import pytest

from domgame.closed_form import (
    LemmaContext,
    bounded_path_lemma_prediction,
    cycle_outcome,
    path_outcome,
)
from domgame.engine import outcome
from domgame.graph import cycle_graph, path_graph
from domgame.position import BoundedPathSpec, Outcome, Player, PointedPosition


class TestPathTheorem:
    @pytest.mark.parametrize("n", [1, 9, 10**6])
    def test_alice_wins_every_path(self, n):
        ans = path_outcome(n)
        assert ans.outcome is Outcome.A and ans.rule == "path-theorem"

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            path_outcome(0)

    @pytest.mark.parametrize("n", range(1, 14))
    def test_oracle_agrees(self, n):
        assert outcome(PointedPosition.fresh(path_graph(n))) is path_outcome(n).outcome


class TestCycleTheorem:
    def test_examples(self):
        assert cycle_outcome(10).outcome is Outcome.D
        assert cycle_outcome(7).outcome is Outcome.A
        assert cycle_outcome(12).outcome is Outcome.A
        assert cycle_outcome(13).outcome is Outcome.D

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            cycle_outcome(2)

    def test_draw_set_to_30(self):
        draws = [n for n in range(3, 31) if cycle_outcome(n).outcome is Outcome.D]
        assert draws == [10, 13, 16, 19, 22, 25, 28]

    @pytest.mark.parametrize("n", range(3, 14))
    def test_oracle_agrees(self, n):
        assert outcome(PointedPosition.fresh(cycle_graph(n))) is cycle_outcome(n).outcome


class TestLemmaPredictions:
    def test_bb_odd_forced_draw(self):
        pred = bounded_path_lemma_prediction(
            BoundedPathSpec(Player.B, 5, Player.B), LemmaContext.ADJOINED_TO_ANY_P
        )
        assert pred is not None and pred.outcome is Outcome.D and not pred.neutral

    def test_aa_multiple_of_three_standalone(self):
        pred = bounded_path_lemma_prediction(
            BoundedPathSpec(Player.A, 6, Player.A), LemmaContext.STANDALONE
        )
        assert pred is not None and pred.outcome is Outcome.D

    def test_ab_neutral(self):
        pred = bounded_path_lemma_prediction(
            BoundedPathSpec(Player.A, 4, Player.B), LemmaContext.ADJOINED_TO_ANY_P
        )
        assert pred is not None and pred.neutral and pred.outcome is None

    def test_no_claim_cases(self):
        assert bounded_path_lemma_prediction(
            BoundedPathSpec(Player.B, 4, Player.B), LemmaContext.ADJOINED_TO_ANY_P
        ) is None
        assert bounded_path_lemma_prediction(
            BoundedPathSpec(Player.A, 5, Player.A), LemmaContext.STANDALONE
        ) is None

    def test_rejects_pendants(self):
        with pytest.raises(ValueError):
            bounded_path_lemma_prediction(
                BoundedPathSpec(Player.A, 4, Player.B, frozenset({2})),
                LemmaContext.ADJOINED_TO_ANY_P,
            )

"""Constant-time outcome formulas for paths and cycles, plus the
bounded-path lemma predictions used by the test harness.

The lemma predictions are deliberately not part of the solve pipeline:
they encode what the bounded-path lemmas force (or leave neutral) so the
property suites can check the oracle against them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .position import BoundedPathSpec, Outcome, Player


@dataclass(frozen=True)
class ClosedFormAnswer:
    outcome: Outcome
    rule: str


def path_outcome(n: int) -> ClosedFormAnswer:
    """Alice wins on every path."""
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return ClosedFormAnswer(Outcome.A, "path-theorem")


def cycle_outcome(n: int) -> ClosedFormAnswer:
    """Draw exactly when n >= 10 and n = 1 (mod 3); Alice wins otherwise."""
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    outcome = Outcome.D if (n >= 10 and n % 3 == 1) else Outcome.A
    return ClosedFormAnswer(outcome, "cycle-theorem")


class LemmaContext(enum.Enum):
    ADJOINED_TO_ANY_P = "adjoined"
    STANDALONE = "standalone"


@dataclass(frozen=True)
class LemmaPrediction:
    """Outcome forced by a bounded-path lemma, or an explicit neutrality flag.

    `neutral` means the component provably does not change the outcome of
    whatever it is adjoined to (so no outcome is implied by the component
    alone).
    """

    outcome: Optional[Outcome]
    neutral: bool
    rule: str


def bounded_path_lemma_prediction(
    spec: BoundedPathSpec, context: LemmaContext
) -> Optional[LemmaPrediction]:
    if spec.pendants:
        raise ValueError("lemma predictions apply to plain bounded paths only")
    ends = (spec.left, spec.right)
    if context is LemmaContext.ADJOINED_TO_ANY_P:
        if Player.A in ends and Player.B in ends:
            return LemmaPrediction(None, True, "AB-neutral")
        if ends == (Player.B, Player.B) and spec.n % 2 == 1:
            return LemmaPrediction(Outcome.D, False, "BB-odd-draw")
    else:
        if ends == (Player.A, Player.A) and spec.n % 3 == 0:
            return LemmaPrediction(Outcome.D, False, "AA-multiple-of-3-draw")
    return None

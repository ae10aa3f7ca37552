"""Team blackboard: a shared store of ground facts.

Each team has one board.  Facts keep assertion order, which makes
enumeration deterministic, and the board is wiped at round start.
"""

from __future__ import annotations

from rulebots.logic import Term, unify_terms


class TeamBlackboard:
    def __init__(self):
        self._facts: list[Term] = []

    def clear(self) -> None:
        self._facts.clear()

    def assert_fact(self, fact: Term) -> None:
        self._facts.append(fact)

    def retract_match(self, pattern: Term) -> Term | None:
        """Remove and return the first fact the pattern unifies with."""
        for i, fact in enumerate(self._facts):
            if unify_terms(pattern, fact) is not None:
                return self._facts.pop(i)
        return None

    def snapshot(self) -> list[Term]:
        return list(self._facts)

    def __len__(self) -> int:
        return len(self._facts)

"""Single-round driver: agent phase then world step until an outcome."""

from __future__ import annotations

from dataclasses import dataclass

from rulebots.sim import RoundOutcome, WorldState


@dataclass(frozen=True)
class RoundResult:
    outcome: RoundOutcome
    events: tuple[tuple[int, int, int, str, str], ...]
    digest: int


def run_round(world: WorldState, minds: dict, boards: dict, round_no: int) -> RoundResult:
    if round_no > 0:
        world.reset_round(round_no)
    for board in boards.values():
        board.clear()
    for bot_id in sorted(minds):
        minds[bot_id].on_round_start()
    # time expiry guarantees termination; the margin only guards against a
    # check_win regression turning this into an endless loop
    limit = world.config.round_ticks + 8
    for _ in range(limit):
        if world.outcome is not None:
            break
        intents = {bot_id: minds[bot_id].tick_agent() for bot_id in sorted(minds)}
        world.step(intents)
    outcome = world.outcome
    if outcome is None:
        raise RuntimeError(f"round did not finish within {limit} ticks")
    return RoundResult(outcome, tuple(world.events), world.state_digest())

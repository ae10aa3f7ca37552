"""Wall-time measurement of reasoning versus simulation cost."""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass, replace

from rulebots.match.config import ControllerSpec, MatchConfig
from rulebots.match.match import build_match
from rulebots.match.round import run_round


@dataclass(frozen=True)
class PerfReport:
    """Per-tick samples plus the aggregates derived from them.

    Reasoning time is wall time spent inside scripted minds; native minds
    and the world step count as simulation, so an all-native run reports a
    reasoning share of exactly zero.
    """

    reasoning_ms: tuple[float, ...]
    simulation_ms: tuple[float, ...]
    native_total_ms: float

    @property
    def total_ms(self) -> float:
        return sum(self.reasoning_ms) + sum(self.simulation_ms)

    @property
    def median_reasoning_ms(self) -> float:
        return statistics.median(self.reasoning_ms)

    @property
    def p95_reasoning_ms(self) -> float:
        ordered = sorted(self.reasoning_ms)
        return ordered[max(0, math.ceil(0.95 * len(ordered)) - 1)]

    @property
    def reasoning_share(self) -> float:
        total = self.total_ms
        return sum(self.reasoning_ms) / total if total else 0.0

    @property
    def native_delta(self) -> float:
        """Fractional wall-time increase over the identical all-native run."""
        if self.native_total_ms == 0:
            return 0.0
        return (self.total_ms - self.native_total_ms) / self.native_total_ms


def _timed_match(config: MatchConfig) -> tuple[list[float], list[float]]:
    world, boards, minds = build_match(config)
    scripted = {bot_id for bot_id, mind in minds.items() if mind.kind == "scripted"}
    reasoning: list[float] = []
    simulation: list[float] = []
    for round_no in range(config.rounds):
        if round_no > 0:
            world.reset_round(round_no)
        for board in boards.values():
            board.clear()
        for bot_id in sorted(minds):
            minds[bot_id].on_round_start()
        limit = world.config.round_ticks + 8
        for _ in range(limit):
            if world.outcome is not None:
                break
            reason = 0.0
            tick_start = time.perf_counter()
            intents = {}
            for bot_id in sorted(minds):
                if bot_id in scripted:
                    t0 = time.perf_counter()
                    intents[bot_id] = minds[bot_id].tick_agent()
                    reason += time.perf_counter() - t0
                else:
                    intents[bot_id] = minds[bot_id].tick_agent()
            world.step(intents)
            elapsed = time.perf_counter() - tick_start
            reasoning.append(reason * 1000.0)
            simulation.append(max(0.0, elapsed - reason) * 1000.0)
        if world.outcome is None:
            raise RuntimeError(f"round did not finish within {limit} ticks")
    return reasoning, simulation


def measure_performance(config: MatchConfig) -> PerfReport:
    reasoning, simulation = _timed_match(config)
    native_config = replace(
        config, ct=ControllerSpec("native"), t=ControllerSpec("native")
    )
    t0 = time.perf_counter()
    world, boards, minds = build_match(native_config)
    for round_no in range(native_config.rounds):
        run_round(world, minds, boards, round_no)
    native_total_ms = (time.perf_counter() - t0) * 1000.0
    return PerfReport(tuple(reasoning), tuple(simulation), native_total_ms)


def summary_text(report: PerfReport) -> str:
    return "\n".join(
        [
            f"ticks measured: {len(report.reasoning_ms)}",
            f"reasoning per tick: median {report.median_reasoning_ms:.3f} ms, "
            f"p95 {report.p95_reasoning_ms:.3f} ms",
            f"reasoning share of wall time: {report.reasoning_share:.3f}",
            f"total wall time: {report.total_ms:.1f} ms "
            f"(all-native reference {report.native_total_ms:.1f} ms, "
            f"delta {report.native_delta:+.3f})",
        ]
    )

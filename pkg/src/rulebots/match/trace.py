"""Event stream rendering: diffable traces and lifecycle diagnostics."""

from __future__ import annotations

from rulebots.sim import WORLD

LIFECYCLE_EVENTS = ("started", "interrupted", "completed", "failed")


def sorted_events(events) -> list[tuple[int, int, int, str, str]]:
    return sorted(events, key=lambda e: (e[0], e[1], e[2]))


def trace_lines(events) -> list[str]:
    """One `tick;bot;event;payload` line per event, in canonical order."""
    out = []
    for tick, bot_key, _seq, etype, payload in sorted_events(events):
        bot = "-" if bot_key == WORLD else str(bot_key)
        out.append(f"{tick};{bot};{etype};{payload}")
    return out


def diag_lines(events) -> list[str]:
    """Action lifecycle log, one machine-parseable line per event."""
    out = []
    for tick, bot_key, _seq, etype, payload in sorted_events(events):
        if etype in LIFECYCLE_EVENTS and bot_key != WORLD:
            out.append(f"tick={tick} bot={bot_key} event={etype} {payload}")
    return out

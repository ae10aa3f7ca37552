"""Reasoning-vs-simulation timing: report shape and invariants."""

from rulebots.match import ControllerSpec, MatchConfig, PerfReport, measure_performance
from rulebots.match.perf import summary_text


def config_for(kind, rounds=1):
    spec = ControllerSpec(kind, ("baseline",) if kind == "scripted" else ())
    return MatchConfig(map_name="warehouse", seed=1, rounds=rounds, ct=spec, t=spec)


def test_scripted_run_reports_positive_share():
    report = measure_performance(config_for("scripted"))
    assert len(report.reasoning_ms) == len(report.simulation_ms) > 0
    assert 0.0 < report.reasoning_share < 1.0
    assert report.median_reasoning_ms > 0.0
    assert report.p95_reasoning_ms >= report.median_reasoning_ms
    assert report.native_total_ms > 0.0


def test_all_native_share_is_exactly_zero():
    # reasoning time is defined as time inside scripted minds
    report = measure_performance(config_for("native"))
    assert report.reasoning_share == 0.0
    assert sum(report.reasoning_ms) == 0.0
    assert report.total_ms > 0.0


def test_aggregates_from_known_samples():
    report = PerfReport(
        reasoning_ms=(1.0, 2.0, 3.0, 4.0),
        simulation_ms=(2.0, 2.0, 2.0, 4.0),
        native_total_ms=10.0,
    )
    assert report.total_ms == 20.0
    assert report.median_reasoning_ms == 2.5
    assert report.p95_reasoning_ms == 4.0
    assert report.reasoning_share == 0.5
    assert report.native_delta == 1.0


def test_summary_text_lines():
    report = measure_performance(config_for("scripted"))
    lines = summary_text(report).splitlines()
    assert lines[0].startswith("ticks measured:")
    assert "reasoning per tick: median" in lines[1]
    assert "reasoning share of wall time:" in lines[2]
    assert "all-native reference" in lines[3]

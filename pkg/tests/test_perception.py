"""World-view predicates: enumeration order, filtering, guard errors."""

import pytest

import support
from rulebots.agents import TeamBlackboard, register_perception
from rulebots.logic import Engine, InstantiationError, KnowledgeBase, TermTypeError, term_str


def percept(world):
    kb = KnowledgeBase()
    board = TeamBlackboard()
    register_perception(kb, world, board)
    return Engine(kb, output=lambda s: None), board


def ids(solutions, *names):
    return [tuple(term_str(s[n]) for n in names) for s in solutions]


def test_visible_enemy_orders_and_filters_teams():
    w = support.line_world(team_size=2)
    support.skip_buy_phase(w)
    eng, _ = percept(w)
    pairs = ids(eng.run("visible_enemy(A, B)"), "A", "B")
    assert pairs == [
        ("0", "2"), ("0", "3"), ("1", "2"), ("1", "3"),
        ("2", "0"), ("2", "1"), ("3", "0"), ("3", "1"),
    ]
    # bot_in_fov adds the zero-distance teammate pairs on top
    fov = ids(eng.run("bot_in_fov(A, B)"), "A", "B")
    assert set(fov) - set(pairs) == {("0", "1"), ("1", "0"), ("2", "3"), ("3", "2")}
    assert fov == sorted(fov)


def test_visible_enemy_respects_facing():
    w = support.line_world()
    support.skip_buy_phase(w)
    eng, _ = percept(w)
    assert eng.run("visible_enemy(0, 1)") == [{}]
    w.bots[0].facing_deg = 180
    w.tick += 1  # invalidate the per-tick fov cache
    eng, _ = percept(w)
    assert eng.run("visible_enemy(0, 1)") == []
    assert eng.run("visible_enemy(1, 0)") == [{}]


def test_dead_bots_disappear_from_views():
    w = support.line_world(team_size=2)
    support.skip_buy_phase(w)
    w.bots[2].alive = False
    eng, _ = percept(w)
    assert ids(eng.run("bot_alive(B)"), "B") == [("0",), ("1",), ("3",)]
    assert eng.run("health(2, _H)") == []
    assert all(s["B"].value != 2 for s in eng.run("visible_enemy(_A, B)"))


def test_per_bot_views_bound_and_unbound():
    w = support.line_world()
    support.skip_buy_phase(w)
    eng, _ = percept(w)
    assert [s["T"].name for s in eng.run("team(B, T)")] == ["ct", "t"]
    assert eng.run("team(1, t)") == [{}]
    assert eng.run("team(1, ct)") == []
    assert [s["H"].value for s in eng.run("health(H0, H)") if s["H0"].value == 0] == [100]
    assert [s["M"].value for s in eng.run("money(0, M)")] == [800]
    assert [s["A"].value for s in eng.run("ammo(1, A)")] == [24]


def test_type_guards_raise():
    w = support.line_world()
    support.skip_buy_phase(w)
    eng, _ = percept(w)
    with pytest.raises(TermTypeError):
        eng.run("health(foo, _H)")
    with pytest.raises(TermTypeError):
        eng.run("team(0, 17)")
    with pytest.raises(TermTypeError):
        eng.run("at_waypoint(0, somewhere)")


def test_at_waypoint_rounds_edge_position():
    w = support.line_world()
    support.skip_buy_phase(w)
    bot = w.bots[0]
    bot.edge, bot.progress_cm = (0, 1), 125
    eng, _ = percept(w)
    assert [s["W"].value for s in eng.run("at_waypoint(0, W)")] == [0]
    bot.progress_cm = 250  # past the midpoint: counts as the far node
    eng, _ = percept(w)
    assert [s["W"].value for s in eng.run("at_waypoint(0, W)")] == [1]


def test_hostage_views_track_lifecycle():
    w = support.line_world()
    support.skip_buy_phase(w)
    eng, _ = percept(w)
    assert ids(eng.run("hostage_at(H, W)"), "H", "W") == [("0", "4")]
    assert eng.run("hostage_following(_H, _B)") == []
    w.hostages[0].following = 0
    eng, _ = percept(w)
    assert eng.run("hostage_at(_H, _W)") == []
    assert ids(eng.run("hostage_following(H, B)"), "H", "B") == [("0", "0")]
    w.hostages[0].rescued = True
    eng, _ = percept(w)
    assert eng.run("hostage_following(_H, _B)") == []


def test_hear_footsteps_range_cutoff():
    w = support.line_world()
    support.skip_buy_phase(w)
    w.bots[1].node = 3  # 1200 cm away, inside the 1500 cm hearing range
    eng, _ = percept(w)
    assert ids(eng.run("hear_footsteps(A, B)"), "A", "B") == [("0", "1"), ("1", "0")]
    w.bots[1].node = 4  # 1600 cm: out of earshot
    eng, _ = percept(w)
    assert eng.run("hear_footsteps(_A, _B)") == []


def test_clock_and_phase_views():
    w = support.line_world()
    eng, _ = percept(w)
    assert [s["P"].name for s in eng.run("game_phase(P)")] == ["buy"]
    support.skip_buy_phase(w)
    eng, _ = percept(w)
    assert [s["P"].name for s in eng.run("game_phase(P)")] == ["play"]
    # 340 ticks on the clock, four ticks to the second
    assert [s["S"].value for s in eng.run("round_time_left(S)")] == [(360 - 20) // 4]


def test_waypoint_tags_enumerate():
    w = support.line_world()
    eng, _ = percept(w)
    rows = ids(eng.run("waypoint_tag(W, T)"), "W", "T")
    assert ("0", "spawn_ct") in rows and ("0", "rescue_zone") in rows
    assert ("4", "hostage_point") in rows
    assert not any(wid == "1" for wid, _tag in rows)
    assert eng.run("waypoint_tag(0, rescue_zone)") == [{}]
    assert eng.run("waypoint_tag(1, rescue_zone)") == []


def test_path_cost_modes():
    w = support.line_world()
    eng, _ = percept(w)
    assert [s["C"].value for s in eng.run("path_cost(0, 5, C)")] == [2000]
    assert [s["C"].value for s in eng.run("path_cost(3, 3, C)")] == [0]
    assert eng.run("path_cost(0, 99, _C)") == []
    with pytest.raises(InstantiationError):
        eng.run("path_cost(_A, 5, _C)")


def test_blackboard_predicates():
    w = support.line_world()
    eng, board = percept(w)
    assert eng.run("team_assert(spotted(2, 5))") == [{}]
    assert eng.run("team_assert(spotted(3, 1))") == [{}]
    assert len(board) == 2
    rows = ids(eng.run("team_fact(spotted(B, W))"), "B", "W")
    assert rows == [("2", "5"), ("3", "1")]  # assertion order
    assert eng.run("team_fact(spotted(9, _))") == []
    assert [term_str(s["F"]) for s in eng.run("team_retract(spotted(2, F))")] == ["5"]
    assert eng.run("team_retract(spotted(2, _F))") == []
    assert len(board) == 1
    with pytest.raises(InstantiationError):
        eng.run("team_assert(spotted(_X, 1))")

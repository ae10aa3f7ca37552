"""Bot minds: the per-tick driver plus two interchangeable brains.

A scripted mind proves a rule-program entry goal to pick actions; a
native mind is the same decision procedure hand-coded in Python.  Both
share one executor, one perception surface and one motivation prover, so
a round driven by either produces the same action lifecycle when the
rule stack is the baseline package.
"""

from __future__ import annotations

from rulebots.logic import Atom, Engine, Int, KnowledgeBase, Struct, Term
from rulebots.sim import CT, IdleIntent, RIFLE, WorldState
from rulebots.agents.actions import Action, ActionExecutor, register_action_natives
from rulebots.agents.blackboard import TeamBlackboard
from rulebots.agents.perception import register_perception

REASON_PERIOD = 5  # ticks between re-reasoning while an action runs

# Combinators every mind understands, independent of any rule package.
RUNTIME_PRELUDE = """
and(A, B) :- call(A), call(B).
no_visible_enemy(B) :- \\+ visible_enemy(B, _).
"""

PRELUDE_SIGNATURES = (("and", 2), ("no_visible_enemy", 1))

# Predicates the runtime owns and wipes at every round start.
ROUND_SCOPED_DYNAMICS = (
    ("bought_this_round", 1),
    ("voted", 1),
    ("committed_tactic", 1),
    ("last_post", 2),
)


class Mind:
    kind = "abstract"

    def __init__(self, world: WorldState, bot_id: int, board: TeamBlackboard):
        self.world = world
        self.bot_id = bot_id
        self.executor = ActionExecutor(world, bot_id)
        kb = KnowledgeBase()
        register_perception(kb, world, board)
        register_action_natives(kb, self.executor)
        for name, arity in ROUND_SCOPED_DYNAMICS:
            kb.declare_dynamic(name, arity)
        self.engine = Engine(kb, output=lambda s: None)
        self.engine.consult(RUNTIME_PRELUDE)
        self.executor.prove = self.engine.prove
        self.last_reason_tick = -REASON_PERIOD

    def on_round_start(self) -> None:
        self.executor.reset()
        self.last_reason_tick = -REASON_PERIOD
        for name, arity in ROUND_SCOPED_DYNAMICS:
            self.engine.kb.retract_all(name, arity)

    def decide(self) -> None:
        raise NotImplementedError

    def reason_due(self) -> bool:
        if self.executor.active is None:
            return True
        return self.world.tick - self.last_reason_tick >= REASON_PERIOD

    def tick_agent(self):
        """One agent turn: settle actions, maybe re-reason, emit an intent."""
        self.executor.normalize()
        if not self.world.bots[self.bot_id].alive:
            return IdleIntent()
        if self.reason_due():
            self.last_reason_tick = self.world.tick
            self.decide()
            self.executor.normalize()
        return self.executor.intent()


class ScriptedMind(Mind):
    kind = "scripted"

    def __init__(self, world, bot_id, board, stack):
        super().__init__(world, bot_id, board)
        for pkg in stack:
            for name, arity in pkg.dynamics:
                self.engine.kb.declare_dynamic(name, arity)
        for pkg in stack:
            self.engine.consult(pkg.text)
        self._entry_goal = Struct("do_reasoning", (Int(bot_id),))

    def decide(self) -> None:
        self.engine.prove(self._entry_goal)


class NativeMind(Mind):
    """Hand-coded mirror of the baseline rule package."""

    kind = "native"

    def __init__(self, world, bot_id, board):
        super().__init__(world, bot_id, board)
        self.bought = False
        self.last_post: int | None = None

    def on_round_start(self) -> None:
        super().on_round_start()
        self.bought = False
        self.last_post = None

    # -- term builders (same shapes the baseline rules produce) ---------

    def _peace(self) -> Term:
        return Struct("no_visible_enemy", (Int(self.bot_id),))

    def _kill_motivation(self, enemy: int) -> Term:
        return Struct(
            "and",
            (
                Struct("bot_alive", (Int(enemy),)),
                Struct("bot_in_fov", (Int(self.bot_id), Int(enemy))),
            ),
        )

    def _liberate_goal(self) -> Term:
        return Struct("action_liberate_hostages", (Int(self.bot_id), self._peace()))

    # -- decision procedure ---------------------------------------------

    def decide(self) -> None:
        if self.executor.active is not None:
            return
        world = self.world
        bot = world.bots[self.bot_id]
        if world.phase == "buy":
            if not self.bought:
                self.bought = True
                if bot.money >= RIFLE.price:
                    self.executor.start(Action("buy", (RIFLE.name,)))
            return
        enemy = self._first_visible_enemy()
        if enemy is not None:
            self.executor.start(
                Action("kill", (enemy,), motivation=self._kill_motivation(enemy))
            )
            return
        if bot.team == CT:
            self._ct_decide()
        else:
            self._t_decide()

    def _first_visible_enemy(self) -> int | None:
        bot = self.world.bots[self.bot_id]
        for viewer, seen in sorted(self.world.fov_pairs()):
            if viewer == self.bot_id and self.world.bots[seen].team != bot.team:
                return seen
        return None

    def _ct_decide(self) -> None:
        world = self.world
        if any(
            h.following == self.bot_id
            for h in world.hostages.values()
            if not h.rescued
        ):
            self._head_home()
            return
        target = self._pick_hostage_node()
        if target is not None:
            self._direct_approach(target)
            return
        self._head_home()

    def _pick_hostage_node(self) -> int | None:
        world = self.world
        my = world.nearest_wp(world.bots[self.bot_id])
        best = None
        for hid in sorted(world.hostages):
            hostage = world.hostages[hid]
            if hostage.rescued or hostage.following is not None:
                continue
            cost = world.map.cost(my, hostage.node)
            if best is None or cost < best[0]:
                best = (cost, hostage.node)
        return None if best is None else best[1]

    def _direct_approach(self, node: int) -> None:
        self.executor.start(
            Action(
                "goto",
                (node,),
                motivation=self._peace(),
                continuation=self._liberate_goal(),
            )
        )

    def _head_home(self) -> None:
        world = self.world
        my = world.nearest_wp(world.bots[self.bot_id])
        home = self._nearest_tagged(my, "rescue_zone")
        if my == home:
            self.executor.start(Action("guard", (home,), motivation=self._peace()))
        else:
            self.executor.start(Action("goto", (home,), motivation=self._peace()))

    def _t_decide(self) -> None:
        world = self.world
        my = world.nearest_wp(world.bots[self.bot_id])
        if self.last_post is None:
            post = self._nearest_tagged(my, "hostage_point")
        else:
            cycle = world.map.tagged("ambush_point") or world.map.tagged("hostage_point")
            greater = [w for w in cycle if w > self.last_post]
            post = greater[0] if greater else cycle[0]
        self.last_post = post
        self.executor.start(Action("guard", (post,), motivation=self._peace()))

    def _nearest_tagged(self, from_wp: int, tag: str) -> int:
        world = self.world
        best = None
        for wid in world.map.tagged(tag):
            cost = world.map.cost(from_wp, wid)
            if best is None or cost < best[0]:
                best = (cost, wid)
        return best[1]


def make_mind(kind: str, world, bot_id, board, stack=None) -> Mind:
    if kind == "scripted":
        if stack is None:
            raise ValueError("a scripted mind needs a rule stack")
        return ScriptedMind(world, bot_id, board, stack)
    if kind == "native":
        return NativeMind(world, bot_id, board)
    raise ValueError(f"unknown mind kind: {kind!r}")

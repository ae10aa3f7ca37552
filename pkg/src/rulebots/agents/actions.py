"""Durative actions and their per-bot executor.

An action owns three things: a low-level controller that emits one sim
intent per tick, a completion condition checked at the start of the next
tick, and an optional motivation goal that interrupts the action as soon
as it stops being provable.  A completed action may chain into a
continuation goal.  Scripted and hand-coded minds share this executor,
so their action lifecycles are directly comparable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from rulebots.logic import (
    Atom,
    InstantiationError,
    Int,
    NotPermittedError,
    Struct,
    Term,
    TermTypeError,
    collect_vars,
    term_str,
)
from rulebots.sim import (
    AttackIntent,
    BuyIntent,
    FaceIntent,
    IdleIntent,
    InteractIntent,
    MoveIntent,
    WEAPONS,
)
from rulebots.sim.pathfind import shortest_path

NORMALIZE_LIMIT = 32

ACTION_KINDS = ("goto", "kill", "liberate_hostages", "guard", "buy", "wait")


@dataclass
class Action:
    kind: str
    args: tuple
    motivation: Term | None = None
    continuation: Term | None = None
    state: dict = field(default_factory=dict)

    def label(self) -> str:
        if not self.args:
            return self.kind
        rendered = ",".join(str(a) for a in self.args)
        return f"{self.kind}({rendered})"


class ActionExecutor:
    """Runs at most one action per bot and reports lifecycle events."""

    def __init__(self, world, bot_id: int):
        self.world = world
        self.bot_id = bot_id
        self.active: Action | None = None
        self.prove = None  # wired to the owning mind's goal prover

    def reset(self) -> None:
        self.active = None

    # -- lifecycle ------------------------------------------------------

    def start(self, action: Action) -> None:
        if self.active is not None:
            self._emit("interrupted", self.active)
        self.active = action
        self._emit("started", action)

    def normalize(self) -> None:
        """Settle the action state: completions chain into continuations,
        failed or unmotivated actions are dropped.  Bounded so a cyclic
        continuation cannot hang the tick."""
        bot = self.world.bots[self.bot_id]
        if not bot.alive:
            if self.active is not None:
                self._emit("interrupted", self.active)
                self.active = None
            return
        for _ in range(NORMALIZE_LIMIT):
            action = self.active
            if action is None:
                return
            if self._completed(action):
                self._emit("completed", action)
                self.active = None
                if action.continuation is not None:
                    self.prove(action.continuation)
                continue
            if self._failed(action):
                self._emit("failed", action)
                self.active = None
                continue
            if action.motivation is not None and not self.prove(action.motivation):
                self._emit("interrupted", action)
                self.active = None
                continue
            return

    def _emit(self, etype: str, action: Action) -> None:
        self.world.log_agent_event(self.bot_id, etype, f"action={action.label()}")

    # -- conditions -----------------------------------------------------

    def _completed(self, action: Action) -> bool:
        bot = self.world.bots[self.bot_id]
        kind = action.kind
        if kind == "goto":
            return bot.edge is None and bot.node == action.args[0]
        if kind == "kill":
            return False
        if kind == "liberate_hostages":
            if any(
                h.following == self.bot_id
                for h in self.world.hostages.values()
                if not h.rescued
            ):
                return True
            return self._nearest_free_hostage() is None
        if kind == "guard":
            return action.state.get("dwell", 0) >= self.world.config.guard_dwell_ticks
        if kind == "buy":
            return bool(action.state.get("attempted")) and bot.weapon.name == action.args[0]
        if kind == "wait":
            return action.state.get("waited", 0) >= action.args[0]
        return False

    def _failed(self, action: Action) -> bool:
        kind = action.kind
        if kind in ("goto", "guard"):
            return action.args[0] not in self.world.map.waypoints
        if kind == "buy":
            bot = self.world.bots[self.bot_id]
            return bool(action.state.get("attempted")) and bot.weapon.name != action.args[0]
        return False

    # -- controllers ----------------------------------------------------

    def intent(self):
        bot = self.world.bots[self.bot_id]
        action = self.active
        if action is None or not bot.alive:
            return IdleIntent()
        kind = action.kind
        if kind == "goto":
            return self._move_toward(action.args[0])
        if kind == "kill":
            return AttackIntent(action.args[0])
        if kind == "liberate_hostages":
            hostage = self._nearest_free_hostage()
            if hostage is None:
                return IdleIntent()
            if bot.edge is None and bot.node == hostage.node:
                return InteractIntent(hostage.id)
            return self._move_toward(hostage.node)
        if kind == "guard":
            post = action.args[0]
            if bot.edge is None and bot.node == post:
                action.state["dwell"] = action.state.get("dwell", 0) + 1
                # sweep the surroundings while holding the post
                turn = self.world.config.turn_deg_per_tick
                return FaceIntent((bot.facing_deg + turn) % 360)
            return self._move_toward(post)
        if kind == "buy":
            action.state["attempted"] = True
            return BuyIntent(action.args[0])
        if kind == "wait":
            action.state["waited"] = action.state.get("waited", 0) + 1
            return IdleIntent()
        return IdleIntent()

    def _move_toward(self, target: int):
        bot = self.world.bots[self.bot_id]
        mapdef = self.world.map
        if bot.edge is not None:
            near, far = bot.edge
            cost = mapdef.edge_cost[bot.edge]
            via_far = mapdef.cost(far, target) + (cost - bot.progress_cm)
            via_near = mapdef.cost(near, target) + bot.progress_cm
            return MoveIntent(far if via_far <= via_near else near)
        if bot.node == target:
            return IdleIntent()
        path = shortest_path(mapdef, bot.node, target)
        return MoveIntent(path[1])

    def _nearest_free_hostage(self):
        """Cheapest reachable hostage that is neither rescued nor already
        following someone; ties break on the lower hostage id."""
        bot = self.world.bots[self.bot_id]
        my = self.world.nearest_wp(bot)
        best = None
        for hid in sorted(self.world.hostages):
            h = self.world.hostages[hid]
            if h.rescued or h.following is not None:
                continue
            cost = self.world.map.cost(my, h.node)
            if best is None or cost < best[0]:
                best = (cost, h)
        return None if best is None else best[1]


# -- rule-facing wrappers ----------------------------------------------

ACTION_NATIVE_SIGNATURES = (
    ("action_goto", 2),
    ("action_goto", 3),
    ("action_kill", 2),
    ("action_kill", 3),
    ("action_liberate_hostages", 1),
    ("action_liberate_hostages", 2),
    ("action_guard", 2),
    ("action_guard", 3),
    ("action_buy", 2),
    ("action_wait", 2),
    ("idle", 1),
)


def _require_int(term: Term, what: str) -> int:
    if isinstance(term, Int):
        return term.value
    if collect_vars(term):
        raise InstantiationError(f"{what} must be bound")
    raise TermTypeError(f"integer {what}", term_str(term))


def _require_atom(term: Term, what: str) -> str:
    if isinstance(term, Atom):
        return term.name
    if collect_vars(term):
        raise InstantiationError(f"{what} must be bound")
    raise TermTypeError(f"atom {what}", term_str(term))


def _require_goal(term: Term, what: str) -> Term:
    if not isinstance(term, (Atom, Struct)):
        raise TermTypeError(f"callable {what}", term_str(term))
    return term


def split_opts(opts: Term) -> tuple[Term | None, Term | None]:
    """Unpack an options term into (motivation, continuation).

    Accepted shapes: a bare motivation goal M, a continuation marker
    andThen(C), or the pair (M, andThen(C)).
    """
    if collect_vars(opts):
        raise InstantiationError("action options must be ground")
    if isinstance(opts, Struct) and opts.name == "," and len(opts.args) == 2:
        left, right = opts.args
        if not (isinstance(right, Struct) and right.name == "andThen" and len(right.args) == 1):
            raise TermTypeError("(motivation, andThen(goal)) pair", term_str(opts))
        return _require_goal(left, "motivation"), _require_goal(right.args[0], "continuation")
    if isinstance(opts, Struct) and opts.name == "andThen" and len(opts.args) == 1:
        return None, _require_goal(opts.args[0], "continuation")
    return _require_goal(opts, "motivation"), None


def register_action_natives(kb, executor: ActionExecutor) -> None:
    def own_bot(term: Term) -> int:
        bot_id = _require_int(term, "bot id")
        if bot_id != executor.bot_id:
            raise NotPermittedError(
                f"bot {executor.bot_id} cannot drive actions of bot {bot_id}"
            )
        return bot_id

    def launch(kind: str, args: tuple, opts: Term | None):
        motivation, continuation = (None, None) if opts is None else split_opts(opts)
        executor.start(Action(kind, args, motivation, continuation))
        return [None]

    def goto(bot, node, opts=None):
        own_bot(bot)
        return launch("goto", (_require_int(node, "waypoint id"),), opts)

    def kill(bot, target, opts=None):
        own_bot(bot)
        return launch("kill", (_require_int(target, "target bot id"),), opts)

    def liberate(bot, opts=None):
        own_bot(bot)
        return launch("liberate_hostages", (), opts)

    def guard(bot, node, opts=None):
        own_bot(bot)
        return launch("guard", (_require_int(node, "waypoint id"),), opts)

    def buy(bot, weapon):
        own_bot(bot)
        name = _require_atom(weapon, "weapon name")
        if name not in WEAPONS:
            raise TermTypeError("known weapon name", name)
        return launch("buy", (name,), None)

    def wait(bot, ticks):
        own_bot(bot)
        n = _require_int(ticks, "tick count")
        if n < 0:
            raise TermTypeError("non-negative tick count", str(n))
        return launch("wait", (n,), None)

    def idle(bot):
        own_bot(bot)
        return [None] if executor.active is None else None

    kb.register_native("action_goto", 2, goto)
    kb.register_native("action_goto", 3, goto)
    kb.register_native("action_kill", 2, kill)
    kb.register_native("action_kill", 3, kill)
    kb.register_native("action_liberate_hostages", 1, liberate)
    kb.register_native("action_liberate_hostages", 2, liberate)
    kb.register_native("action_guard", 2, guard)
    kb.register_native("action_guard", 3, guard)
    kb.register_native("action_buy", 2, buy)
    kb.register_native("action_wait", 2, wait)
    kb.register_native("idle", 1, idle)

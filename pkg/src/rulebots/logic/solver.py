"""Depth-first resolution with backtracking.

The machine is a set of mutually recursive generators over a shared
binding store with a trail.  Each clause activation gets its own cut
flag, so a cut prunes alternatives back to the clause that contains it
and never further.  A stream snapshots the store generation when it
starts; database changes made while it is open are invisible to it.
"""

from __future__ import annotations

import sys

from rulebots.logic.database import KnowledgeBase, NativePredicate, RESERVED_PREDICATES
from rulebots.logic.errors import (
    BudgetExceededError,
    EvaluationError,
    ExistenceError,
    InstantiationError,
    TermTypeError,
)
from rulebots.logic.reader import read_term, split_clause
from rulebots.logic.terms import (
    INT_MAX,
    INT_MIN,
    TRUE,
    Atom,
    Int,
    Struct,
    Term,
    Var,
    collect_vars,
    fresh_var,
    make_list,
    term_str,
)

DEFAULT_MAX_STEPS = 100_000
DEFAULT_MAX_DEPTH = 2_000


class _CutFlag:
    __slots__ = ("cut",)

    def __init__(self):
        self.cut = False


class _Machine:
    __slots__ = ("kb", "bind", "trail", "snap", "steps", "max_steps", "max_depth", "out")

    def __init__(self, kb: KnowledgeBase, max_steps: int, max_depth: int, out):
        self.kb = kb
        self.bind: dict[int, Term] = {}
        self.trail: list[int] = []
        self.snap = kb.generation
        self.steps = 0
        self.max_steps = max_steps
        self.max_depth = max_depth
        self.out = out

    # -- bindings ----------------------------------------------------------

    def deref(self, t: Term) -> Term:
        bind = self.bind
        while type(t) is Var:
            nxt = bind.get(t.id)
            if nxt is None:
                return t
            t = nxt
        return t

    def undo(self, mark: int):
        trail = self.trail
        bind = self.bind
        while len(trail) > mark:
            del bind[trail.pop()]

    def _occurs(self, vid: int, t: Term) -> bool:
        stack = [t]
        while stack:
            x = self.deref(stack.pop())
            k = type(x)
            if k is Var:
                if x.id == vid:
                    return True
            elif k is Struct:
                stack.extend(x.args)
        return False

    def unify(self, a: Term, b: Term) -> bool:
        stack = [(a, b)]
        bind = self.bind
        trail = self.trail
        while stack:
            x, y = stack.pop()
            x = self.deref(x)
            y = self.deref(y)
            if x is y:
                continue
            kx = type(x)
            ky = type(y)
            if kx is Var:
                if ky is Var:
                    if x.id == y.id:
                        continue
                    bind[x.id] = y
                    trail.append(x.id)
                elif self._occurs(x.id, y):
                    return False
                else:
                    bind[x.id] = y
                    trail.append(x.id)
            elif ky is Var:
                if self._occurs(y.id, x):
                    return False
                bind[y.id] = x
                trail.append(y.id)
            elif kx is Atom:
                if ky is not Atom or x.name != y.name:
                    return False
            elif kx is Int:
                if ky is not Int or x.value != y.value:
                    return False
            else:  # Struct
                if ky is not Struct or x.name != y.name or len(x.args) != len(y.args):
                    return False
                stack.extend(zip(x.args, y.args))
        return True

    def resolve(self, t: Term) -> Term:
        """Deep-substitute current bindings; unbound variables stay."""
        t = self.deref(t)
        if type(t) is not Struct:
            return t
        return Struct(t.name, tuple(self.resolve(a) for a in t.args))

    def reify_copy(self, t: Term) -> Term:
        """Deep copy under current bindings with unbound vars renamed fresh."""
        mapping: dict[int, Var] = {}

        def walk(x: Term) -> Term:
            x = self.deref(x)
            k = type(x)
            if k is Var:
                v = mapping.get(x.id)
                if v is None:
                    v = fresh_var(x.name)
                    mapping[x.id] = v
                return v
            if k is Struct:
                return Struct(x.name, tuple(walk(a) for a in x.args))
            return x

        return walk(t)

    def term_equal(self, a: Term, b: Term) -> bool:
        stack = [(a, b)]
        while stack:
            x, y = stack.pop()
            x = self.deref(x)
            y = self.deref(y)
            if x is y:
                continue
            kx = type(x)
            if kx is not type(y):
                return False
            if kx is Var:
                if x.id != y.id:
                    return False
            elif kx is Atom:
                if x.name != y.name:
                    return False
            elif kx is Int:
                if x.value != y.value:
                    return False
            else:
                if x.name != y.name or len(x.args) != len(y.args):
                    return False
                stack.extend(zip(x.args, y.args))
        return True

    # -- arithmetic --------------------------------------------------------

    def eval_arith(self, t: Term) -> int:
        t = self.deref(t)
        k = type(t)
        if k is Int:
            return t.value
        if k is Var:
            raise InstantiationError("unbound variable in arithmetic expression")
        if k is Atom:
            raise TermTypeError("arithmetic expression", t.name)
        name = t.name
        n = len(t.args)
        if n == 2:
            l = self.eval_arith(t.args[0])
            r = self.eval_arith(t.args[1])
            if name == "+":
                v = l + r
            elif name == "-":
                v = l - r
            elif name == "*":
                v = l * r
            elif name == "//":
                if r == 0:
                    raise EvaluationError("division by zero")
                v = l // r
            elif name == "mod":
                if r == 0:
                    raise EvaluationError("mod by zero")
                v = l % r
            elif name == "min":
                v = min(l, r)
            elif name == "max":
                v = max(l, r)
            else:
                raise TermTypeError("arithmetic function", f"{name}/{n}")
        elif n == 1:
            a = self.eval_arith(t.args[0])
            if name == "-":
                v = -a
            elif name == "abs":
                v = abs(a)
            else:
                raise TermTypeError("arithmetic function", f"{name}/{n}")
        else:
            raise TermTypeError("arithmetic function", f"{name}/{n}")
        if v < INT_MIN or v > INT_MAX:
            raise EvaluationError("integer overflow (64-bit range)")
        return v

    # -- resolution --------------------------------------------------------

    def rename(self, clause) -> tuple[Term, Term]:
        if not clause.var_ids:
            return clause.head, clause.body
        mapping = {vid: fresh_var() for vid in clause.var_ids}

        def walk(x: Term) -> Term:
            k = type(x)
            if k is Var:
                return mapping.get(x.id, x)
            if k is Struct:
                return Struct(x.name, tuple(walk(a) for a in x.args))
            return x

        return walk(clause.head), walk(clause.body)

    def solve(self, goal: Term, depth: int, cut: _CutFlag):
        self.steps += 1
        if self.steps > self.max_steps:
            raise BudgetExceededError(f"resolution step budget exceeded ({self.max_steps})")
        if depth > self.max_depth:
            raise BudgetExceededError(f"resolution depth limit exceeded ({self.max_depth})")
        g = self.deref(goal)
        k = type(g)
        if k is Var:
            raise InstantiationError("unbound variable as goal")
        if k is Int:
            raise TermTypeError("callable goal", g.value)
        if k is Atom:
            name, args, arity = g.name, (), 0
        else:
            name, args, arity = g.name, g.args, len(g.args)
        builtin = _BUILTINS.get((name, arity))
        if builtin is not None:
            yield from builtin(self, args, depth, cut)
            return
        native = self.kb.native((name, arity))
        if native is not None:
            yield from self.call_native(native, args)
            return
        pred = self.kb.lookup((name, arity))
        if pred is None:
            raise ExistenceError(name, arity)
        snap = self.snap
        local = _CutFlag()
        trail = self.trail
        for clause in pred.clauses:
            if not clause.alive_at(snap):
                continue
            if local.cut:
                return
            mark = len(trail)
            head, body = self.rename(clause)
            if self.unify(g, head):
                yield from self.solve(body, depth + 1, local)
            self.undo(mark)
            if local.cut:
                return

    def call_native(self, native: NativePredicate, args: tuple):
        resolved = tuple(self.resolve(a) for a in args)
        answers = native.handler(*resolved)
        if answers is None:
            return
        mark = len(self.trail)
        for ans in answers:
            ok = True
            if ans is not None:
                for orig, new in zip(args, ans):
                    if not self.unify(orig, new):
                        ok = False
                        break
            if ok:
                yield
            self.undo(mark)
            if not native.nondet:
                return

    def solve_once(self, goal: Term, depth: int) -> bool:
        """First solution, bindings kept.  Caller owns the trail mark."""
        for _ in self.solve(goal, depth, _CutFlag()):
            return True
        return False


# -- control constructs and builtins --------------------------------------


def _bi_conj(m: _Machine, args, depth, cut):
    a, b = args
    for _ in m.solve(a, depth, cut):
        yield from m.solve(b, depth, cut)
        if cut.cut:
            return


def _bi_disj(m: _Machine, args, depth, cut):
    a, b = args
    ad = m.deref(a)
    if type(ad) is Struct and ad.name == "->" and len(ad.args) == 2:
        cond, then = ad.args
        mark = len(m.trail)
        if m.solve_once(cond, depth + 1):
            yield from m.solve(then, depth, cut)
            m.undo(mark)
        else:
            m.undo(mark)
            yield from m.solve(b, depth, cut)
        return
    mark = len(m.trail)
    yield from m.solve(a, depth, cut)
    if cut.cut:
        return
    m.undo(mark)
    yield from m.solve(b, depth, cut)


def _bi_ite(m: _Machine, args, depth, cut):
    cond, then = args
    mark = len(m.trail)
    if m.solve_once(cond, depth + 1):
        yield from m.solve(then, depth, cut)
    m.undo(mark)


def _bi_cut(m: _Machine, args, depth, cut):
    yield
    cut.cut = True


def _bi_true(m: _Machine, args, depth, cut):
    yield


def _bi_fail(m: _Machine, args, depth, cut):
    return
    yield


def _bi_call(m: _Machine, args, depth, cut):
    (g,) = args
    gd = m.deref(g)
    if type(gd) is Var:
        raise InstantiationError("unbound variable in call/1")
    if type(gd) is Int:
        raise TermTypeError("callable goal", gd.value)
    yield from m.solve(gd, depth + 1, _CutFlag())


def _bi_naf(m: _Machine, args, depth, cut):
    (g,) = args
    mark = len(m.trail)
    found = m.solve_once(g, depth + 1)
    m.undo(mark)
    if not found:
        yield


def _bi_unify(m: _Machine, args, depth, cut):
    a, b = args
    mark = len(m.trail)
    if m.unify(a, b):
        yield
    m.undo(mark)


def _bi_not_unify(m: _Machine, args, depth, cut):
    a, b = args
    mark = len(m.trail)
    ok = m.unify(a, b)
    m.undo(mark)
    if not ok:
        yield


def _bi_struct_eq(m: _Machine, args, depth, cut):
    if m.term_equal(args[0], args[1]):
        yield


def _bi_struct_neq(m: _Machine, args, depth, cut):
    if not m.term_equal(args[0], args[1]):
        yield


def _bi_is(m: _Machine, args, depth, cut):
    lhs, rhs = args
    value = Int(m.eval_arith(rhs))
    mark = len(m.trail)
    if m.unify(lhs, value):
        yield
    m.undo(mark)


def _cmp(op):
    def body(m: _Machine, args, depth, cut):
        l = m.eval_arith(args[0])
        r = m.eval_arith(args[1])
        if op(l, r):
            yield

    return body


def _bi_findall(m: _Machine, args, depth, cut):
    template, goal, out = args
    results = []
    mark = len(m.trail)
    inner = _CutFlag()
    for _ in m.solve(goal, depth + 1, inner):
        results.append(m.reify_copy(template))
    m.undo(mark)
    lst = make_list(results)
    mark = len(m.trail)
    if m.unify(out, lst):
        yield
    m.undo(mark)


def _assert_clause(m: _Machine, args, front: bool):
    (t,) = args
    td = m.deref(t)
    if type(td) is Var:
        raise InstantiationError("unbound variable in assert")
    clause = m.reify_copy(td)
    head, body = split_clause(clause)
    if type(head) not in (Atom, Struct):
        raise TermTypeError("callable clause head", head)
    m.kb.add_clause(head, body, front=front)


def _bi_assertz(m: _Machine, args, depth, cut):
    _assert_clause(m, args, front=False)
    yield


def _bi_asserta(m: _Machine, args, depth, cut):
    _assert_clause(m, args, front=True)
    yield


def _bi_retract(m: _Machine, args, depth, cut):
    (t,) = args
    td = m.deref(t)
    if type(td) is Var:
        raise InstantiationError("unbound variable in retract")
    phead, pbody = split_clause(td)
    if type(phead) not in (Atom, Struct):
        raise TermTypeError("callable clause head", phead)
    key = (phead.name, len(phead.args)) if type(phead) is Struct else (phead.name, 0)
    if key in RESERVED_PREDICATES or m.kb.native(key) is not None:
        from rulebots.logic.errors import NotPermittedError

        raise NotPermittedError(f"cannot retract from protected predicate {key[0]}/{key[1]}")
    pred = m.kb.lookup(key)
    if pred is None:
        return
    for clause in list(pred.clauses):
        if clause.death is not None:
            continue
        mark = len(m.trail)
        head, body = m.rename(clause)
        if m.unify(phead, head) and m.unify(pbody, body):
            m.kb.kill_clause(clause)
            yield
            m.undo(mark)
            return
        m.undo(mark)


def _bi_var(m: _Machine, args, depth, cut):
    if type(m.deref(args[0])) is Var:
        yield


def _bi_nonvar(m: _Machine, args, depth, cut):
    if type(m.deref(args[0])) is not Var:
        yield


def _bi_atom(m: _Machine, args, depth, cut):
    if type(m.deref(args[0])) is Atom:
        yield


def _bi_number(m: _Machine, args, depth, cut):
    if type(m.deref(args[0])) is Int:
        yield


def _bi_write(m: _Machine, args, depth, cut):
    m.out(term_str(m.resolve(args[0])))
    yield


def _bi_nl(m: _Machine, args, depth, cut):
    m.out("\n")
    yield


_BUILTINS = {
    (",", 2): _bi_conj,
    (";", 2): _bi_disj,
    ("->", 2): _bi_ite,
    ("!", 0): _bi_cut,
    ("true", 0): _bi_true,
    ("fail", 0): _bi_fail,
    ("call", 1): _bi_call,
    ("\\+", 1): _bi_naf,
    ("=", 2): _bi_unify,
    ("\\=", 2): _bi_not_unify,
    ("==", 2): _bi_struct_eq,
    ("\\==", 2): _bi_struct_neq,
    ("is", 2): _bi_is,
    ("<", 2): _cmp(lambda l, r: l < r),
    (">", 2): _cmp(lambda l, r: l > r),
    ("=<", 2): _cmp(lambda l, r: l <= r),
    (">=", 2): _cmp(lambda l, r: l >= r),
    ("=:=", 2): _cmp(lambda l, r: l == r),
    ("=\\=", 2): _cmp(lambda l, r: l != r),
    ("findall", 3): _bi_findall,
    ("assert", 1): _bi_assertz,
    ("assertz", 1): _bi_assertz,
    ("asserta", 1): _bi_asserta,
    ("retract", 1): _bi_retract,
    ("var", 1): _bi_var,
    ("nonvar", 1): _bi_nonvar,
    ("atom", 1): _bi_atom,
    ("number", 1): _bi_number,
    ("write", 1): _bi_write,
    ("nl", 0): _bi_nl,
}

assert set(_BUILTINS) == set(RESERVED_PREDICATES)


class SolutionStream:
    """Resumable enumeration of one query's solutions."""

    def __init__(self, machine: _Machine, goal: Term, names: dict[str, Var]):
        self._machine = machine
        self._names = names
        self._gen = machine.solve(goal, 0, _CutFlag())
        self._done = False

    @property
    def snapshot_generation(self) -> int:
        return self._machine.snap

    def next_solution(self) -> dict[str, Term] | None:
        if self._done:
            return None
        try:
            next(self._gen)
        except StopIteration:
            self._done = True
            return None
        except RecursionError:
            self._done = True
            raise BudgetExceededError("interpreter recursion limit hit during resolution")
        m = self._machine
        return {name: m.resolve(var) for name, var in self._names.items()}

    def __iter__(self):
        while True:
            sol = self.next_solution()
            if sol is None:
                return
            yield sol

    def all(self) -> list[dict[str, Term]]:
        return list(self)


class Engine:
    """A knowledge base plus resolution configuration."""

    def __init__(
        self,
        kb: KnowledgeBase | None = None,
        max_steps: int = DEFAULT_MAX_STEPS,
        max_depth: int = DEFAULT_MAX_DEPTH,
        output=None,
    ):
        self.kb = kb if kb is not None else KnowledgeBase()
        self.max_steps = max_steps
        self.max_depth = max_depth
        self.output = output if output is not None else lambda s: sys.stdout.write(s)

    def _machine(self) -> _Machine:
        return _Machine(self.kb, self.max_steps, self.max_depth, self.output)

    def consult(self, text: str):
        return self.kb.consult(text)

    def solve(self, goal: Term, names: dict[str, Var] | None = None) -> SolutionStream:
        if names is None:
            names = {}
            for v in collect_vars(goal):
                if v.name and v.name != "_" and v.name not in names:
                    names[v.name] = v
        return SolutionStream(self._machine(), goal, names)

    def run(self, text: str) -> list[dict[str, Term]]:
        """Parse a query and return all solutions as name -> term dicts."""
        goal, varmap = read_term(text)
        names = {n: v for n, v in varmap.items() if not n.startswith("_")}
        return SolutionStream(self._machine(), goal, names).all()

    def prove(self, goal: Term) -> bool:
        """True iff the goal has at least one solution."""
        stream = SolutionStream(self._machine(), goal, {})
        return stream.next_solution() is not None

    def retract(self, pattern: Term) -> bool:
        """Remove the first clause matching the pattern.  False if none does."""
        m = self._machine()
        for _ in _bi_retract(m, (pattern,), 0, _CutFlag()):
            return True
        return False

    def eval_arith(self, expr: Term) -> int:
        return self._machine().eval_arith(expr)


def unify_terms(a: Term, b: Term) -> dict[int, Term] | None:
    """Most general unifier of two terms as an id -> term map, or None."""
    m = _Machine(KnowledgeBase(), DEFAULT_MAX_STEPS, DEFAULT_MAX_DEPTH, lambda s: None)
    if not m.unify(a, b):
        return None
    return {vid: m.resolve(Var(vid)) for vid in m.bind}


def apply_bindings(t: Term, bindings: dict[int, Term]) -> Term:
    """Deep-substitute an id -> term map produced by unify_terms."""
    k = type(t)
    if k is Var:
        got = bindings.get(t.id)
        return t if got is None else apply_bindings(got, bindings)
    if k is Struct:
        return Struct(t.name, tuple(apply_bindings(a, bindings) for a in t.args))
    return t

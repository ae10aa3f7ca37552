"""Clause store with a logical update view.

Every clause carries a birth generation and an optional death generation.
A resolution stream captures the store's generation when it starts and
only ever sees clauses alive at that point, so asserts and retracts made
while a stream is open never change what that stream yields.
"""

from __future__ import annotations

from rulebots.logic.errors import NotPermittedError, TermTypeError
from rulebots.logic.reader import read_program
from rulebots.logic.terms import Atom, Struct, Term, collect_vars, functor_key

# Control constructs and builtins.  These names are owned by the solver:
# they can be neither defined by clauses nor shadowed by natives.
RESERVED_PREDICATES: frozenset[tuple[str, int]] = frozenset(
    {
        (",", 2),
        (";", 2),
        ("->", 2),
        ("!", 0),
        ("\\+", 1),
        ("call", 1),
        ("true", 0),
        ("fail", 0),
        ("=", 2),
        ("\\=", 2),
        ("==", 2),
        ("\\==", 2),
        ("is", 2),
        ("<", 2),
        (">", 2),
        ("=<", 2),
        (">=", 2),
        ("=:=", 2),
        ("=\\=", 2),
        ("findall", 3),
        ("assert", 1),
        ("asserta", 1),
        ("assertz", 1),
        ("retract", 1),
        ("var", 1),
        ("nonvar", 1),
        ("atom", 1),
        ("number", 1),
        ("write", 1),
        ("nl", 0),
    }
)


class StoredClause:
    __slots__ = ("head", "body", "var_ids", "seq", "birth", "death")

    def __init__(self, head: Term, body: Term, seq: int, birth: int):
        self.head = head
        self.body = body
        self.var_ids = tuple(v.id for v in collect_vars(Struct(":-", (head, body))))
        self.seq = seq
        self.birth = birth
        self.death: int | None = None

    def alive_at(self, generation: int) -> bool:
        return self.birth <= generation and (self.death is None or self.death > generation)


class _Predicate:
    __slots__ = ("clauses", "declared_dynamic")

    def __init__(self):
        self.clauses: list[StoredClause] = []
        self.declared_dynamic = False


class NativePredicate:
    __slots__ = ("name", "arity", "handler", "nondet")

    def __init__(self, name: str, arity: int, handler, nondet: bool):
        self.name = name
        self.arity = arity
        self.handler = handler
        self.nondet = nondet


class KnowledgeBase:
    """Predicate table: stored clauses, dynamic declarations and natives."""

    def __init__(self):
        self._preds: dict[tuple[str, int], _Predicate] = {}
        self._natives: dict[tuple[str, int], NativePredicate] = {}
        self.generation = 0
        self._seq = 0

    # -- interning ---------------------------------------------------------

    def lookup(self, key: tuple[str, int]) -> _Predicate | None:
        return self._preds.get(key)

    def native(self, key: tuple[str, int]) -> NativePredicate | None:
        return self._natives.get(key)

    def native_keys(self) -> list[tuple[str, int]]:
        return sorted(self._natives)

    def defined_keys(self) -> list[tuple[str, int]]:
        return sorted(self._preds)

    # -- updates -----------------------------------------------------------

    def _bump(self) -> int:
        self.generation += 1
        return self.generation

    def _check_writable(self, key: tuple[str, int], what: str):
        if key in RESERVED_PREDICATES:
            raise NotPermittedError(f"cannot {what} reserved predicate {key[0]}/{key[1]}")
        if key in self._natives:
            raise NotPermittedError(f"cannot {what} native predicate {key[0]}/{key[1]}")

    def add_clause(self, head: Term, body: Term, front: bool = False) -> StoredClause:
        key = functor_key(head)
        if key is None:
            raise TermTypeError("callable clause head", head)
        self._check_writable(key, "define")
        pred = self._preds.get(key)
        if pred is None:
            pred = _Predicate()
            self._preds[key] = pred
        clause = StoredClause(head, body, self._seq, self._bump())
        self._seq += 1
        if front:
            pred.clauses.insert(0, clause)
        else:
            pred.clauses.append(clause)
        return clause

    def kill_clause(self, clause: StoredClause):
        clause.death = self._bump()

    def declare_dynamic(self, name: str, arity: int):
        key = (name, arity)
        self._check_writable(key, "declare dynamic")
        pred = self._preds.get(key)
        if pred is None:
            pred = _Predicate()
            self._preds[key] = pred
        pred.declared_dynamic = True

    def register_native(self, name: str, arity: int, handler, nondet: bool = False):
        key = (name, arity)
        if key in RESERVED_PREDICATES:
            raise NotPermittedError(f"cannot register native over reserved {name}/{arity}")
        if key in self._natives:
            raise NotPermittedError(f"native {name}/{arity} already registered")
        if key in self._preds and any(c.death is None for c in self._preds[key].clauses):
            raise NotPermittedError(f"cannot register native over defined predicate {name}/{arity}")
        self._natives[key] = NativePredicate(name, arity, handler, nondet)

    # -- loading -----------------------------------------------------------

    def consult(self, text: str) -> list[StoredClause]:
        """Parse and add a clause sequence.  Parsing happens first, so a
        syntax error leaves the store untouched."""
        parsed = read_program(text)
        for head, _ in parsed:
            key = functor_key(head)
            self._check_writable(key, "define")
        return [self.add_clause(h, b) for h, b in parsed]

    def visible_clauses(self, key: tuple[str, int], generation: int) -> list[StoredClause]:
        pred = self._preds.get(key)
        if pred is None:
            return []
        return [c for c in pred.clauses if c.alive_at(generation)]

    def retract_all(self, name: str, arity: int):
        """Kill every live clause of a predicate (keeps the declaration)."""
        pred = self._preds.get((name, arity))
        if pred is None:
            return
        for c in pred.clauses:
            if c.death is None:
                c.death = self._bump()

    def count_clauses(self, name: str, arity: int) -> int:
        pred = self._preds.get((name, arity))
        if pred is None:
            return 0
        return sum(1 for c in pred.clauses if c.death is None)


def atom(name: str) -> Atom:
    return Atom(name)

"""Term representation and the term writer.

Four concrete kinds: atoms, integers, variables and compounds.  Terms are
immutable; variable identity is the numeric id, and bindings live outside
the term in the solver's binding store.
"""

from __future__ import annotations

import itertools

# One process-wide id stream.  Ids only need to be unique; renaming and
# queries draw from the same stream so they can never collide in one
# binding store.
_var_ids = itertools.count(1)


def next_var_id() -> int:
    return next(_var_ids)


def fresh_var(name: str | None = None) -> "Var":
    return Var(next(_var_ids), name)


class Term:
    __slots__ = ()


class Atom(Term):
    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name

    def __repr__(self):
        return f"Atom({self.name!r})"

    def __eq__(self, other):
        return type(other) is Atom and other.name == self.name

    def __hash__(self):
        return hash(("atom", self.name))


class Int(Term):
    __slots__ = ("value",)

    def __init__(self, value: int):
        self.value = value

    def __repr__(self):
        return f"Int({self.value})"

    def __eq__(self, other):
        return type(other) is Int and other.value == self.value

    def __hash__(self):
        return hash(("int", self.value))


class Var(Term):
    __slots__ = ("id", "name")

    def __init__(self, vid: int, name: str | None = None):
        self.id = vid
        self.name = name

    def __repr__(self):
        return f"Var({self.id}, {self.name!r})"

    # identity semantics: two Var objects are the same variable iff ids match
    def __eq__(self, other):
        return type(other) is Var and other.id == self.id

    def __hash__(self):
        return hash(("var", self.id))


class Struct(Term):
    __slots__ = ("name", "args")

    def __init__(self, name: str, args: tuple):
        self.name = name
        self.args = args

    def __repr__(self):
        return f"Struct({self.name!r}, {self.args!r})"

    def __eq__(self, other):
        return type(other) is Struct and other.name == self.name and other.args == self.args

    def __hash__(self):
        return hash(("struct", self.name, self.args))


TRUE = Atom("true")
FAIL = Atom("fail")
NIL = Atom("[]")
CUT = Atom("!")

# 64-bit signed integer domain for arithmetic and literals.
INT_MIN = -(2**63)
INT_MAX = 2**63 - 1

# Operator tables shared by the reader and the writer.
# type is one of xfx / xfy / yfx for infix, fy / fx for prefix.
INFIX_OPS: dict[str, tuple[int, str]] = {
    ":-": (1200, "xfx"),
    ";": (1100, "xfy"),
    "->": (1050, "xfy"),
    ",": (1000, "xfy"),
    "=": (700, "xfx"),
    "\\=": (700, "xfx"),
    "==": (700, "xfx"),
    "\\==": (700, "xfx"),
    "is": (700, "xfx"),
    "<": (700, "xfx"),
    ">": (700, "xfx"),
    "=<": (700, "xfx"),
    ">=": (700, "xfx"),
    "=:=": (700, "xfx"),
    "=\\=": (700, "xfx"),
    "+": (500, "yfx"),
    "-": (500, "yfx"),
    "*": (400, "yfx"),
    "//": (400, "yfx"),
    "mod": (400, "yfx"),
}

PREFIX_OPS: dict[str, tuple[int, str]] = {
    "\\+": (900, "fy"),
    "-": (200, "fy"),
}


def functor_key(t: Term) -> tuple[str, int] | None:
    """(name, arity) for callable terms, None for ints and variables."""
    k = type(t)
    if k is Atom:
        return (t.name, 0)
    if k is Struct:
        return (t.name, len(t.args))
    return None


def make_list(items, tail: Term = NIL) -> Term:
    out = tail
    for item in reversed(list(items)):
        out = Struct(".", (item, out))
    return out


def iter_list(t: Term):
    """Split a list term into (elements, tail).  A proper list has tail []."""
    items = []
    while type(t) is Struct and t.name == "." and len(t.args) == 2:
        items.append(t.args[0])
        t = t.args[1]
    return items, t


def collect_vars(t: Term, acc: list[Var] | None = None) -> list[Var]:
    """All variables in first-occurrence order (each id once)."""
    if acc is None:
        acc = []
    seen = {v.id for v in acc}
    stack = [t]
    while stack:
        x = stack.pop()
        k = type(x)
        if k is Var:
            if x.id not in seen:
                seen.add(x.id)
                acc.append(x)
        elif k is Struct:
            stack.extend(reversed(x.args))
    return acc


_PLAIN_ATOM_FIRST = "abcdefghijklmnopqrstuvwxyz"
_SYMBOL_CHARS = set("+-*/\\^<>=~:.?@#$&")
_SOLO_ATOMS = {"[]", "!", ";", "{}"}


def _atom_needs_quotes(name: str) -> bool:
    if name in _SOLO_ATOMS:
        return False
    if not name:
        return True
    if name[0] in _PLAIN_ATOM_FIRST:
        return not all(c.isalnum() or c == "_" for c in name)
    if all(c in _SYMBOL_CHARS for c in name):
        return False
    return True


def _quote_atom(name: str) -> str:
    body = name.replace("\\", "\\\\").replace("'", "\\'").replace("\n", "\\n").replace("\t", "\\t")
    return f"'{body}'"


def term_str(t: Term, max_prio: int = 1200) -> str:
    """Render a term in the same syntax the reader accepts."""
    k = type(t)
    if k is Atom:
        return _quote_atom(t.name) if _atom_needs_quotes(t.name) else t.name
    if k is Int:
        return str(t.value)
    if k is Var:
        return t.name if t.name else f"_G{t.id}"
    if k is not Struct:
        raise TypeError(f"not a term: {t!r}")

    if t.name == "." and len(t.args) == 2:
        items, tail = iter_list(t)
        inner = ",".join(term_str(i, 999) for i in items)
        if tail == NIL:
            return f"[{inner}]"
        return f"[{inner}|{term_str(tail, 999)}]"

    if len(t.args) == 2 and t.name in INFIX_OPS:
        prio, typ = INFIX_OPS[t.name]
        lp = prio if typ == "yfx" else prio - 1
        rp = prio if typ == "xfy" else prio - 1
        left = term_str(t.args[0], lp)
        right = term_str(t.args[1], rp)
        if t.name == ",":
            body = f"{left},{right}"
        else:
            body = f"{left} {t.name} {right}"
        return f"({body})" if prio > max_prio else body

    if len(t.args) == 1 and t.name in PREFIX_OPS:
        prio, typ = PREFIX_OPS[t.name]
        ap = prio if typ == "fy" else prio - 1
        body = f"{t.name} {term_str(t.args[0], ap)}"
        return f"({body})" if prio > max_prio else body

    fname = _quote_atom(t.name) if _atom_needs_quotes(t.name) else t.name
    return f"{fname}({','.join(term_str(a, 999) for a in t.args)})"

"""Edinburgh-syntax reader: tokenizer plus a precedence-climbing parser.

Accepts the operator set in terms.INFIX_OPS / terms.PREFIX_OPS, list
sugar, quoted atoms and % line comments.  Operators are fixed; there is
no op/3 directive.
"""

from __future__ import annotations

from rulebots.logic.errors import ParseError
from rulebots.logic.terms import (
    INFIX_OPS,
    INT_MAX,
    NIL,
    PREFIX_OPS,
    TRUE,
    Atom,
    Int,
    Struct,
    Term,
    Var,
    fresh_var,
    make_list,
)

_SYMBOL_CHARS = set("+-*/\\^<>=~:.?@#$&")
_ESCAPES = {"\\": "\\", "'": "'", "n": "\n", "t": "\t"}


class _Token:
    __slots__ = ("kind", "value", "line", "col", "glued")

    def __init__(self, kind, value, line, col, glued):
        self.kind = kind  # atom | var | int | punct | end | eof
        self.value = value
        self.line = line
        self.col = col
        self.glued = glued  # no layout between this token and the previous one

    def __repr__(self):
        return f"_Token({self.kind}, {self.value!r}, {self.line}:{self.col})"


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, line, col = 0, 1, 1
    n = len(text)
    glued = False

    def err(msg, ln, cl):
        excerpt = text.splitlines()[ln - 1] if ln - 1 < len(text.splitlines()) else ""
        raise ParseError(msg, ln, cl, excerpt.strip())

    while i < n:
        c = text[i]
        if c in " \t\r\n":
            if c == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1
            glued = False
            continue
        if c == "%":
            while i < n and text[i] != "\n":
                i += 1
            glued = False
            continue

        start_line, start_col = line, col

        if c in "()[]|,":
            tokens.append(_Token("punct", c, line, col, glued))
            i += 1
            col += 1
            glued = True
            continue

        if c in "!;":
            tokens.append(_Token("atom", c, line, col, glued))
            i += 1
            col += 1
            glued = True
            continue

        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", int(text[i:j]), line, col, glued))
            col += j - i
            i = j
            glued = True
            continue

        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = "var" if (c == "_" or c.isupper()) else "atom"
            tokens.append(_Token(kind, word, line, col, glued))
            col += j - i
            i = j
            glued = True
            continue

        if c == "'":
            j = i + 1
            buf = []
            while True:
                if j >= n:
                    err("unterminated quoted atom", start_line, start_col)
                ch = text[j]
                if ch == "'":
                    if j + 1 < n and text[j + 1] == "'":
                        buf.append("'")
                        j += 2
                        continue
                    j += 1
                    break
                if ch == "\\":
                    if j + 1 >= n or text[j + 1] not in _ESCAPES:
                        err("bad escape in quoted atom", line, col)
                    buf.append(_ESCAPES[text[j + 1]])
                    j += 2
                    continue
                if ch == "\n":
                    err("newline in quoted atom", start_line, start_col)
                buf.append(ch)
                j += 1
            tokens.append(_Token("atom", "".join(buf), line, col, glued))
            col += j - i
            i = j
            glued = True
            continue

        if c in _SYMBOL_CHARS:
            # A dot followed by layout, a comment or EOF ends the clause.
            if c == ".":
                nxt = text[i + 1] if i + 1 < n else ""
                if nxt == "" or nxt in " \t\r\n%":
                    tokens.append(_Token("end", ".", line, col, glued))
                    i += 1
                    col += 1
                    glued = False
                    continue
            j = i
            while j < n and text[j] in _SYMBOL_CHARS:
                if text[j] == ".":
                    nxt = text[j + 1] if j + 1 < n else ""
                    if j > i and (nxt == "" or nxt in " \t\r\n%"):
                        break
                j += 1
            tokens.append(_Token("atom", text[i:j], line, col, glued))
            col += j - i
            i = j
            glued = True
            continue

        err(f"unexpected character {c!r}", line, col)

    tokens.append(_Token("eof", None, line, col, False))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.lines = text.splitlines()
        self.tokens = _tokenize(text)
        self.pos = 0
        self.varmap: dict[str, Var] = {}

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def fail(self, msg: str, tok: _Token):
        excerpt = self.lines[tok.line - 1].strip() if tok.line - 1 < len(self.lines) else ""
        raise ParseError(msg, tok.line, tok.col, excerpt)

    def expect_punct(self, which: str):
        t = self.next()
        if t.kind != "punct" or t.value != which:
            self.fail(f"expected {which!r}", t)

    def reset_vars(self):
        self.varmap = {}

    def _mkvar(self, name: str) -> Var:
        if name == "_":
            return fresh_var("_")
        v = self.varmap.get(name)
        if v is None:
            v = fresh_var(name)
            self.varmap[name] = v
        return v

    def _starts_term(self, t: _Token) -> bool:
        if t.kind in ("int", "var", "atom"):
            return True
        return t.kind == "punct" and t.value in ("(", "[")

    def parse(self, max_prio: int) -> Term:
        left, left_prio = self.parse_primary(max_prio)
        while True:
            t = self.peek()
            opname = None
            if t.kind == "atom" and t.value in INFIX_OPS:
                opname = t.value
            elif t.kind == "punct" and t.value == ",":
                opname = ","
            if opname is None:
                return left
            prio, typ = INFIX_OPS[opname]
            if prio > max_prio:
                return left
            left_allow = prio if typ == "yfx" else prio - 1
            if left_prio > left_allow:
                return left
            self.next()
            right_allow = prio if typ == "xfy" else prio - 1
            right = self.parse(right_allow)
            left = Struct(opname, (left, right))
            left_prio = prio

    def parse_primary(self, max_prio: int) -> tuple[Term, int]:
        t = self.next()
        if t.kind == "int":
            if t.value > INT_MAX:
                self.fail("integer literal out of 64-bit range", t)
            return Int(t.value), 0
        if t.kind == "var":
            return self._mkvar(t.value), 0
        if t.kind == "punct":
            if t.value == "(":
                inner = self.parse(1200)
                self.expect_punct(")")
                return inner, 0
            if t.value == "[":
                return self.parse_list(), 0
            self.fail(f"unexpected {t.value!r}", t)
        if t.kind == "atom":
            name = t.value
            nxt = self.peek()
            if nxt.kind == "punct" and nxt.value == "(" and nxt.glued:
                self.next()
                args = [self.parse(999)]
                while True:
                    p = self.next()
                    if p.kind == "punct" and p.value == ",":
                        args.append(self.parse(999))
                        continue
                    if p.kind == "punct" and p.value == ")":
                        break
                    self.fail("expected ',' or ')' in argument list", p)
                return Struct(name, tuple(args)), 0
            if name in PREFIX_OPS and self._starts_term(nxt):
                prio, typ = PREFIX_OPS[name]
                if prio <= max_prio:
                    if name == "-" and nxt.kind == "int":
                        self.next()
                        return Int(-nxt.value), 0
                    arg_allow = prio if typ == "fy" else prio - 1
                    arg = self.parse(arg_allow)
                    return Struct(name, (arg,)), prio
            return Atom(name), 0
        self.fail("unexpected end of input" if t.kind == "eof" else f"unexpected {t.value!r}", t)

    def parse_list(self) -> Term:
        t = self.peek()
        if t.kind == "punct" and t.value == "]":
            self.next()
            return NIL
        items = [self.parse(999)]
        while True:
            p = self.next()
            if p.kind == "punct" and p.value == ",":
                items.append(self.parse(999))
                continue
            if p.kind == "punct" and p.value == "|":
                tail = self.parse(999)
                self.expect_punct("]")
                return make_list(items, tail)
            if p.kind == "punct" and p.value == "]":
                return make_list(items)
            self.fail("expected ',', '|' or ']' in list", p)


def read_term(text: str) -> tuple[Term, dict[str, Var]]:
    """Parse one term.  Returns the term and the named-variable map."""
    p = _Parser(text)
    term = p.parse(1200)
    t = p.peek()
    if t.kind == "end":
        p.next()
        t = p.peek()
    if t.kind != "eof":
        p.fail("unexpected trailing input", t)
    return term, dict(p.varmap)


def split_clause(term: Term) -> tuple[Term, Term]:
    """Split a read term into (head, body); a fact gets body true."""
    if type(term) is Struct and term.name == ":-" and len(term.args) == 2:
        return term.args[0], term.args[1]
    return term, TRUE


def read_program(text: str) -> list[tuple[Term, Term]]:
    """Parse a clause sequence.  Returns (head, body) pairs in source order."""
    p = _Parser(text)
    clauses: list[tuple[Term, Term]] = []
    while True:
        t = p.peek()
        if t.kind == "eof":
            return clauses
        p.reset_vars()
        term = p.parse(1200)
        endtok = p.next()
        if endtok.kind != "end":
            p.fail("expected '.' at end of clause", endtok)
        head, body = split_clause(term)
        if type(head) not in (Atom, Struct):
            p.fail("clause head must be an atom or compound", t)
        clauses.append((head, body))

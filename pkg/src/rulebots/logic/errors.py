"""Error hierarchy for the logic engine.

Every condition the engine can signal is a LogicError subclass, so host
code can catch the whole family or pick specific conditions apart.
"""

from __future__ import annotations


class LogicError(Exception):
    pass


class ParseError(LogicError):
    def __init__(self, message: str, line: int, col: int, excerpt: str = ""):
        self.line = line
        self.col = col
        self.excerpt = excerpt
        detail = f"{message} at line {line}, column {col}"
        if excerpt:
            detail += f"\n  {excerpt}"
        super().__init__(detail)


class ExistenceError(LogicError):
    def __init__(self, name: str, arity: int):
        self.name = name
        self.arity = arity
        super().__init__(f"unknown predicate {name}/{arity}")


class InstantiationError(LogicError):
    def __init__(self, message: str = "unbound variable where a bound term is required"):
        super().__init__(message)


class TermTypeError(LogicError):
    def __init__(self, expected: str, got):
        self.expected = expected
        self.got = got
        super().__init__(f"expected {expected}, got {got!r}")


class NotPermittedError(LogicError):
    def __init__(self, message: str):
        super().__init__(message)


class EvaluationError(LogicError):
    def __init__(self, message: str):
        super().__init__(message)


class BudgetExceededError(LogicError):
    def __init__(self, message: str):
        super().__init__(message)

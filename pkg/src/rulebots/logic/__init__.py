"""Embeddable Prolog-subset engine.

Terms, an Edinburgh-syntax reader, a clause store with a logical update
view, and a depth-first resolution engine with cut, negation as failure,
findall and integer arithmetic.  Host code extends it by registering
native predicates.
"""

from rulebots.logic.terms import (
    Atom,
    Int,
    Var,
    Struct,
    Term,
    collect_vars,
    fresh_var,
    make_list,
    iter_list,
    term_str,
)
from rulebots.logic.errors import (
    LogicError,
    ParseError,
    ExistenceError,
    InstantiationError,
    TermTypeError,
    NotPermittedError,
    EvaluationError,
    BudgetExceededError,
)
from rulebots.logic.reader import read_term, read_program
from rulebots.logic.database import KnowledgeBase, StoredClause
from rulebots.logic.solver import Engine, SolutionStream, unify_terms

__all__ = [
    "Atom",
    "Int",
    "Var",
    "Struct",
    "Term",
    "collect_vars",
    "fresh_var",
    "make_list",
    "iter_list",
    "term_str",
    "LogicError",
    "ParseError",
    "ExistenceError",
    "InstantiationError",
    "TermTypeError",
    "NotPermittedError",
    "EvaluationError",
    "BudgetExceededError",
    "read_term",
    "read_program",
    "KnowledgeBase",
    "StoredClause",
    "Engine",
    "SolutionStream",
    "unify_terms",
]

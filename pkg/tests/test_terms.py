"""Term model and rendering."""

import pytest

from rulebots.logic import (
    Atom,
    Int,
    Struct,
    Var,
    collect_vars,
    fresh_var,
    iter_list,
    make_list,
    term_str,
)
from rulebots.logic.terms import functor_key


def test_atoms_compare_by_name():
    assert Atom("foo") == Atom("foo")
    assert Atom("foo") != Atom("bar")
    assert Atom("foo") != Int(1)


def test_fresh_vars_are_distinct():
    a, b = fresh_var("X"), fresh_var("X")
    assert a.id != b.id
    assert a != b


def test_functor_key():
    assert functor_key(Atom("go")) == ("go", 0)
    assert functor_key(Struct("f", (Int(1), Int(2)))) == ("f", 2)
    assert functor_key(Int(3)) is None
    assert functor_key(fresh_var()) is None


def test_make_and_iter_list_round_trip():
    items = [Int(1), Atom("two"), Struct("f", (Int(3),))]
    lst = make_list(items)
    back, tail = iter_list(lst)
    assert back == items
    assert tail == Atom("[]")


def test_iter_list_partial():
    v = fresh_var("T")
    lst = make_list([Int(1)], tail=v)
    items, tail = iter_list(lst)
    assert items == [Int(1)]
    assert tail is v


def test_collect_vars_in_order():
    x, y = fresh_var("X"), fresh_var("Y")
    t = Struct("f", (x, Struct("g", (y, x))))
    assert collect_vars(t) == [x, y]


@pytest.mark.parametrize(
    "term,text",
    [
        (Atom("foo"), "foo"),
        (Atom("hello world"), "'hello world'"),
        (Atom("[]"), "[]"),
        (Int(-7), "-7"),
        (Struct("f", (Int(1), Atom("a"))), "f(1,a)"),
        (make_list([Int(1), Int(2)]), "[1,2]"),
        (Struct(",", (Atom("a"), Atom("b"))), "a,b"),
        (Struct(":-", (Atom("h"), Atom("b"))), "h :- b"),
        (Struct("=", (Int(1), Int(2))), "1 = 2"),
    ],
)
def test_term_str(term, text):
    assert term_str(term) == text


def test_term_str_parenthesizes_operators():
    # (a ; b), c needs parentheses to survive a reparse
    t = Struct(",", (Struct(";", (Atom("a"), Atom("b"))), Atom("c")))
    assert term_str(t) == "(a ; b),c"


def test_term_str_partial_list():
    lst = make_list([Int(1)], tail=fresh_var("T"))
    assert term_str(lst) == "[1|T]"

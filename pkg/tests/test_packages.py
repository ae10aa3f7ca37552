"""Rule package manifests, stack loading, and static validation."""

import pytest

from rulebots.rules import PackageError, load_package, load_stack, parse_manifest
from rulebots.rules.manifest import RulePackage
from rulebots.rules.validator import validate_stack


def pkg(name, level, text, entries=(), dynamics=()):
    return RulePackage(name, level, text, tuple(entries), tuple(dynamics))


GAME = pkg(
    "game_core",
    "game",
    "do_reasoning(_).\n",
    entries=[("do_reasoning", 1)],
)


# -- manifest parsing ---------------------------------------------------


def test_parse_manifest_full_record():
    manifest = """
    # tactical add-on
    package demo
    level map_type
    file demo.pl   # rules live next door
    entry pick_target/2
    dynamic seen/1
    dynamic seen/2
    """
    p = parse_manifest(manifest, lambda rel: f"% from {rel}\n")
    assert p.name == "demo"
    assert p.level == "map_type"
    assert p.text == "% from demo.pl\n"
    assert p.entries == (("pick_target", 2),)
    assert p.dynamics == (("seen", 1), ("seen", 2))


@pytest.mark.parametrize(
    "manifest,fragment",
    [
        ("level game\nfile a.pl", "no package record"),
        ("package p\nfile a.pl", "no level record"),
        ("package p\nlevel game", "no file record"),
        ("package p\nlevel boss\nfile a.pl", "unknown level"),
        ("package p\ncolour red\nlevel game\nfile a.pl", "unknown key"),
        ("package p\nlevel game\nfile a.pl\nentry nop", "expected name/arity"),
        ("package p\nlevel game\nfile a.pl\nentry f/x", "bad arity"),
        ("package p\nlevel game\nfile a.pl\ndynamic f/-1", "negative arity"),
        ("package\nlevel game\nfile a.pl", "expected '<key> <value>'"),
    ],
)
def test_parse_manifest_rejects(manifest, fragment):
    with pytest.raises(PackageError, match=fragment):
        parse_manifest(manifest, lambda rel: "")


# -- loading ------------------------------------------------------------


def test_bundled_packages_load():
    levels = {name: load_package(name).level for name in ("baseline", "cs_rules", "warehouse_tactics")}
    assert levels == {
        "baseline": "game",
        "cs_rules": "map_type",
        "warehouse_tactics": "map_specific",
    }


def test_unknown_bundled_package():
    with pytest.raises(PackageError, match="no such package"):
        load_package("no_such_thing")


def test_load_package_from_path(tmp_path):
    (tmp_path / "demo.mf").write_text(
        "package demo\nlevel game\nfile demo.pl\nentry do_reasoning/1\n"
    )
    (tmp_path / "demo.pl").write_text("do_reasoning(_).\n")
    p = load_package(str(tmp_path / "demo.mf"))
    assert p.name == "demo"
    assert "do_reasoning" in p.text


def test_load_stack_orders_and_validates():
    names = [p.name for p in load_stack(["baseline", "cs_rules", "warehouse_tactics"])]
    assert names == ["baseline", "cs_rules", "warehouse_tactics"]
    with pytest.raises(PackageError, match="must be game level"):
        load_stack(["cs_rules"])
    with pytest.raises(PackageError, match="ordered"):
        load_stack(["baseline", "warehouse_tactics", "cs_rules"])
    with pytest.raises(PackageError, match="more than one game-level"):
        load_stack(["baseline", "baseline"])


# -- static validation --------------------------------------------------


def test_validate_empty_stack():
    errors, _ = validate_stack([])
    assert errors == ["stack is empty"]


def test_validate_undefined_call():
    bad = pkg("addon", "map_type", "pick(X) :- ghost(X).\n", entries=[("pick", 1)])
    errors, _ = validate_stack([GAME, bad])
    assert any("undefined ghost/1" in e for e in errors)


def test_validate_wrong_arity_call():
    bad = pkg("addon", "map_type", "pick(X) :- do_reasoning(X, 1).\n", entries=[("pick", 1)])
    errors, _ = validate_stack([GAME, bad])
    assert any("do_reasoning/2 called but do_reasoning exists with arity 1" in e for e in errors)


def test_validate_missing_entry_definition():
    bad = pkg("addon", "map_type", "other(1).\n", entries=[("pick", 1)])
    errors, _ = validate_stack([GAME, bad])
    assert any("entry pick/1 is not defined" in e for e in errors)


def test_validate_entry_satisfied_by_dynamic():
    ok = pkg("addon", "map_type", "% facts arrive at runtime\n", entries=[("seen", 1)], dynamics=[("seen", 1)])
    errors, _ = validate_stack([GAME, ok])
    assert errors == []


def test_validate_game_needs_reasoning_entry():
    bare = pkg("core", "game", "do_reasoning(_).\n")
    errors, _ = validate_stack([bare])
    assert any("must declare entry do_reasoning/1" in e for e in errors)


def test_validate_undeclared_assert_is_warning():
    chatty = pkg(
        "addon",
        "map_type",
        "note(X) :- assertz(memo(X)).\n",
        entries=[("note", 1)],
    )
    errors, warnings = validate_stack([GAME, chatty])
    assert errors == []
    assert any("asserts memo/1" in w for w in warnings)


def test_validate_declared_assert_is_clean():
    tidy = pkg(
        "addon",
        "map_type",
        "note(X) :- assertz(memo(X)).\n",
        entries=[("note", 1)],
        dynamics=[("memo", 1)],
    )
    errors, warnings = validate_stack([GAME, tidy])
    assert errors == []
    assert warnings == []


def test_validate_unparseable_package():
    broken = pkg("addon", "map_type", "pick(X :- .\n", entries=[("pick", 1)])
    errors, _ = validate_stack([GAME, broken])
    assert any(e.startswith("package addon:") for e in errors)


def test_shipped_stack_validates_clean():
    stack = load_stack(["baseline", "cs_rules", "warehouse_tactics"])
    errors, warnings = validate_stack(stack)
    assert errors == []
    assert warnings == []

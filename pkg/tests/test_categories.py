import pytest
from hypothesis import given
from hypothesis import strategies as st

from termforge import (Constraint, DataCategory, Level, ParseError, TermforgeError,
                       builtin_registry, check_binding, parse_registry, picklist,
                       register_category)
from termforge.categories import format_registry, load_registry
from termforge.samples import data_path

PEDAGOGICAL = DataCategory("pedagogicalLevel", {Level.TE}, picklist("primary", "secondary", "tertiary"))


def test_register_extends():
    reg = register_category(builtin_registry(), PEDAGOGICAL)
    assert "pedagogicalLevel" in reg
    assert "pedagogicalLevel" not in builtin_registry()
    assert check_binding(reg, Level.TE, "pedagogicalLevel", "tertiary") is None


def test_shadowing_builtin():
    with pytest.raises(TermforgeError) as exc:
        register_category(builtin_registry(), DataCategory("definition", {Level.TE}))
    assert exc.value.code == "SHADOWS_BUILTIN"


def test_register_twice():
    reg = register_category(builtin_registry(), PEDAGOGICAL)
    with pytest.raises(TermforgeError) as exc:
        register_category(reg, PEDAGOGICAL)
    assert exc.value.code == "DUPLICATE_KEY"


@pytest.mark.parametrize("level,key,value,code", [
    (Level.TL, "gender", "feminine", None),
    (Level.TE, "gender", "feminine", "BAD_LEVEL"),
    (Level.TL, "partOfSpeech", "interjection", "BAD_VALUE"),
    (Level.TL, "colour", "red", "UNKNOWN_CATEGORY"),
    (Level.GI, "source", "ISO 704", None),
    (Level.CI, "note", "anything", None),
    (Level.LS, "definition", "text", None),
    ("TL", "termType", "acronym", None),
])
def test_check_binding(level, key, value, code):
    found = check_binding(builtin_registry(), level, key, value, "p")
    assert (found.code if found else None) == code
    if found:
        assert found.severity == "error" and found.path == "p"


@pytest.mark.parametrize("constraint,good,bad", [
    (Constraint("free-text"), "anything at all", None),
    (Constraint("language-tag"), "pt-BR", "Portuguese"),
    (Constraint("identifier-ref"), "c-pencil", "9x"),
    (picklist("a", "b"), "a", "c"),
])
def test_constraint_kinds(constraint, good, bad):
    assert constraint.accepts(good)
    if bad is not None:
        assert not constraint.accepts(bad)


@pytest.mark.parametrize("args", [("colour",), ("picklist",), ("picklist", ("a", "a")),
                                  ("free-text", ("x",))])
def test_bad_constraints(args):
    with pytest.raises(TermforgeError):
        Constraint(*args)


def test_category_needs_level():
    with pytest.raises(TermforgeError):
        DataCategory("x", set())


def test_registry_file_roundtrip():
    text = "# comment\npedagogicalLevel\tTE\tpicklist:primary|secondary|tertiary\nregion\tLS,TL\tlanguage-tag\n"
    reg = parse_registry(text)
    assert reg["region"].levels == {Level.LS, Level.TL}
    assert parse_registry(format_registry(reg)).keys() == reg.keys()


@pytest.mark.parametrize("text,code,line", [
    ("x\tTE\n", "SYNTAX", 1),
    ("\nnote\tTE\tfree-text\n", "SHADOWS_BUILTIN", 2),
    ("x\tQQ\tfree-text\n", "SYNTAX", 1),
    ("x\tTE\tweird\n", "BAD_CONSTRAINT", 1),
])
def test_registry_file_errors(text, code, line):
    with pytest.raises(ParseError) as exc:
        parse_registry(text)
    assert (exc.value.code, exc.value.line) == (code, line)


def test_shipped_registry():
    reg = load_registry(data_path("elearning.registry"))
    assert check_binding(reg, Level.TE, "pedagogicalLevel", "secondary") is None
    assert check_binding(reg, Level.TE, "pedagogicalLevel", "doctoral").code == "BAD_VALUE"


@given(st.sampled_from(list(Level)), st.sampled_from(["primary", "secondary", "tertiary"]))
def test_open_catalog_roundtrip(level, value):
    cat = DataCategory("pedagogicalLevel", {level}, picklist("primary", "secondary", "tertiary"))
    reg = register_category(builtin_registry(), cat)
    assert check_binding(reg, level, "pedagogicalLevel", value) is None
    others = [lv for lv in Level if lv != level]
    assert all(check_binding(reg, lv, "pedagogicalLevel", value).code == "BAD_LEVEL" for lv in others)

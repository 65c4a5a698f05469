import pytest
from hypothesis import given

from gen import models
from termforge import (ConceptGraph, GlobalInfo, LanguageSection, ParseError, TermCollection,
                       TermLevel, TerminologicalEntry, TermforgeError, canonicalize, emit_gmt,
                       new_collection, parse_gmt, samples)
from termforge.termbase import Termbase

MINIMAL = b'<tdc id="t">\n  <gi>\n    <feat cat="title"></feat>\n  </gi>\n</tdc>\n'


def test_minimal_document():
    assert emit_gmt(new_collection("t")) == MINIMAL
    tb = parse_gmt(MINIMAL)
    assert tb.collection == new_collection("t") and len(tb.graph) == 0


def test_entries_sorted_by_id(writing):
    text = emit_gmt(*writing).decode()
    ids = [line.split('"')[1] for line in text.splitlines() if line.startswith("  <te ")]
    assert ids == sorted(te.id for te in writing.collection.entries)
    assert ids[0] == "c-barrel"


def test_rels_after_entries_and_sorted(writing):
    lines = emit_gmt(*writing).decode().splitlines()
    rels = [i for i, line in enumerate(lines) if line.startswith("  <rel ")]
    last_te = max(i for i, line in enumerate(lines) if line == "  </te>")
    assert rels and min(rels) > last_te
    assert lines[rels[0]] == '  <rel kind="associative" from="c-lead" to="c-graphite" subkind="material-source"/>'


def test_escaping():
    te = TerminologicalEntry("c-a", (LanguageSection("en", (TermLevel('R&D <x> "q"'),)),))
    coll = TermCollection("t", GlobalInfo("a & b"), (te,))
    data = emit_gmt(coll)
    assert b"R&amp;D &lt;x&gt; &quot;q&quot;" in data and b"a &amp; b" in data
    assert parse_gmt(data).collection == coll


def test_term_feature_first_and_components():
    tb = samples.build_writing_instruments()
    text = emit_gmt(*tb).decode()
    block = text[text.index('<te id="c-mech-pencil">'):]
    assert ('<feat cat="term">porte-mine</feat>\n'
            '        <feat cat="gender">masculine</feat>') in block
    assert '<tcl idx="1" text="porte"/>' in block


def test_sample_roundtrip(writing):
    data = emit_gmt(*writing)
    tb = parse_gmt(data)
    assert tb.collection == canonicalize(writing.collection)
    assert tb.graph == writing.graph.canonical()
    assert emit_gmt(*tb) == data


def test_shipped_files_match_builders():
    for name, build in samples.BUILDERS.items():
        assert samples.data_path(f"{name}.gmt").read_bytes() == emit_gmt(*build()), name


def test_non_canonical_input_accepted():
    messy = ('<?xml version="1.0" encoding="UTF-8"?>\n<tdc   id="t"><gi><feat cat="title">T</feat></gi>'
             '<te id="c-b"><ls lang="fr"><tl><feat cat="partOfSpeech">noun</feat>'
             '<feat cat="term">b</feat></tl></ls></te>'
             '<te id="c-a"><ls lang="en"><tl><feat cat="term">a</feat>'
             '<tcl text="a" idx="1"/></tl></ls></te>'
             '<rel to="c-b" kind="generic" from="c-a"/></tdc>')
    tb = parse_gmt(messy)
    assert [te.id for te in tb.collection.entries] == ["c-b", "c-a"]
    out = emit_gmt(*tb)
    assert out == emit_gmt(*parse_gmt(out))
    assert out.index(b'"c-a"') < out.index(b'"c-b"')


@pytest.mark.parametrize("doc,code", [
    ('<tdc id="t"><gi/><te id="c-a"><tl><feat cat="term">x</feat></tl></te></tdc>', "BAD_NESTING"),
    ('<tdc id="t"><gi/><te id="c-a"><ls lang="en"><tl><feat cat="term">x</feat></tl></ls>', "SYNTAX"),
    ('<tdc id="t"><gi/><foo/></tdc>', "UNKNOWN_ELEMENT"),
    ('<tdc id="t" x="1"><gi/></tdc>', "UNKNOWN_ATTRIBUTE"),
    ('<tdc><gi/></tdc>', "SYNTAX"),
    ('<tdc id="t"><gi/><te id="c-a"><ls lang="en"><tl><feat cat="gender">x</feat></tl></ls></te></tdc>',
     "SYNTAX"),
    ('<tdc id="t"><gi/><gi/></tdc>', "BAD_NESTING"),
    ('<tdc id="t"><gi/><te id="c-a"><ls lang="en"><tl><feat cat="term">x</feat></tl></ls></te>'
     '<te id="c-a"><ls lang="en"><tl><feat cat="term">y</feat></tl></ls></te></tdc>', "DUPLICATE_ID"),
    ('<tdc id="t"><gi>stray</gi></tdc>', "SYNTAX"),
])
def test_parse_errors(doc, code):
    with pytest.raises(ParseError) as exc:
        parse_gmt(doc)
    assert exc.value.code == code


def test_truncated_reports_position():
    data = emit_gmt(*samples.build_writing_instruments())[:300]
    with pytest.raises(ParseError) as exc:
        parse_gmt(data)
    assert exc.value.code == "SYNTAX"
    assert exc.value.line is not None and exc.value.column is not None


def test_invalid_model_not_emitted():
    coll = TermCollection("t", entries=(TerminologicalEntry("c-a"),))
    with pytest.raises(TermforgeError) as exc:
        emit_gmt(coll)
    assert exc.value.code == "INVALID_MODEL"


@given(models())
def test_roundtrip(m):
    coll, graph = m
    data = emit_gmt(coll, graph)
    tb = parse_gmt(data)
    assert tb == Termbase(canonicalize(coll), graph.canonical())
    assert emit_gmt(*tb) == data


@given(models())
def test_emission_ignores_input_order(m):
    coll, graph = m
    shuffled = TermCollection(coll.id, coll.gi, tuple(reversed(coll.entries)), coll.ci)
    assert emit_gmt(shuffled, ConceptGraph(tuple(reversed(graph.edges)))) == emit_gmt(coll, graph)

import pytest
from hypothesis import assume, given

from gen import models
from termforge import (ConceptGraph, LanguageSection, MergePolicy, TermCollection, TermforgeError,
                       TermLevel, TerminologicalEntry, align_concepts, canonicalize, generic,
                       lookup_terms, merge, validate)
from termforge.merge import Alignment
from termforge.termbase import Termbase

EMPTY = Termbase(TermCollection("empty"))


def coll(*entries, cid="t"):
    return TermCollection(cid, entries=tuple(entries))


def te(eid, lang, *terms, **feats):
    return TerminologicalEntry(eid, (LanguageSection(lang, tuple(TermLevel(t) for t in terms)),),
                               feats)


class TestAlign:
    def test_id_match(self):
        assert align_concepts(coll(te("c-1", "en", "a")), coll(te("c-1", "fr", "b")),
                              MergePolicy()) == [Alignment("c-1", "c-1", ("id-match",))]

    def test_shared_term(self):
        pairs = align_concepts(coll(te("c-x", "fr", "crayon")), coll(te("c-y", "fr", "crayon")),
                               MergePolicy("by-shared-term", langs={"fr"}))
        assert pairs == [Alignment("c-x", "c-y", ('shared:"crayon"@fr',))]

    def test_disjoint(self):
        assert align_concepts(coll(te("c-1", "en", "a")), coll(te("c-2", "en", "b")),
                              MergePolicy()) == []

    def test_shared_term_is_one_to_one_and_greedy(self):
        a = coll(te("a1", "en", "x"), te("a2", "en", "x", "y"))
        b = coll(te("b1", "en", "x", "y"), te("b2", "en", "x"))
        pairs = align_concepts(a, b, MergePolicy("by-shared-term", langs={"en"}))
        assert [(p.left, p.right) for p in pairs] == [("a1", "b2"), ("a2", "b1")]

    def test_shared_term_respects_langs(self):
        pairs = align_concepts(coll(te("c-x", "en", "pen")), coll(te("c-y", "en", "pen")),
                               MergePolicy("by-shared-term", langs={"fr"}))
        assert pairs == []

    @pytest.mark.parametrize("kwargs", [dict(identity="by-shared-term"), dict(identity="fuzzy"),
                                        dict(on_conflict="coin-flip")])
    def test_bad_policy(self, kwargs):
        with pytest.raises(TermforgeError) as exc:
            MergePolicy(**kwargs)
        assert exc.value.code == "BAD_POLICY"


class TestMerge:
    def test_identity(self, writing):
        out, graph, report = merge(writing, EMPTY)
        assert out == canonicalize(writing.collection) and graph == writing.graph.canonical()
        assert report.lines() == []
        assert merge(EMPTY, writing)[:2] == (out, graph)

    def test_language_sections_unite(self):
        out, _, report = merge(coll(te("c-1", "en", "pencil")), coll(te("c-1", "fr", "crayon")))
        assert validate(out).ok
        assert [t.term for t in lookup_terms(out, "c-1", "en")] == ["pencil"]
        assert [t.term for t in lookup_terms(out, "c-1", "fr")] == ["crayon"]
        assert report.lines() == ["MATCH\tc-1\tc-1\tid-match"]

    def test_voiture_homonym(self):
        a = coll(te("c-car", "fr", "voiture", subjectDomain="road transport"))
        b = coll(te("c-rail-coach", "fr", "voiture", subjectDomain="rail transport"))
        out, _, report = merge(a, b)
        assert len(out) == 2
        assert report.new_homonyms == (("voiture", "fr", ("c-car", "c-rail-coach")),)
        assert "HOMONYM\tvoiture\tfr\tc-car,c-rail-coach" in report.lines()

    @pytest.mark.parametrize("policy,kept,resolution", [
        ("prefer-left", "road", "kept-left"),
        ("prefer-right", "rail", "kept-right"),
        ("report-only", "road", "reported-kept-left"),
    ])
    def test_conflicts(self, policy, kept, resolution):
        a = coll(te("c-1", "fr", "voiture", subjectDomain="road"))
        b = coll(te("c-1", "fr", "voiture", subjectDomain="rail"))
        out, _, report = merge(a, b, MergePolicy(on_conflict=policy))
        assert out.entries[0].feature("subjectDomain") == kept
        (c,) = report.conflicts
        assert (c.path, c.key, c.left, c.right, c.resolution) == (
            "te:c-1", "subjectDomain", "road", "rail", resolution)

    def test_collision_suffix(self):
        a = coll(te("c-1", "en", "pen"))
        b = coll(te("c-1", "en", "quill"))
        out, _, report = merge(a, b, MergePolicy("by-shared-term", langs={"en"}))
        assert [e.id for e in out.entries] == ["c-1", "c-1~b"]
        assert report.renamed == (("c-1", "c-1~b"),)
        assert validate(out).ok

    def test_reversed_edge_dropped(self):
        a = Termbase(coll(te("a", "en", "x"), te("b", "en", "y")), ConceptGraph((generic("a", "b"),)))
        b = Termbase(coll(te("a", "en", "x"), te("b", "en", "y")), ConceptGraph((generic("b", "a"),)))
        out, graph, report = merge(a, b)
        assert graph.edges == (generic("a", "b"),)
        assert report.dropped_edges == (("rel:generic:b:a", "CYCLE"),)
        assert validate(out, graph).ok

    def test_edges_follow_alignment(self):
        a = Termbase(coll(te("c-x", "fr", "crayon"), te("c-wi", "fr", "instrument")))
        b = Termbase(coll(te("c-y", "fr", "crayon"), te("c-top", "fr", "instrument d'écriture")),
                     ConceptGraph((generic("c-top", "c-y"),)))
        _, graph, _ = merge(a, b, MergePolicy("by-shared-term", langs={"fr"}))
        assert graph.edges == (generic("c-top", "c-x"),)

    def test_invalid_input_rejected(self):
        bad = coll(TerminologicalEntry("c-1"))
        with pytest.raises(TermforgeError) as exc:
            merge(bad, coll(te("c-2", "en", "a")))
        assert exc.value.code == "INVALID_INPUT"


@given(models())
def test_empty_is_identity(m):
    # two bare termbases differ only in id; the left one is kept
    assume(m[0].entries or m[0].gi.title or m[0].gi.source or m[0].ci.notes)
    expected = canonicalize(m[0]), m[1].canonical()
    assert merge(m, EMPTY)[:2] == expected
    assert merge(EMPTY, m)[:2] == expected


@given(models())
def test_self_merge(m):
    out, graph, report = merge(m, m)
    assert out == canonicalize(m[0]) and graph == m[1].canonical()
    assert report.conflicts == () and report.dropped_edges == ()


@given(models(max_entries=6), models(max_entries=6))
def test_merge_output_valid_and_bounded(x, y):
    for policy in (MergePolicy(), MergePolicy("by-shared-term", langs={"en", "fr"})):
        out, graph, _ = merge(x, y, policy)
        assert validate(out, graph).ok
        pairs = align_concepts(canonicalize(x[0]), canonicalize(y[0]), policy)
        assert len(out) <= len(x[0]) + len(y[0])
        assert (len(out) == len(x[0]) + len(y[0])) == (not pairs)

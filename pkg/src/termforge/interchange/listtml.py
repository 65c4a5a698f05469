"""listtml: flat, record-per-concept text dialect.

::

    # comment
    collection elearn-vocab
    meta title :: e-Learning vocabulary

    concept c-elearning
      feat subjectDomain :: education
      def en :: learning supported by electronic media
      term en :: e-learning :: partOfSpeech=noun :: source=ISO 2382-36
      rel generic c-blended-learning

Records are separated by blank lines.  Terms carry their features as
``key=value`` fields after the term string.  Components, notes, GI beyond the
title, and CI cannot be written.
"""

from __future__ import annotations

from ..errors import ParseError, TermforgeError
from ..graph import ConceptGraph, ConceptRelation, RelationKind
from ..model import (GlobalInfo, LanguageSection, TermCollection, TermLevel,
                     TerminologicalEntry, is_lang_tag)
from ..termbase import Termbase
from .loss import Coverage
from .text import SEP, escape, split_fields

COVERAGE = Coverage(
    name="listtml",
    categories=frozenset({"definition", "subjectDomain", "partOfSpeech", "gender",
                          "number", "termType", "source"}),
    components=False,
    gi_source=False,
)
DEFAULT_ID = "untitled"


class _Entry:
    def __init__(self, eid, line):
        self.id = eid
        self.line = line
        self.features = []
        self.sections = {}  # lang -> [definition or None, terms]

    def section(self, lang):
        return self.sections.setdefault(lang, [None, []])

    def build(self):
        sections = []
        for lang, (definition, terms) in self.sections.items():
            feats = (("definition", definition),) if definition is not None else ()
            sections.append(LanguageSection(lang, tuple(terms), feats))
        return TerminologicalEntry(self.id, tuple(sections), tuple(self.features))


def _lang(token, lineno):
    if not is_lang_tag(token):
        raise ParseError("BAD_LANG_TAG", f"{token!r} is not a language tag", lineno)
    return token


def _covered(key, lineno):
    if key not in COVERAGE.categories:
        raise ParseError("UNKNOWN_CATEGORY", f"{key!r} is not carried by listtml", lineno)


def parse_listtml(data) -> Termbase:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    coll_id, title = None, ""
    entries, order = {}, []
    edges = []
    current = None
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.rstrip("\r")
        if not line.strip():
            current = None
            continue
        if line.lstrip().startswith("#"):
            continue
        if line[0] not in " \t":
            head, _, rest = line.partition(" ")
            if head == "concept":
                eid = rest.strip()
                if not eid or " " in eid:
                    raise ParseError("SYNTAX", "expected 'concept <id>'", lineno)
                if eid in entries:
                    raise ParseError("DUPLICATE_ID", f"concept {eid!r} repeated", lineno)
                current = entries[eid] = _Entry(eid, lineno)
                order.append(eid)
            elif head == "collection":
                if coll_id is not None or order:
                    raise ParseError("SYNTAX", "collection header must come first, once", lineno)
                coll_id = rest.strip()
                if not coll_id or " " in coll_id:
                    raise ParseError("SYNTAX", "expected 'collection <id>'", lineno)
            elif head == "meta":
                fields = split_fields(rest, lineno)
                if len(fields) != 2 or not fields[0]:
                    raise ParseError("SYNTAX", "expected 'meta <key> :: <text>'", lineno)
                if fields[0] != "title":
                    raise ParseError("UNKNOWN_CATEGORY", f"meta {fields[0]!r} is not carried by listtml", lineno)
                title = fields[1]
            else:
                raise ParseError("SYNTAX", f"unexpected line {line!r}", lineno)
            continue
        if current is None:
            raise ParseError("SYNTAX", "indented line outside a concept record", lineno)
        _parse_body(current, line.strip(), lineno, edges)
    coll = TermCollection(coll_id or DEFAULT_ID, GlobalInfo(title),
                          tuple(entries[e].build() for e in order))
    return Termbase(coll, ConceptGraph(tuple(edges)))


def _parse_body(entry, body, lineno, edges):
    head, _, rest = body.partition(" ")
    if head == "rel":
        tokens = rest.split()
        if len(tokens) not in (2, 3):
            raise ParseError("SYNTAX", "expected 'rel <kind> <id> [subkind]'", lineno)
        try:
            kind = RelationKind(tokens[0], tokens[2] if len(tokens) == 3 else None)
        except TermforgeError as exc:
            raise ParseError("SYNTAX", exc.message, lineno) from None
        edges.append(ConceptRelation(entry.id, tokens[1], kind))
        return
    fields = split_fields(rest, lineno)
    if head == "feat":
        if len(fields) != 2 or not fields[0] or " " in fields[0]:
            raise ParseError("SYNTAX", "expected 'feat <key> :: <value>'", lineno)
        _covered(fields[0], lineno)
        if any(k == fields[0] for k, _ in entry.features):
            raise ParseError("SYNTAX", f"feature {fields[0]!r} repeated", lineno)
        entry.features.append((fields[0], fields[1]))
    elif head == "def":
        if len(fields) != 2 or not fields[0]:
            raise ParseError("SYNTAX", "expected 'def <lang> :: <text>'", lineno)
        sec = entry.section(_lang(fields[0], lineno))
        if sec[0] is not None:
            raise ParseError("SYNTAX", f"second definition for {fields[0]}", lineno)
        sec[0] = fields[1]
    elif head == "term":
        if len(fields) < 2 or not fields[0] or " " in fields[0]:
            raise ParseError("SYNTAX", "expected 'term <lang> :: <string>'", lineno)
        lang = _lang(fields[0], lineno)
        feats, seen = [], set()
        for f in fields[2:]:
            key, eq, value = f.partition("=")
            if not eq or not key:
                raise ParseError("SYNTAX", f"expected key=value, got {f!r}", lineno)
            _covered(key, lineno)
            if key in seen:
                raise ParseError("SYNTAX", f"feature {key!r} repeated", lineno)
            seen.add(key)
            feats.append((key, value))
        entry.section(lang)[1].append(TermLevel(fields[1], tuple(feats)))
    else:
        raise ParseError("SYNTAX", f"unknown record line {head!r}", lineno)


def render_listtml(coll: TermCollection, graph: ConceptGraph) -> bytes:
    """Write an already restricted, canonical termbase."""
    out = [f"collection {coll.id}"]
    if coll.gi.title:
        out.append(f"meta title{SEP}{escape(coll.gi.title)}")
    by_source = {}
    for e in graph.edges:
        by_source.setdefault(e.source, []).append(e)
    for te in coll.entries:
        out.append("")
        out.append(f"concept {te.id}")
        out += [f"  feat {k}{SEP}{escape(v)}" for k, v in te.concept_features]
        for ls in te.language_sections:
            definition = ls.feature("definition")
            if definition is not None:
                out.append(f"  def {ls.lang}{SEP}{escape(definition)}")
            for tl in ls.terms:
                fields = "".join(f"{SEP}{k}={escape(v)}" for k, v in tl.features)
                out.append(f"  term {ls.lang}{SEP}{escape(tl.term)}{fields}")
        for e in sorted(by_source.get(te.id, ()), key=lambda e: (e.kind, e.target, e.subkind or "")):
            out.append(f"  rel {e.kind} {e.target}" + (f" {e.subkind}" if e.subkind else ""))
    return ("\n".join(out) + "\n").encode("utf-8")

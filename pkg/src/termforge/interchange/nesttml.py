"""nesttml: indented three-level text dialect.

The top level describes the collection, the embedded level the entry and its
language sections, the basic level the terms::

    collection elearn-vocab
      title :: e-Learning vocabulary
      entry c-blended-learning
        subjectDomain :: education
        rel generic c-learning-mode
        language en
          definition :: ...
          term blended learning
            partOfSpeech :: noun
            component :: blended
            component :: learning

Indentation is two spaces per level.  ``source`` and CI cannot be written.
"""

from __future__ import annotations

from ..errors import ParseError, TermforgeError
from ..graph import ConceptGraph, ConceptRelation, RelationKind
from ..model import (GlobalInfo, LanguageSection, TermCollection, TermComponentLevel,
                     TermLevel, TerminologicalEntry, is_lang_tag)
from ..termbase import Termbase
from .loss import Coverage
from .text import SEP, escape, split_fields

COVERAGE = Coverage(
    name="nesttml",
    categories=frozenset({"definition", "subjectDomain", "partOfSpeech", "gender",
                          "number", "termType", "note"}),
    components=True,
    gi_source=False,
)


class _Node:
    __slots__ = ("kind", "value", "features", "children", "components")

    def __init__(self, kind, value):
        self.kind = kind
        self.value = value
        self.features = []
        self.children = []
        self.components = []


# what may appear one level below each node kind
_CHILDREN = {
    "collection": ("entry",),
    "entry": ("language", "rel"),
    "language": ("term",),
    "term": (),
}


def _add_feature(node, key, value, lineno):
    if node.kind == "collection":
        if key != "title":
            raise ParseError("UNKNOWN_CATEGORY", f"{key!r} is not carried at collection level", lineno)
    elif key == "component" and node.kind == "term":
        node.components.append(value)
        return
    elif key not in COVERAGE.categories:
        raise ParseError("UNKNOWN_CATEGORY", f"{key!r} is not carried by nesttml", lineno)
    if any(k == key for k, _ in node.features):
        raise ParseError("SYNTAX", f"feature {key!r} repeated", lineno)
    node.features.append((key, value))


def parse_nesttml(data) -> Termbase:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    root = None
    stack = []  # nodes by depth
    edges = []
    ids = set()
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        body = line.lstrip(" ")
        pad = len(line) - len(body)
        if body[0] == "\t" or pad % 2:
            raise ParseError("SYNTAX", "indent with multiples of two spaces", lineno, 1)
        depth = pad // 2
        if root is None:
            head, _, rest = body.partition(" ")
            if depth or head != "collection" or not rest.strip() or " " in rest.strip():
                raise ParseError("SYNTAX", "document must start with 'collection <id>'", lineno)
            root = _Node("collection", rest.strip())
            stack = [root]
            continue
        if depth == 0 or depth > len(stack):
            raise ParseError("SYNTAX", f"unexpected indentation depth {depth}", lineno, 1)
        del stack[depth:]
        parent = stack[-1]
        fields = split_fields(body, lineno)
        if len(fields) == 2 and fields[0] and " " not in fields[0]:
            _add_feature(parent, fields[0], fields[1], lineno)
            continue
        if len(fields) != 1:
            raise ParseError("SYNTAX", f"cannot read line {body!r}", lineno)
        head, _, rest = fields[0].partition(" ")
        if head not in _CHILDREN[parent.kind]:
            raise ParseError("BAD_NESTING", f"{head!r} not allowed under {parent.kind}", lineno)
        if head == "rel":
            tokens = rest.split()
            if len(tokens) not in (2, 3):
                raise ParseError("SYNTAX", "expected 'rel <kind> <id> [subkind]'", lineno)
            try:
                kind = RelationKind(tokens[0], tokens[2] if len(tokens) == 3 else None)
            except TermforgeError as exc:
                raise ParseError("SYNTAX", exc.message, lineno) from None
            edges.append(ConceptRelation(parent.value, tokens[1], kind))
            continue
        value = rest if head == "term" else rest.strip()
        if not value or (head != "term" and " " in value):
            raise ParseError("SYNTAX", f"expected '{head} <value>'", lineno)
        if head == "entry":
            if value in ids:
                raise ParseError("DUPLICATE_ID", f"entry {value!r} repeated", lineno)
            ids.add(value)
        elif head == "language" and not is_lang_tag(value):
            raise ParseError("BAD_LANG_TAG", f"{value!r} is not a language tag", lineno)
        node = _Node(head, value)
        parent.children.append(node)
        stack.append(node)
    if root is None:
        raise ParseError("SYNTAX", "empty document", 1)
    return Termbase(_build(root), ConceptGraph(tuple(edges)))


def _build(root) -> TermCollection:
    title = dict(root.features).get("title", "")
    entries = []
    for en in root.children:
        sections = []
        for ln in en.children:
            terms = [TermLevel(tn.value, tuple(tn.features),
                               tuple(TermComponentLevel(i, c) for i, c in enumerate(tn.components, 1)))
                     for tn in ln.children]
            sections.append(LanguageSection(ln.value, tuple(terms), tuple(ln.features)))
        entries.append(TerminologicalEntry(en.value, tuple(sections), tuple(en.features)))
    return TermCollection(root.value, GlobalInfo(title), tuple(entries))


def render_nesttml(coll: TermCollection, graph: ConceptGraph) -> bytes:
    """Write an already restricted, canonical termbase."""
    out = [f"collection {coll.id}"]
    if coll.gi.title:
        out.append(f"  title{SEP}{escape(coll.gi.title)}")
    by_source = {}
    for e in graph.edges:
        by_source.setdefault(e.source, []).append(e)
    for te in coll.entries:
        out.append(f"  entry {te.id}")
        out += [f"    {k}{SEP}{escape(v)}" for k, v in te.concept_features]
        for e in sorted(by_source.get(te.id, ()), key=lambda e: (e.kind, e.target, e.subkind or "")):
            out.append(f"    rel {e.kind} {e.target}" + (f" {e.subkind}" if e.subkind else ""))
        for ls in te.language_sections:
            out.append(f"    language {ls.lang}")
            out += [f"      {k}{SEP}{escape(v)}" for k, v in ls.features]
            for tl in ls.terms:
                out.append(f"      term {escape(tl.term)}")
                out += [f"        {k}{SEP}{escape(v)}" for k, v in tl.features]
                out += [f"        component{SEP}{escape(c.component)}" for c in tl.components]
    return ("\n".join(out) + "\n").encode("utf-8")

"""GMT: the canonical tagged-text pivot.

Canonical output is UTF-8, NFC, LF-terminated, two-space indented::

    <tdc id="...">
      <gi>
        <feat cat="title">...</feat>
      </gi>
      <te id="...">
        <feat cat="...">...</feat>
        <ls lang="...">
          <feat cat="...">...</feat>
          <tl>
            <feat cat="term">...</feat>
            <feat cat="...">...</feat>
            <tcl idx="1" text="..."/>
          </tl>
        </ls>
      </te>
      <rel kind="..." from="..." to="..." subkind="..."/>
      <ci>
        <feat cat="...">...</feat>
      </ci>
    </tdc>

``ci`` is written only when it has content.  The reader accepts any
well-formed arrangement of the same elements (attribute order, whitespace,
child order) and leaves canonical ordering to the writer.
"""

from __future__ import annotations

from xml.parsers import expat

from ..errors import ParseError, TermforgeError
from ..graph import ConceptGraph, ConceptRelation, RelationKind
from ..model import (ComplementaryInfo, GlobalInfo, LanguageSection, TermCollection,
                     TermComponentLevel, TermLevel, TerminologicalEntry, canonicalize)
from ..termbase import Termbase
from ..validation import validate

# element -> (required attributes, optional attributes, allowed parents)
ELEMENTS = {
    "tdc": (("id",), (), (None,)),
    "gi": ((), (), ("tdc",)),
    "ci": ((), (), ("tdc",)),
    "te": (("id",), (), ("tdc",)),
    "ls": (("lang",), (), ("te",)),
    "tl": ((), (), ("ls",)),
    "tcl": (("idx", "text"), (), ("tl",)),
    "feat": (("cat",), (), ("gi", "ci", "te", "ls", "tl")),
    "rel": (("kind", "from", "to"), ("subkind",), ("tdc",)),
}


_ESCAPES = str.maketrans({"&": "&amp;", "<": "&lt;", ">": "&gt;", '"': "&quot;"})


def escape(text: str) -> str:
    return text.translate(_ESCAPES)


def _feat(depth, cat, value):
    return f'{"  " * depth}<feat cat="{escape(cat)}">{escape(value)}</feat>'


def emit_gmt(coll: TermCollection, graph: ConceptGraph | None = None, reg=None) -> bytes:
    """Serialise a valid termbase to canonical GMT bytes (``INVALID_MODEL`` otherwise)."""
    graph = graph if graph is not None else ConceptGraph()
    report = validate(coll, graph, reg)
    if not report.ok:
        first = report.errors[0]
        raise TermforgeError("INVALID_MODEL",
                             f"{len(report.errors)} error(s), first: {first.code} at {first.path}")
    return _render(canonicalize(coll), graph.canonical())


def _render(coll: TermCollection, graph: ConceptGraph) -> bytes:
    out = [f'<tdc id="{escape(coll.id)}">', "  <gi>"]
    gi = [("title", coll.gi.title)]
    if coll.gi.source:
        gi.append(("source", coll.gi.source))
    gi += list(coll.gi.admin)
    out += [_feat(2, k, v) for k, v in sorted(gi)]
    out.append("  </gi>")
    for te in coll.entries:
        out.append(f'  <te id="{escape(te.id)}">')
        out += [_feat(2, k, v) for k, v in te.concept_features]
        for ls in te.language_sections:
            out.append(f'    <ls lang="{escape(ls.lang)}">')
            out += [_feat(3, k, v) for k, v in ls.features]
            for tl in ls.terms:
                out.append("      <tl>")
                out.append(_feat(4, "term", tl.term))
                out += [_feat(4, k, v) for k, v in tl.features]
                out += [f'        <tcl idx="{c.index}" text="{escape(c.component)}"/>'
                        for c in tl.components]
                out.append("      </tl>")
            out.append("    </ls>")
        out.append("  </te>")
    for e in graph.edges:
        sub = f' subkind="{escape(e.subkind)}"' if e.subkind else ""
        out.append(f'  <rel kind="{e.kind}" from="{escape(e.source)}" '
                   f'to="{escape(e.target)}"{sub}/>')
    if coll.ci.notes:
        out.append("  <ci>")
        out += [_feat(2, k, v) for k, v in coll.ci.notes]
        out.append("  </ci>")
    out.append("</tdc>")
    return ("\n".join(out) + "\n").encode("utf-8")


class _Node:
    __slots__ = ("name", "attrs", "children", "feats", "text", "line", "col")

    def __init__(self, name, attrs, line, col):
        self.name = name
        self.attrs = attrs
        self.children = []
        self.feats = []
        self.text = []
        self.line = line
        self.col = col


class _Reader:
    def __init__(self):
        self.parser = expat.ParserCreate("utf-8")
        self.parser.buffer_text = True
        self.parser.StartElementHandler = self.start
        self.parser.EndElementHandler = self.end
        self.parser.CharacterDataHandler = self.chars
        self.stack = []
        self.root = None

    def fail(self, code, message):
        raise ParseError(code, message, self.parser.CurrentLineNumber,
                         self.parser.CurrentColumnNumber + 1)

    def start(self, name, attrs):
        spec = ELEMENTS.get(name)
        if spec is None:
            self.fail("UNKNOWN_ELEMENT", f"<{name}>")
        required, optional, parents = spec
        parent = self.stack[-1].name if self.stack else None
        if parent not in parents:
            where = f"inside <{parent}>" if parent else "at document root"
            self.fail("BAD_NESTING", f"<{name}> not allowed {where}")
        if parent == "feat":
            self.fail("BAD_NESTING", f"<{name}> inside <feat>")
        for key in attrs:
            if key not in required and key not in optional:
                self.fail("UNKNOWN_ATTRIBUTE", f"{key!r} on <{name}>")
        for key in required:
            if key not in attrs:
                self.fail("SYNTAX", f"<{name}> lacks required attribute {key!r}")
        node = _Node(name, attrs, self.parser.CurrentLineNumber,
                     self.parser.CurrentColumnNumber + 1)
        if self.stack:
            self.stack[-1].children.append(node)
        else:
            self.root = node
        self.stack.append(node)

    def end(self, name):
        node = self.stack.pop()
        if node.name in ("rel", "tcl") and node.children:
            self.fail("BAD_NESTING", f"<{node.name}> must be empty")

    def chars(self, data):
        if not self.stack:
            return
        top = self.stack[-1]
        if top.name == "feat":
            top.text.append(data)
        elif data.strip():
            self.fail("SYNTAX", f"unexpected text inside <{top.name}>")

    def read(self, data: bytes):
        try:
            self.parser.Parse(data, True)
        except expat.ExpatError as exc:
            raise ParseError("SYNTAX", expat.ErrorString(exc.code), exc.lineno, exc.offset + 1) from None
        if self.root is None:
            raise ParseError("SYNTAX", "empty document", 1, 1)
        return self.root


def _features(node, skip=()):
    seen, out = set(), []
    for child in node.children:
        if child.name != "feat":
            continue
        cat = child.attrs["cat"]
        if cat in seen:
            raise ParseError("SYNTAX", f"feature {cat!r} repeated", child.line, child.col)
        seen.add(cat)
        if cat not in skip:
            out.append((cat, "".join(child.text)))
    return out


def _children(node, name):
    return [c for c in node.children if c.name == name]


def _single(node, name):
    found = _children(node, name)
    if len(found) > 1:
        raise ParseError("BAD_NESTING", f"<{name}> appears more than once", found[1].line, found[1].col)
    return found[0] if found else None


def _term(node) -> TermLevel:
    feats = dict(_features(node))
    if "term" not in feats:
        raise ParseError("SYNTAX", "<tl> has no term feature", node.line, node.col)
    comps = []
    for c in _children(node, "tcl"):
        raw = c.attrs["idx"]
        if not raw.isdigit() or int(raw) < 1:
            raise ParseError("SYNTAX", f"tcl idx {raw!r} is not a positive integer", c.line, c.col)
        comps.append(TermComponentLevel(int(raw), c.attrs["text"]))
    term = feats.pop("term")
    return TermLevel(term, tuple(feats.items()), tuple(comps))


def parse_gmt(data) -> Termbase:
    """Read GMT bytes (or text) into a :class:`Termbase`, in document order."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    root = _Reader().read(data)
    gi_node = _single(root, "gi")
    title, source, admin = "", "", []
    if gi_node is not None:
        for k, v in _features(gi_node):
            if k == "title":
                title = v
            elif k == "source":
                source = v
            else:
                admin.append((k, v))
    ci_node = _single(root, "ci")
    notes = _features(ci_node) if ci_node is not None else []
    entries, ids = [], set()
    for te in _children(root, "te"):
        tid = te.attrs["id"]
        if tid in ids:
            raise ParseError("DUPLICATE_ID", f"entry id {tid!r} repeated", te.line, te.col)
        ids.add(tid)
        sections = []
        for ls in _children(te, "ls"):
            terms = [_term(tl) for tl in _children(ls, "tl")]
            sections.append(LanguageSection(ls.attrs["lang"], tuple(terms), _features(ls)))
        entries.append(TerminologicalEntry(tid, tuple(sections), _features(te)))
    edges = []
    for r in _children(root, "rel"):
        try:
            kind = RelationKind(r.attrs["kind"], r.attrs.get("subkind") or None)
        except TermforgeError as exc:
            raise ParseError("SYNTAX", exc.message, r.line, r.col) from None
        edges.append(ConceptRelation(r.attrs["from"], r.attrs["to"], kind))
    coll = TermCollection(root.attrs["id"], GlobalInfo(title, source, tuple(admin)),
                          tuple(entries), ComplementaryInfo(tuple(notes)))
    return Termbase(coll, ConceptGraph(tuple(edges)))

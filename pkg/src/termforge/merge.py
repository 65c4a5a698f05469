"""Merging two termbases by concept identity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Tuple

from .errors import TermforgeError
from .graph import ConceptGraph, ConceptRelation, add_relation
from .lexical import build_term_index, detect_term_conflicts, fold
from .model import (ComplementaryInfo, GlobalInfo, LanguageSection, TermCollection,
                    TermLevel, TerminologicalEntry, canonical_entry, canonicalize)
from .termbase import Termbase, as_termbase
from .validation import validate

BY_ENTRY_ID = "by-entry-id"
BY_SHARED_TERM = "by-shared-term"
PREFER_LEFT = "prefer-left"
PREFER_RIGHT = "prefer-right"
REPORT_ONLY = "report-only"
COLLISION_SUFFIX = "~b"


@dataclass(frozen=True)
class MergePolicy:
    identity: str = BY_ENTRY_ID
    on_conflict: str = REPORT_ONLY
    langs: FrozenSet[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "langs", frozenset(self.langs))
        if self.identity not in (BY_ENTRY_ID, BY_SHARED_TERM):
            raise TermforgeError("BAD_POLICY", f"unknown identity rule {self.identity!r}")
        if self.on_conflict not in (PREFER_LEFT, PREFER_RIGHT, REPORT_ONLY):
            raise TermforgeError("BAD_POLICY", f"unknown conflict rule {self.on_conflict!r}")
        if self.identity == BY_SHARED_TERM and not self.langs:
            raise TermforgeError("BAD_POLICY", "by-shared-term needs at least one language")


@dataclass(frozen=True)
class Alignment:
    left: str
    right: str
    evidence: Tuple[str, ...]


@dataclass(frozen=True)
class FeatureConflict:
    path: str
    key: str
    left: str
    right: str
    resolution: str

    def line(self):
        return f"CONFLICT\t{self.path}\t{self.key}\t{self.left}\t{self.right}\t{self.resolution}"


@dataclass(frozen=True)
class MergeReport:
    matched: Tuple[Alignment, ...] = ()
    conflicts: Tuple[FeatureConflict, ...] = ()
    new_homonyms: Tuple[Tuple[str, str, Tuple[str, ...]], ...] = ()
    dropped_edges: Tuple[Tuple[str, str], ...] = ()
    renamed: Tuple[Tuple[str, str], ...] = ()

    def lines(self):
        out = [f"MATCH\t{a.left}\t{a.right}\t{','.join(a.evidence)}" for a in self.matched]
        out += [c.line() for c in self.conflicts]
        out += [f"RENAMED\t{old}\t{new}" for old, new in self.renamed]
        out += [f"HOMONYM\t{t}\t{lang}\t{','.join(ids)}" for t, lang, ids in self.new_homonyms]
        out += [f"DROPPED_EDGE\t{path}\t{why}" for path, why in self.dropped_edges]
        return out


# -- alignment ----------------------------------------------------------------

def _term_keys(te: TerminologicalEntry, langs):
    return {(ls.lang, fold(tl.term))
            for ls in te.language_sections if ls.lang in langs
            for tl in ls.terms}


def align_concepts(a: TermCollection, b: TermCollection, policy: MergePolicy) -> list:
    """One-to-one concept pairs between ``a`` and ``b`` with their evidence.

    Shared-term pairing is greedy: candidate pairs are taken by descending
    number of shared ``(lang, term)`` keys, ties broken by id order.
    """
    if policy.identity == BY_ENTRY_ID:
        right = {te.id for te in b.entries}
        return [Alignment(te.id, te.id, ("id-match",))
                for te in sorted(a.entries, key=lambda te: te.id) if te.id in right]
    # invert b's keys so only entries sharing something are compared
    owners = {}
    for te in b.entries:
        for key in _term_keys(te, policy.langs):
            owners.setdefault(key, set()).add(te.id)
    candidates = []
    for te in a.entries:
        shared = {}
        for key in _term_keys(te, policy.langs):
            for other in owners.get(key, ()):
                shared.setdefault(other, []).append(key)
        for other, keys in shared.items():
            candidates.append((-len(keys), te.id, other, tuple(sorted(keys))))
    candidates.sort()
    used_a, used_b, pairs = set(), set(), []
    for _, ida, idb, keys in candidates:
        if ida in used_a or idb in used_b:
            continue
        used_a.add(ida)
        used_b.add(idb)
        pairs.append(Alignment(ida, idb, tuple(f'shared:"{t}"@{lang}' for lang, t in keys)))
    return sorted(pairs, key=lambda p: (p.left, p.right))


# -- unification --------------------------------------------------------------

class _Merger:
    def __init__(self, policy):
        self.policy = policy
        self.conflicts = []

    def features(self, left, right, path):
        out = dict(left)
        for key, value in right:
            if key not in out:
                out[key] = value
            elif out[key] != value:
                keep = value if self.policy.on_conflict == PREFER_RIGHT else out[key]
                resolution = {PREFER_LEFT: "kept-left", PREFER_RIGHT: "kept-right",
                              REPORT_ONLY: "reported-kept-left"}[self.policy.on_conflict]
                self.conflicts.append(FeatureConflict(path, key, out[key], value, resolution))
                out[key] = keep
        return tuple(sorted(out.items()))

    def scalar(self, left, right, path, key):
        if not left:
            return right
        if right and left != right:
            return dict(self.features(((key, left),), ((key, right),), path))[key]
        return left

    def term(self, left: TermLevel, right: TermLevel, path) -> TermLevel:
        feats = self.features(left.features, right.features, path)
        comps = left.components or right.components
        if left.components and right.components and left.components != right.components:
            lc, rc = _spell(left.components), _spell(right.components)
            comps = right.components if self.scalar(lc, rc, path, "components") == rc else left.components
        return TermLevel(left.term, feats, comps)

    def section(self, left: LanguageSection, right: LanguageSection, path) -> LanguageSection:
        feats = self.features(left.features, right.features, path)
        terms = {}
        for tl in left.terms:
            terms.setdefault(tl.term, tl)
        for tl in right.terms:
            if tl.term in terms:
                terms[tl.term] = self.term(terms[tl.term], tl, f"{path}/tl:{tl.term}")
            else:
                terms[tl.term] = tl
        return LanguageSection(left.lang, tuple(terms.values()), feats)

    def entry(self, left: TerminologicalEntry, right: TerminologicalEntry) -> TerminologicalEntry:
        path = f"te:{left.id}"
        feats = self.features(left.concept_features, right.concept_features, path)
        sections = {ls.lang: ls for ls in left.language_sections}
        for ls in right.language_sections:
            if ls.lang in sections:
                sections[ls.lang] = self.section(sections[ls.lang], ls, f"{path}/ls:{ls.lang}")
            else:
                sections[ls.lang] = ls
        return TerminologicalEntry(left.id, tuple(sections.values()), feats)


def _spell(components):
    return "|".join(c.component for c in components)


def _is_bare(tb: Termbase) -> bool:
    coll = tb.collection
    return (not coll.entries and not tb.graph.edges
            and coll.gi == GlobalInfo() and coll.ci == ComplementaryInfo())


def _homonym_keys(coll):
    report = detect_term_conflicts(build_term_index(coll), coll)
    return {(h.term, h.lang): h.entries for h in report.homonyms}


def merge(a, b, policy: MergePolicy | None = None, reg=None):
    """Union of two termbases; returns ``(collection, graph, MergeReport)``.

    ``a`` and ``b`` are :class:`Termbase` values or plain collections.  A
    termbase with no entries, edges or header content is the identity (its
    collection id is ignored; if both sides are like that, the left one is
    returned).  Otherwise the left id and header win, with right values
    filling gaps.  Under ``by-shared-term``, unaligned right entries whose id
    is taken get the ``~b`` suffix.  Right edges are remapped onto the merged
    ids; an edge that would close a hierarchical cycle is dropped and listed.
    """
    policy = policy or MergePolicy()
    a, b = as_termbase(a), as_termbase(b)
    for side, tb in (("left", a), ("right", b)):
        report = validate(tb.collection, tb.graph, reg)
        if not report.ok:
            first = report.errors[0]
            raise TermforgeError("INVALID_INPUT", f"{side} termbase: {first.code} at {first.path}")
    if _is_bare(b) or _is_bare(a):
        only = a if _is_bare(b) else b
        coll, graph = canonicalize(only.collection), only.graph.canonical()
        return coll, graph, MergeReport()

    ca, cb = canonicalize(a.collection), canonicalize(b.collection)
    pairs = align_concepts(ca, cb, policy)
    merger = _Merger(policy)
    right_to_left = {p.right: p.left for p in pairs}
    merged = {te.id: te for te in ca.entries}
    renamed = []
    for te in cb.entries:
        target = right_to_left.get(te.id)
        if target is not None:
            merged[target] = merger.entry(merged[target], te)
            continue
        new_id = te.id
        while new_id in merged:
            new_id += COLLISION_SUFFIX
        if new_id != te.id:
            renamed.append((te.id, new_id))
        right_to_left[te.id] = new_id
        merged[new_id] = TerminologicalEntry(new_id, te.language_sections, te.concept_features)

    gi = GlobalInfo(
        title=merger.scalar(ca.gi.title, cb.gi.title, "gi", "title"),
        source=merger.scalar(ca.gi.source, cb.gi.source, "gi", "source"),
        admin=merger.features(ca.gi.admin, cb.gi.admin, "gi"),
    )
    ci = ComplementaryInfo(merger.features(ca.ci.notes, cb.ci.notes, "ci"))
    coll = canonicalize(TermCollection(ca.id, gi, tuple(canonical_entry(te) for te in merged.values()), ci))

    graph, dropped = ConceptGraph(), []
    remapped = list(a.graph.canonical().edges)
    remapped += [ConceptRelation(right_to_left.get(e.source, e.source),
                                 right_to_left.get(e.target, e.target), e.rel)
                 for e in b.graph.canonical().edges]
    seen = set()
    for e in remapped:
        if e in seen:
            continue
        seen.add(e)
        try:
            graph = add_relation(graph, e)
        except TermforgeError as exc:
            dropped.append((e.path(), exc.code))
    before = set(_homonym_keys(ca)) | set(_homonym_keys(cb))
    new_homs = tuple((t, lang, ids) for (t, lang), ids in sorted(_homonym_keys(coll).items())
                     if (t, lang) not in before)
    report = MergeReport(
        matched=tuple(pairs),
        conflicts=tuple(sorted(merger.conflicts, key=lambda c: (c.path, c.key))),
        new_homonyms=new_homs,
        dropped_edges=tuple(dropped),
        renamed=tuple(sorted(renamed)),
    )
    return coll, graph.canonical(), report

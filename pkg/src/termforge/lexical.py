"""Term-side view of a concept-first base: index, conflicts, decomposition."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from types import MappingProxyType
from typing import FrozenSet, Mapping, Optional, Tuple

from .graph import ConceptGraph, is_more_general
from .model import TermCollection, TermComponentLevel, nfc

SEPARATORS = {
    "whitespace": " ",
    "hyphen": "-",
    "whitespace+hyphen": " -",
}


def fold(text: str) -> str:
    """NFC plus simple (one-to-one) default lowercase mapping."""
    out = []
    for ch in nfc(text):
        low = ch.lower()
        out.append(low if len(low) == 1 else ch)
    return "".join(out)


# -- index --------------------------------------------------------------------

@dataclass(frozen=True)
class TermIndex:
    """``(folded term, lang) -> frozenset of entry ids``."""

    entries: Mapping[Tuple[str, str], FrozenSet[str]]

    def __len__(self):
        return len(self.entries)

    def triple_count(self) -> int:
        return sum(len(ids) for ids in self.entries.values())

    def langs(self):
        return sorted({lang for _, lang in self.entries})


def build_term_index(coll: TermCollection) -> TermIndex:
    table = defaultdict(set)
    for te in coll.entries:
        for ls in te.language_sections:
            for tl in ls.terms:
                table[(fold(tl.term), ls.lang)].add(te.id)
    frozen = {key: frozenset(table[key]) for key in sorted(table)}
    return TermIndex(MappingProxyType(frozen))


def find_concepts(idx: TermIndex, term: str, lang: Optional[str] = None) -> list:
    """Semasiological lookup: entry ids carrying ``term`` (case-folded), sorted."""
    key = fold(term)
    if lang is not None:
        return sorted(idx.entries.get((key, lang), ()))
    found = set()
    for (t, _), ids in idx.entries.items():
        if t == key:
            found |= ids
    return sorted(found)


# -- conflicts ----------------------------------------------------------------

@dataclass(frozen=True)
class HomonymGroup:
    term: str
    lang: str
    entries: Tuple[str, ...]
    note: str = "homonym"
    heteronym: bool = False


@dataclass(frozen=True)
class SynonymCluster:
    entry: str
    lang: str
    terms: Tuple[str, ...]


@dataclass(frozen=True)
class ConflictReport:
    homonyms: Tuple[HomonymGroup, ...] = ()
    synonyms: Tuple[SynonymCluster, ...] = ()

    def __bool__(self):
        return bool(self.homonyms or self.synonyms)

    def homonym_keys(self):
        return {(h.term, h.lang) for h in self.homonyms}


def detect_term_conflicts(idx: TermIndex, coll: TermCollection,
                          graph: ConceptGraph | None = None) -> ConflictReport:
    """Homonym groups and synonym clusters.

    A homonym group whose members are linked by a generic path in ``graph`` is
    noted ``hyponym-overlap``.  ``heteronym`` marks groups whose members sit in
    different subject domains: the same written form carrying a
    domain-specific sense.
    """
    domains = {te.id: te.feature("subjectDomain") for te in coll.entries}
    homonyms = []
    for (term, lang), ids in idx.entries.items():
        if len(ids) < 2:
            continue
        members = tuple(sorted(ids))
        note = "homonym"
        if graph is not None and any(
                is_more_general(graph, a, b) or is_more_general(graph, b, a)
                for i, a in enumerate(members) for b in members[i + 1:]):
            note = "hyponym-overlap"
        doms = {domains.get(m) for m in members} - {None}
        homonyms.append(HomonymGroup(term, lang, members, note, len(doms) > 1))
    synonyms = []
    for te in coll.entries:
        for ls in te.language_sections:
            if len(ls.terms) > 1:
                synonyms.append(SynonymCluster(te.id, ls.lang,
                                               tuple(sorted(tl.term for tl in ls.terms))))
    homonyms.sort(key=lambda h: (h.term, h.lang))
    synonyms.sort(key=lambda s: (s.entry, s.lang))
    return ConflictReport(tuple(homonyms), tuple(synonyms))


# -- decomposition ------------------------------------------------------------

def decompose_term(term: str, strategy: str = "whitespace") -> list:
    """Split ``term`` into 1-based :class:`TermComponentLevel` items.

    A separator character only splits when both neighbours are
    non-separators, so doubled or edge separators stay inside a component and
    every component is non-empty.  Joining the components with the separator
    characters found between them gives back ``term`` exactly.
    """
    if not term:
        raise ValueError("cannot decompose an empty term")
    try:
        seps = SEPARATORS[strategy]
    except KeyError:
        raise ValueError(f"unknown decomposition strategy {strategy!r}") from None
    parts, start = [], 0
    for i in range(1, len(term) - 1):
        if term[i] in seps and term[i - 1] not in seps and term[i + 1] not in seps:
            parts.append(term[start:i])
            start = i + 1
    parts.append(term[start:])
    return [TermComponentLevel(n, p) for n, p in enumerate(parts, 1)]


def join_components(components, strategy: str = "whitespace") -> str:
    """Inverse of :func:`decompose_term` for the single-separator strategies."""
    seps = SEPARATORS[strategy]
    if len(seps) != 1:
        raise ValueError(f"strategy {strategy!r} has several separators; use reconstructs()")
    return seps.join(c.component for c in sorted(components, key=lambda c: c.index))


def reconstructs(term: str, components, strategy: str = "whitespace+hyphen") -> bool:
    """True when the components, in index order, spell ``term`` with one
    separator of ``strategy`` between neighbours."""
    seps = SEPARATORS[strategy]
    comps = [c.component for c in sorted(components, key=lambda c: c.index)]
    if not comps:
        return False
    pos = 0
    for n, comp in enumerate(comps):
        if n:
            if pos >= len(term) or term[pos] not in seps:
                return False
            pos += 1
        if not comp or not term.startswith(comp, pos):
            return False
        pos += len(comp)
    return pos == len(term)

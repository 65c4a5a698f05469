"""The seven-node terminological data model.

A :class:`TermCollection` (TDC) holds a :class:`GlobalInfo` header (GI), an
ordered run of :class:`TerminologicalEntry` nodes (TE, one per concept) and a
:class:`ComplementaryInfo` trailer (CI).  Each entry opens one
:class:`LanguageSection` (LS) per language, each section holds one or more
:class:`TermLevel` nodes (TL), and each term may be split into
:class:`TermComponentLevel` items (TCL).

Every type is a frozen value.  Constructors are permissive so that readers can
materialise broken input for :func:`termforge.validation.validate` to report;
:func:`add_entry` is the strict path that refuses structurally invalid entries.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Tuple, Union

from .errors import TermforgeError

ID_RE = re.compile(r"[A-Za-z][A-Za-z0-9._~-]*\Z")
LANG_RE = re.compile(r"[a-z]{2,3}(-(?:[A-Z]{2}|[0-9]{3}))?\Z")

Features = Tuple[Tuple[str, str], ...]
FeatureInput = Union[Mapping[str, str], Iterable[Tuple[str, str]], None]


def is_identifier(text) -> bool:
    return isinstance(text, str) and ID_RE.match(text) is not None


def is_lang_tag(text) -> bool:
    return isinstance(text, str) and LANG_RE.match(text) is not None


def nfc(text: str) -> str:
    return unicodedata.normalize("NFC", text)


def freeze_features(features: FeatureInput) -> Features:
    """Turn a mapping or pair iterable into the immutable pair tuple used on nodes."""
    if features is None:
        return ()
    if type(features) is tuple and len({k for k, _ in features}) == len(features):
        return features
    items = features.items() if isinstance(features, Mapping) else features
    out = []
    seen = set()
    for key, value in items:
        if key in seen:
            raise TermforgeError("DUPLICATE_FEATURE", f"feature {key!r} given twice")
        seen.add(key)
        out.append((key, value))
    return tuple(out)


def _get(features: Features, key, default=None):
    for k, v in features:
        if k == key:
            return v
    return default


@dataclass(frozen=True)
class GlobalInfo:
    title: str = ""
    source: str = ""
    admin: Features = ()

    def __post_init__(self):
        object.__setattr__(self, "admin", freeze_features(self.admin))


@dataclass(frozen=True)
class ComplementaryInfo:
    notes: Features = ()

    def __post_init__(self):
        object.__setattr__(self, "notes", freeze_features(self.notes))


@dataclass(frozen=True)
class TermComponentLevel:
    index: int
    component: str


@dataclass(frozen=True)
class TermLevel:
    term: str
    features: Features = ()
    components: Tuple[TermComponentLevel, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "features", freeze_features(self.features))
        object.__setattr__(self, "components", tuple(self.components))

    def feature(self, key, default=None):
        return _get(self.features, key, default)


@dataclass(frozen=True)
class LanguageSection:
    lang: str
    terms: Tuple[TermLevel, ...] = ()
    features: Features = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        object.__setattr__(self, "features", freeze_features(self.features))

    def feature(self, key, default=None):
        return _get(self.features, key, default)


@dataclass(frozen=True)
class TerminologicalEntry:
    id: str
    language_sections: Tuple[LanguageSection, ...] = ()
    concept_features: Features = ()

    def __post_init__(self):
        object.__setattr__(self, "language_sections", tuple(self.language_sections))
        object.__setattr__(self, "concept_features", freeze_features(self.concept_features))

    def feature(self, key, default=None):
        return _get(self.concept_features, key, default)

    def section(self, lang):
        for ls in self.language_sections:
            if ls.lang == lang:
                return ls
        return None


@dataclass(frozen=True)
class TermCollection:
    id: str
    gi: GlobalInfo = field(default_factory=GlobalInfo)
    entries: Tuple[TerminologicalEntry, ...] = ()
    ci: ComplementaryInfo = field(default_factory=ComplementaryInfo)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))

    def __len__(self):
        return len(self.entries)

    def entry(self, entry_id):
        for te in self.entries:
            if te.id == entry_id:
                return te
        return None

    def entry_ids(self):
        return [te.id for te in self.entries]


def new_collection(id: str, gi: GlobalInfo | None = None) -> TermCollection:
    """Create an empty collection; ``id`` must follow the identifier grammar."""
    if not is_identifier(id):
        raise TermforgeError("MALFORMED_ID", f"{id!r} is not a well-formed identifier")
    return TermCollection(id=id, gi=gi if gi is not None else GlobalInfo())


def add_entry(coll: TermCollection, entry: TerminologicalEntry) -> TermCollection:
    """Return a copy of ``coll`` with ``entry`` appended.

    Structural rules are enforced eagerly here: an entry needs at least one
    language section, every section at least one term, and no language may be
    opened twice.
    """
    if not is_identifier(entry.id):
        raise TermforgeError("MALFORMED_ID", f"{entry.id!r} is not a well-formed identifier")
    if coll.entry(entry.id) is not None:
        raise TermforgeError("DUPLICATE_ENTRY_ID", entry.id)
    if not entry.language_sections:
        raise TermforgeError("EMPTY_LS", f"entry {entry.id} has no language section")
    langs = set()
    for ls in entry.language_sections:
        if ls.lang in langs:
            raise TermforgeError("DUPLICATE_LANG", f"entry {entry.id} opens {ls.lang} twice")
        langs.add(ls.lang)
        if not is_lang_tag(ls.lang):
            raise TermforgeError("BAD_LANG_TAG", f"{ls.lang!r} in entry {entry.id}")
        if not ls.terms:
            raise TermforgeError("EMPTY_TL", f"entry {entry.id} section {ls.lang} has no term")
        for tl in ls.terms:
            if not tl.term.strip():
                raise TermforgeError("EMPTY_TERM", f"entry {entry.id} section {ls.lang}")
    return replace(coll, entries=coll.entries + (entry,))


def lookup_terms(coll: TermCollection, concept_id: str, lang: str) -> list:
    """Onomasiological lookup: the terms of one concept in one language."""
    te = coll.entry(concept_id)
    if te is None:
        raise TermforgeError("UNKNOWN_CONCEPT", concept_id)
    ls = te.section(lang)
    if ls is None:
        return []
    return sorted(_canonical_section(ls).terms, key=_term_sort_key)


# -- canonical form -----------------------------------------------------------

def _canon_features(features: Features) -> Features:
    return tuple(sorted((nfc(k), nfc(v)) for k, v in features))


def _term_sort_key(tl: TermLevel):
    return (tl.term, tl.features, tuple((c.index, c.component) for c in tl.components))


def _canonical_term(tl: TermLevel) -> TermLevel:
    return TermLevel(
        term=nfc(tl.term),
        features=_canon_features(tl.features),
        components=tuple(
            TermComponentLevel(c.index, nfc(c.component))
            for c in sorted(tl.components, key=lambda c: c.index)
        ),
    )


def _canonical_section(ls: LanguageSection) -> LanguageSection:
    terms = sorted((_canonical_term(tl) for tl in ls.terms), key=_term_sort_key)
    return LanguageSection(lang=nfc(ls.lang), terms=tuple(terms),
                           features=_canon_features(ls.features))


def canonical_entry(te: TerminologicalEntry) -> TerminologicalEntry:
    sections = sorted((_canonical_section(ls) for ls in te.language_sections),
                      key=lambda ls: ls.lang)
    return TerminologicalEntry(id=nfc(te.id), language_sections=tuple(sections),
                               concept_features=_canon_features(te.concept_features))


def canonicalize(coll: TermCollection) -> TermCollection:
    """NFC-normalise all text and put every ordered child list in canonical order.

    Entries sort by id, sections by language tag, terms by term string then by
    a fingerprint of their features and components, features by key.
    Idempotent.
    """
    gi = GlobalInfo(title=nfc(coll.gi.title), source=nfc(coll.gi.source),
                    admin=_canon_features(coll.gi.admin))
    ci = ComplementaryInfo(notes=_canon_features(coll.ci.notes))
    entries = sorted((canonical_entry(te) for te in coll.entries), key=lambda te: te.id)
    return TermCollection(id=nfc(coll.id), gi=gi, entries=tuple(entries), ci=ci)


def term_triples(coll: TermCollection):
    """Multiset of ``(entry id, lang, term)`` triples, as a sorted list."""
    return sorted((te.id, ls.lang, tl.term)
                  for te in coll.entries
                  for ls in te.language_sections
                  for tl in ls.terms)

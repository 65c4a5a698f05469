"""Loss accounting for dialects that cannot express every category."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import FrozenSet, Tuple

from ..model import (ComplementaryInfo, GlobalInfo, LanguageSection, TermCollection,
                     TermLevel, TerminologicalEntry, canonicalize)

UNSUPPORTED_CATEGORY = "UNSUPPORTED_CATEGORY"


@dataclass(frozen=True, order=True)
class Loss:
    path: str
    key: str
    value: str
    reason: str = UNSUPPORTED_CATEGORY

    def line(self) -> str:
        return f"LOSS\t{self.path}\t{self.key}\t{self.reason}"


@dataclass(frozen=True)
class LossReport:
    dropped: Tuple[Loss, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "dropped", tuple(sorted(self.dropped)))

    def __bool__(self):
        return bool(self.dropped)

    def __len__(self):
        return len(self.dropped)

    def __iter__(self):
        return iter(self.dropped)

    def __add__(self, other: "LossReport") -> "LossReport":
        return LossReport(self.dropped + other.dropped)

    @property
    def counts(self) -> dict:
        return dict(sorted(Counter(d.key for d in self.dropped).items()))

    def triples(self):
        return sorted((d.path, d.key, d.value) for d in self.dropped)

    def lines(self):
        return [d.line() for d in self.dropped]


@dataclass(frozen=True)
class Coverage:
    """What a dialect can carry.  ``categories`` applies at every level."""

    name: str
    categories: FrozenSet[str]
    components: bool = False
    gi_source: bool = False


def feature_triples(coll: TermCollection):
    """Every ``(node path, key, value)`` a collection carries beyond its skeleton.

    GI title is skeleton; GI source, admin entries, CI notes, node features
    and term components are not.
    """
    out = []
    if coll.gi.source:
        out.append(("gi", "source", coll.gi.source))
    out += [("gi", k, v) for k, v in coll.gi.admin]
    out += [("ci", k, v) for k, v in coll.ci.notes]
    for te in coll.entries:
        tp = f"te:{te.id}"
        out += [(tp, k, v) for k, v in te.concept_features]
        for ls in te.language_sections:
            lp = f"{tp}/ls:{ls.lang}"
            out += [(lp, k, v) for k, v in ls.features]
            for tl in ls.terms:
                tlp = f"{lp}/tl:{tl.term}"
                out += [(tlp, k, v) for k, v in tl.features]
                out += [(f"{tlp}/tcl:{c.index}", "component", c.component) for c in tl.components]
    return sorted(out)


def restrict(coll: TermCollection, coverage: Coverage):
    """Drop everything ``coverage`` cannot carry; return ``(collection, LossReport)``.

    The input is canonicalised first so paths and ordering are stable.
    """
    coll = canonicalize(coll)
    lost = []
    keep = coverage.categories

    def split(features, path):
        kept = []
        for k, v in features:
            if k in keep:
                kept.append((k, v))
            else:
                lost.append(Loss(path, k, v))
        return tuple(kept)

    source = coll.gi.source
    if source and not coverage.gi_source:
        lost.append(Loss("gi", "source", source))
        source = ""
    lost += [Loss("gi", k, v) for k, v in coll.gi.admin]
    lost += [Loss("ci", k, v) for k, v in coll.ci.notes]
    entries = []
    for te in coll.entries:
        tp = f"te:{te.id}"
        sections = []
        for ls in te.language_sections:
            lp = f"{tp}/ls:{ls.lang}"
            terms = []
            for tl in ls.terms:
                tlp = f"{lp}/tl:{tl.term}"
                comps = tl.components
                if comps and not coverage.components:
                    lost += [Loss(f"{tlp}/tcl:{c.index}", "component", c.component) for c in comps]
                    comps = ()
                terms.append(TermLevel(tl.term, split(tl.features, tlp), comps))
            sections.append(LanguageSection(ls.lang, tuple(terms), split(ls.features, lp)))
        entries.append(TerminologicalEntry(te.id, tuple(sections), split(te.concept_features, tp)))
    out = TermCollection(coll.id, GlobalInfo(coll.gi.title, source), tuple(entries),
                         ComplementaryInfo())
    # dropping features can make two terms' fingerprints tie differently
    return canonicalize(out), LossReport(tuple(lost))

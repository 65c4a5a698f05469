"""Whole-termbase validation: structure, text hygiene, category bindings, graph."""

from __future__ import annotations

import re
import unicodedata

from .categories import DataCategoryRegistry, Level, builtin_registry, check_binding
from .graph import ConceptGraph, validate_graph
from .lexical import reconstructs
from .model import TermCollection, is_identifier, is_lang_tag
from .report import ValidationReport, error

# codes emitted here, for reference:
#   MALFORMED_ID DUPLICATE_ENTRY_ID STRUCT_CARD_LS STRUCT_CARD_TL DUPLICATE_LANG
#   BAD_LANG_TAG NOT_NFC BAD_TEXT EMPTY_TERM DUPLICATE_TERM TCL_INDEX TCL_MISMATCH
#   UNKNOWN_CATEGORY BAD_LEVEL BAD_VALUE RESERVED_KEY
# plus everything from graph.validate_graph.

RESERVED_GI_KEYS = ("title", "source")
# general categories Cc and Cs
_CONTROL_RE = re.compile("[\x00-\x1f\x7f-\x9f\ud800-\udfff]")


def _text_findings(text, path, findings, what="text"):
    if not unicodedata.is_normalized("NFC", text):
        findings.append(error("NOT_NFC", path, f"{what} is not NFC-normalised"))
    if text != text.strip():
        findings.append(error("BAD_TEXT", path, f"{what} has leading or trailing whitespace"))
    if _CONTROL_RE.search(text):
        findings.append(error("BAD_TEXT", path, f"{what} contains control characters"))


def _feature_findings(features, level, base, reg, findings):
    for key, value in features:
        path = f"{base}/feat:{key}"
        if not value:
            findings.append(error("BAD_TEXT", path, "empty feature value"))
        _text_findings(value, path, findings, "feature value")
        bad = check_binding(reg, level, key, value, path)
        if bad is not None:
            findings.append(bad)


def validate_collection(coll: TermCollection, reg: DataCategoryRegistry | None = None) -> ValidationReport:
    """Model-only checks (no graph)."""
    reg = reg if reg is not None else builtin_registry()
    findings = []
    if not is_identifier(coll.id):
        findings.append(error("MALFORMED_ID", "tdc", f"collection id {coll.id!r}"))
    _text_findings(coll.gi.title, "gi/feat:title", findings, "title")
    if coll.gi.source:
        _text_findings(coll.gi.source, "gi/feat:source", findings, "source")
    for key, _ in coll.gi.admin:
        if key in RESERVED_GI_KEYS:
            findings.append(error("RESERVED_KEY", f"gi/feat:{key}",
                                  f"{key} is a GlobalInfo field, not an admin entry"))
    _feature_findings([kv for kv in coll.gi.admin if kv[0] not in RESERVED_GI_KEYS],
                      Level.GI, "gi", reg, findings)
    _feature_findings(coll.ci.notes, Level.CI, "ci", reg, findings)

    seen_ids = set()
    for te in coll.entries:
        tp = f"te:{te.id}"
        if not is_identifier(te.id):
            findings.append(error("MALFORMED_ID", tp, f"entry id {te.id!r}"))
        if te.id in seen_ids:
            findings.append(error("DUPLICATE_ENTRY_ID", tp, "entry id used twice"))
        seen_ids.add(te.id)
        _feature_findings(te.concept_features, Level.TE, tp, reg, findings)
        if not te.language_sections:
            findings.append(error("STRUCT_CARD_LS", tp, "entry has no language section"))
        langs = set()
        for ls in te.language_sections:
            lp = f"{tp}/ls:{ls.lang}"
            if ls.lang in langs:
                findings.append(error("DUPLICATE_LANG", lp, f"language {ls.lang} opened twice"))
            langs.add(ls.lang)
            if not is_lang_tag(ls.lang):
                findings.append(error("BAD_LANG_TAG", lp, f"{ls.lang!r} is not a language tag"))
            _feature_findings(ls.features, Level.LS, lp, reg, findings)
            if not ls.terms:
                findings.append(error("STRUCT_CARD_TL", lp, "language section has no term"))
            seen_terms = set()
            for tl in ls.terms:
                if tl.term in seen_terms:
                    findings.append(error("DUPLICATE_TERM", f"{lp}/tl:{tl.term}",
                                          "term listed twice in one language section"))
                seen_terms.add(tl.term)
                _term_findings(tl, lp, reg, findings)
    return ValidationReport.of(findings)


def _term_findings(tl, lp, reg, findings):
    tlp = f"{lp}/tl:{tl.term}"
    if not tl.term.strip():
        findings.append(error("EMPTY_TERM", tlp, "term string is empty"))
    else:
        _text_findings(tl.term, tlp, findings, "term")
    _feature_findings(tl.features, Level.TL, tlp, reg, findings)
    if not tl.components:
        return
    indices = sorted(c.index for c in tl.components)
    if indices != list(range(1, len(indices) + 1)):
        findings.append(error("TCL_INDEX", tlp, f"component indices {indices} are not 1..n"))
    for c in tl.components:
        cp = f"{tlp}/tcl:{c.index}"
        if not c.component:
            findings.append(error("BAD_TEXT", cp, "empty component"))
        else:
            _text_findings(c.component, cp, findings, "component")
    if not reconstructs(tl.term, tl.components):
        findings.append(error("TCL_MISMATCH", tlp, "components do not reconstruct the term"))


def validate(coll: TermCollection, graph: ConceptGraph | None = None,
             reg: DataCategoryRegistry | None = None) -> ValidationReport:
    """Every structural, textual, binding and graph problem as a finding.

    Valid input yields an empty report (warnings such as ``MULTI_TOP`` aside).
    """
    report = validate_collection(coll, reg)
    if graph is not None:
        report = report + validate_graph(graph, coll)
    return report

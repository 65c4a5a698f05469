"""Blind interchange between terminology dialects through the pivot model.

Every conversion is ``emit(parse(x, source), target)``; there is no direct
path between two dialects.  ``gmt`` is accepted wherever a dialect is, and
carries everything.
"""

from __future__ import annotations

import os

from ..errors import TermforgeError
from ..graph import ConceptGraph
from ..termbase import Termbase, as_termbase
from ..validation import validate
from .gmt import emit_gmt, parse_gmt
from .listtml import COVERAGE as LISTTML_COVERAGE
from .listtml import parse_listtml, render_listtml
from .loss import Coverage, Loss, LossReport, feature_triples, restrict
from .nesttml import COVERAGE as NESTTML_COVERAGE
from .nesttml import parse_nesttml, render_nesttml

DIALECTS = ("listtml", "nesttml")
FORMATS = ("gmt",) + DIALECTS

_PARSERS = {"gmt": parse_gmt, "listtml": parse_listtml, "nesttml": parse_nesttml}
_RENDERERS = {"listtml": render_listtml, "nesttml": render_nesttml}
COVERAGES = {"listtml": LISTTML_COVERAGE, "nesttml": NESTTML_COVERAGE}

EXTENSIONS = {".gmt": "gmt", ".ltml": "listtml", ".listtml": "listtml",
              ".ntml": "nesttml", ".nesttml": "nesttml"}


def _check_format(d):
    if d not in FORMATS:
        raise TermforgeError("UNKNOWN_DIALECT", f"{d!r}; expected one of {', '.join(FORMATS)}")


def parse_dialect(data, d: str):
    """Read ``data`` in dialect ``d``; returns ``(collection, graph, LossReport)``.

    The loss report is always empty: a reader only produces what its dialect
    can express.
    """
    _check_format(d)
    tb = _PARSERS[d](data)
    return tb.collection, tb.graph, LossReport()


def restrict_to(coll, graph, d: str):
    """The lossy model dialect ``d`` would keep, and what it would drop."""
    _check_format(d)
    graph = graph if graph is not None else ConceptGraph()
    if d == "gmt":
        return Termbase(coll, graph).canonical() + (LossReport(),)
    kept, loss = restrict(coll, COVERAGES[d])
    return kept, graph.canonical(), loss


def emit_dialect(coll, graph, d: str, reg=None):
    """Canonical bytes of the termbase in dialect ``d`` plus its LossReport."""
    _check_format(d)
    graph = graph if graph is not None else ConceptGraph()
    if d == "gmt":
        return emit_gmt(coll, graph, reg), LossReport()
    report = validate(coll, graph, reg)
    if not report.ok:
        first = report.errors[0]
        raise TermforgeError("INVALID_MODEL",
                             f"{len(report.errors)} error(s), first: {first.code} at {first.path}")
    kept, kept_graph, loss = restrict_to(coll, graph, d)
    return _RENDERERS[d](kept, kept_graph), loss


def convert(data, source: str, target: str, reg=None):
    """``emit_dialect(parse_dialect(data, source), target)`` with combined losses."""
    coll, graph, parse_loss = parse_dialect(data, source)
    out, emit_loss = emit_dialect(coll, graph, target, reg)
    return out, parse_loss + emit_loss


def read_termbase(data, d: str) -> Termbase:
    coll, graph, _ = parse_dialect(data, d)
    return Termbase(coll, graph)


def write_termbase(tb, d: str, reg=None):
    tb = as_termbase(tb)
    return emit_dialect(tb.collection, tb.graph, d, reg)


def guess_format(path, default="gmt") -> str:
    return EXTENSIONS.get(os.path.splitext(str(path))[1].lower(), default)


__all__ = [
    "COVERAGES", "Coverage", "DIALECTS", "FORMATS", "Loss", "LossReport", "convert",
    "emit_dialect", "emit_gmt", "feature_triples", "guess_format", "parse_dialect",
    "parse_gmt", "read_termbase", "restrict_to", "write_termbase",
]

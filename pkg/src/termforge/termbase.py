from __future__ import annotations

from typing import NamedTuple

from .graph import ConceptGraph
from .model import TermCollection, canonicalize


class Termbase(NamedTuple):
    """A collection together with its concept graph, as read from one file."""

    collection: TermCollection
    graph: ConceptGraph = ConceptGraph()

    def canonical(self) -> "Termbase":
        return Termbase(canonicalize(self.collection), self.graph.canonical())


def as_termbase(value) -> Termbase:
    if isinstance(value, Termbase):
        return value
    if isinstance(value, TermCollection):
        return Termbase(value, ConceptGraph())
    coll, graph = value
    return Termbase(coll, graph)

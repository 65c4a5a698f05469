"""Typed concept relations: generic, partitive and associative edges.

Hierarchical edges are directed (generic: broader -> narrower, partitive:
whole -> part) and each hierarchical kind must stay acyclic on its own.
Associative edges keep the direction they were authored with but every query
walks them both ways.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Optional, Tuple

from .errors import TermforgeError
from .model import is_identifier
from .report import ValidationReport, error, warning

GENERIC = "generic"
PARTITIVE = "partitive"
ASSOCIATIVE = "associative"
KINDS = (GENERIC, PARTITIVE, ASSOCIATIVE)
HIERARCHICAL = (GENERIC, PARTITIVE)

SEED_SUBKINDS = (
    "container-content", "activity-tool", "cause-effect", "producer-product",
    "duration-instrument", "profession-tool", "material-source", "see-also", "antonym-of",
)


@dataclass(frozen=True, order=True)
class RelationKind:
    kind: str
    subkind: Optional[str] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise TermforgeError("BAD_KIND", f"unknown relation kind {self.kind!r}")
        if self.subkind == "":
            object.__setattr__(self, "subkind", None)

    @property
    def hierarchical(self) -> bool:
        return self.kind in HIERARCHICAL

    def __str__(self):
        return f"{self.kind}/{self.subkind}" if self.subkind else self.kind


@dataclass(frozen=True)
class ConceptRelation:
    source: str
    target: str
    rel: RelationKind

    def __post_init__(self):
        if isinstance(self.rel, str):
            object.__setattr__(self, "rel", RelationKind(self.rel))

    @property
    def kind(self):
        return self.rel.kind

    @property
    def subkind(self):
        return self.rel.subkind

    def sort_key(self):
        return (self.rel.kind, self.source, self.target, self.rel.subkind or "")

    def path(self) -> str:
        tail = f":{self.rel.subkind}" if self.rel.subkind else ""
        return f"rel:{self.rel.kind}:{self.source}:{self.target}{tail}"


def generic(broader, narrower) -> ConceptRelation:
    return ConceptRelation(broader, narrower, RelationKind(GENERIC))


def partitive(whole, part) -> ConceptRelation:
    return ConceptRelation(whole, part, RelationKind(PARTITIVE))


def associative(a, b, subkind=None) -> ConceptRelation:
    return ConceptRelation(a, b, RelationKind(ASSOCIATIVE, subkind))


class _Adjacency:
    """Per-kind forward/backward neighbour lists plus memoised reachability."""

    def __init__(self, edges):
        self.down = {k: defaultdict(list) for k in KINDS}
        self.up = {k: defaultdict(list) for k in KINDS}
        self.nodes = set()
        for e in edges:
            self.down[e.kind][e.source].append(e.target)
            self.up[e.kind][e.target].append(e.source)
            self.nodes.add(e.source)
            self.nodes.add(e.target)
        self._edges = tuple(edges)
        self._reach = {}
        self._forward = {}

    def reachable(self, kind, start, direction="down"):
        """Nodes reachable from ``start`` via >= 1 hierarchical edge of ``kind``."""
        key = (kind, start, direction)
        hit = self._reach.get(key)
        if hit is None:
            table = self.down[kind] if direction == "down" else self.up[kind]
            hit = frozenset(_walk(start, [lambda n: table.get(n, ())]))
            self._reach[key] = hit
        return hit


    def forward(self, filters, direction):
        """Neighbour map for :func:`related`; associative edges go both ways."""
        key = (filters, direction)
        fwd = self._forward.get(key)
        if fwd is None:
            fwd = defaultdict(list)
            for e in self._edges:
                if not _edge_matches(e, filters):
                    continue
                if e.kind == ASSOCIATIVE:
                    fwd[e.source].append(e.target)
                    fwd[e.target].append(e.source)
                elif direction == "down":
                    fwd[e.source].append(e.target)
                else:
                    fwd[e.target].append(e.source)
            self._forward[key] = fwd
        return fwd


def _walk(start, neighbour_fns):
    seen = set()
    stack = [start]
    while stack:
        node = stack.pop()
        for fn in neighbour_fns:
            for nxt in fn(node):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return seen


@dataclass(frozen=True)
class ConceptGraph:
    """An ordered bag of :class:`ConceptRelation` edges.

    Build graphs with :func:`add_relation` to get cycle, self-loop and
    duplicate protection; the plain constructor accepts anything so that
    deserialised graphs can be checked with :func:`validate_graph`.
    """

    edges: Tuple[ConceptRelation, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    @cached_property
    def _adj(self) -> _Adjacency:
        return _Adjacency(self.edges)

    @property
    def nodes(self) -> FrozenSet[str]:
        return frozenset(self._adj.nodes)

    def canonical(self) -> "ConceptGraph":
        return ConceptGraph(tuple(sorted(self.edges, key=ConceptRelation.sort_key)))


def add_relation(graph: ConceptGraph, rel: ConceptRelation) -> ConceptGraph:
    """Return ``graph`` plus ``rel``.

    Raises ``SELF_LOOP`` / ``CYCLE`` for hierarchical edges that would break
    acyclicity of their own kind, ``DUPLICATE_EDGE`` for repeats and
    ``BAD_SUBKIND`` for a subkind on a hierarchical edge.
    """
    if rel.rel.hierarchical:
        if rel.subkind is not None:
            raise TermforgeError("BAD_SUBKIND", f"{rel.kind} edges take no subkind")
        if rel.source == rel.target:
            raise TermforgeError("SELF_LOOP", rel.path())
    if rel in graph.edges:
        raise TermforgeError("DUPLICATE_EDGE", rel.path())
    if rel.rel.hierarchical and rel.source in graph._adj.reachable(rel.kind, rel.target):
        raise TermforgeError("CYCLE", f"{rel.path()} closes a {rel.kind} cycle")
    return ConceptGraph(graph.edges + (rel,))


def is_more_general(graph: ConceptGraph, a, b) -> bool:
    """Strict "broader than": ``b`` is reachable from ``a`` along generic edges."""
    return b in graph._adj.reachable(GENERIC, a)


def _edge_matches(e: ConceptRelation, filters) -> bool:
    if filters is None:
        return True
    for f in filters:
        if f.kind == e.kind and (f.subkind is None or f.subkind == e.subkind):
            return True
    return False


def _filters(kinds):
    """Normalise a kind filter: None/"any" -> None, else a tuple of RelationKind."""
    if kinds is None or kinds == "any":
        return None
    if isinstance(kinds, (str, RelationKind)):
        kinds = [kinds]
    out = []
    for k in kinds:
        if k == "any":
            return None
        out.append(k if isinstance(k, RelationKind) else RelationKind(k))
    return tuple(out)


def related(graph: ConceptGraph, c, kinds=None, direction="down", transitive=False) -> set:
    """Neighbours of ``c`` along edges matching ``kinds``.

    ``kinds`` is a kind name, a :class:`RelationKind` (a set subkind narrows
    associative matches), an iterable of those, or ``None``/``"any"``.
    Hierarchical edges are followed in ``direction`` (``"down"`` or ``"up"``);
    associative edges are always followed both ways.  With ``transitive`` the
    closure is returned; ``c`` itself is never part of the result.
    """
    if direction not in ("down", "up"):
        raise ValueError(f"direction must be 'down' or 'up', not {direction!r}")
    fwd = graph._adj.forward(_filters(kinds), direction)
    if transitive:
        found = _walk(c, [lambda n: fwd.get(n, ())])
    else:
        found = set(fwd.get(c, ()))
    found.discard(c)
    return found


def associations(graph: ConceptGraph, c):
    """Associative partners of ``c`` as sorted ``(other id, subkind)`` pairs."""
    out = set()
    for e in graph.edges:
        if e.kind != ASSOCIATIVE:
            continue
        if e.source == c:
            out.add((e.target, e.subkind or ""))
        elif e.target == c:
            out.add((e.source, e.subkind or ""))
    return sorted(out)


def tops(graph: ConceptGraph) -> set:
    """Concepts with outgoing generic edges and no incoming ones."""
    adj = graph._adj
    down, up = adj.down[GENERIC], adj.up[GENERIC]
    return {n for n, kids in down.items() if kids and not up.get(n)}


@dataclass(frozen=True)
class Subsystem:
    root: str
    nodes: FrozenSet[str]
    graph: ConceptGraph
    dropped_see_also: int = 0


def extract_subsystem(graph: ConceptGraph, root, kinds=(GENERIC, PARTITIVE)) -> Subsystem:
    """Sub-network reachable from ``root`` through edges of the given kinds.

    Every edge with both ends inside the reached node set is kept.  See-also
    links leaving the node set are dropped and counted.
    """
    if root not in graph._adj.nodes:
        raise TermforgeError("UNKNOWN_ROOT", str(root))
    kinds = tuple(kinds)
    reached = {root}
    if kinds:
        reached |= related(graph, root, kinds, "down", transitive=True)
    kept, dropped = [], 0
    for e in graph.edges:
        inside = (e.source in reached) + (e.target in reached)
        if inside == 2:
            kept.append(e)
        elif inside == 1 and e.kind == ASSOCIATIVE and e.subkind == "see-also":
            dropped += 1
    return Subsystem(root, frozenset(reached), ConceptGraph(tuple(kept)), dropped)


# -- structural checks --------------------------------------------------------

def _strongly_connected(nodes, succ):
    """Tarjan's algorithm, iterative; yields components as lists."""
    index, low, on_stack = {}, {}, set()
    stack, counter = [], 0
    for start in sorted(nodes):
        if start in index:
            continue
        work = [(start, iter(succ.get(start, ())))]
        index[start] = low[start] = counter
        counter += 1
        stack.append(start)
        on_stack.add(start)
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in index:
                    index[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(succ.get(nxt, ()))))
                    advanced = True
                    break
                if nxt in on_stack:
                    low[node] = min(low[node], index[nxt])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == node:
                        break
                yield comp


def _generic_families(graph: ConceptGraph):
    """Weakly connected components of the generic subgraph."""
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in graph.edges:
        if e.kind == GENERIC and e.source != e.target:
            ra, rb = find(e.source), find(e.target)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    families = defaultdict(set)
    for n in list(parent):
        families[find(n)].add(n)
    return list(families.values())


def validate_graph(graph: ConceptGraph, coll=None) -> ValidationReport:
    """Check acyclicity, self-loops, duplicates, subkinds and endpoint references.

    ``coll`` (a :class:`~termforge.model.TermCollection`) enables the
    ``DANGLING_REF`` check.  ``MULTI_TOP`` is a warning.
    """
    findings = []
    seen = set()
    known = None if coll is None else {te.id for te in coll.entries}
    for e in graph.edges:
        if e in seen:
            findings.append(error("DUPLICATE_EDGE", e.path(), "edge listed more than once"))
        seen.add(e)
        if e.rel.hierarchical:
            if e.source == e.target:
                findings.append(error("SELF_LOOP", e.path(), f"{e.kind} edge from a concept to itself"))
            if e.subkind is not None:
                findings.append(error("BAD_SUBKIND", e.path(), f"{e.kind} edges take no subkind"))
        elif e.subkind is not None and not is_identifier(e.subkind):
            findings.append(error("BAD_SUBKIND", e.path(), f"subkind {e.subkind!r} is not a token"))
        if known is not None:
            for end in (e.source, e.target):
                if end not in known:
                    findings.append(error("DANGLING_REF", e.path(), f"no entry {end!r}"))
    for kind in HIERARCHICAL:
        succ = defaultdict(list)
        nodes = set()
        for e in graph.edges:
            if e.kind == kind and e.source != e.target:
                succ[e.source].append(e.target)
                nodes.update((e.source, e.target))
        for comp in _strongly_connected(nodes, succ):
            if len(comp) > 1:
                members = sorted(comp)
                findings.append(error("CYCLE", f"graph:{kind}:{members[0]}",
                                      f"{kind} cycle through {', '.join(members)}"))
    top_set = tops(graph)
    for family in _generic_families(graph):
        roots = sorted(family & top_set)
        if len(roots) > 1:
            findings.append(warning("MULTI_TOP", f"graph:{GENERIC}:{roots[0]}",
                                    f"generic family has {len(roots)} tops: {', '.join(roots)}"))
    return ValidationReport.of(findings)

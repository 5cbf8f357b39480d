"""Temporal reachability over non-strict paths.

All sweeps visit edges once in label order. Edges sharing a label are
handled as a group: inside a group, paths may chain freely, so a group acts
like a static graph. With injective labels every group is a single edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import groupby
from typing import Iterable, Optional

from .core import (
    Edge,
    ForeignEdgeError,
    Spanner,
    TemporalBiClique,
    TemporalGraph,
    VertexRef,
    check_edges,
    require_injective,
)


# (label, u, v, edge) with global vertex ids u, v
Step = tuple[int, int, int, Edge]


def edge_stream(graph: TemporalGraph, edges: Optional[Iterable[Edge]] = None) -> list[Step]:
    """Edges as ``(label, u, v, edge)`` sorted ascending by label, then edge."""
    if edges is None:
        edges = graph.edges()
    lab = graph.labels
    out = []
    for e in edges:
        u, v = graph.endpoints(e)
        out.append((int(lab[e[0], e[1]]), u, v, e))
    out.sort()
    return out


def _groups(stream: list[Step]):
    for lab, grp in groupby(stream, key=lambda s: s[0]):
        yield lab, list(grp)


def _propagate(group: list[Step], value: dict[int, tuple[int, Optional[Edge]]], lab: int, ok) -> None:
    """Spread ``lab`` through one label group from vertices satisfying ``ok``."""
    if len(group) == 1:
        _, u, v, e = group[0]
        if u in value and v not in value and ok(value[u][0]):
            value[v] = (lab, e)
        elif v in value and u not in value and ok(value[v][0]):
            value[u] = (lab, e)
        return
    adj: dict[int, list[tuple[int, Edge]]] = {}
    for _, u, v, e in group:
        adj.setdefault(u, []).append((v, e))
        adj.setdefault(v, []).append((u, e))
    queue = [x for x in adj if x in value and ok(value[x][0])]
    while queue:
        x = queue.pop()
        for y, e in adj[x]:
            if y not in value:
                value[y] = (lab, e)
                queue.append(y)


def earliest_arrivals(graph: TemporalGraph, sources: Iterable[VertexRef], t_start: int,
                      edges: Optional[Iterable[Edge]] = None) -> dict[VertexRef, tuple[int, Optional[Edge]]]:
    """Foremost arrival label and parent edge for every reachable vertex.

    Sources arrive at ``t_start`` and have no parent. Only edges with label
    at least ``t_start`` are used.
    """
    stream = [s for s in edge_stream(graph, edges) if s[0] >= t_start]
    arr: dict[int, tuple[int, Optional[Edge]]] = {graph.vid(s): (t_start, None) for s in sources}
    for lab, group in _groups(stream):
        _propagate(group, arr, lab, lambda a, lab=lab: a <= lab)
    return {graph.vref(g): val for g, val in arr.items()}


def latest_departures(graph: TemporalGraph, sinks: Iterable[VertexRef], t_end: int,
                      edges: Optional[Iterable[Edge]] = None) -> dict[VertexRef, tuple[int, Optional[Edge]]]:
    """Latest first-edge label and child edge of a path into ``sinks`` (labels <= ``t_end``)."""
    stream = [s for s in edge_stream(graph, edges) if s[0] <= t_end]
    stream.reverse()
    dep: dict[int, tuple[int, Optional[Edge]]] = {graph.vid(s): (t_end, None) for s in sinks}
    for lab, group in _groups(stream):
        _propagate(group, dep, lab, lambda d, lab=lab: d >= lab)
    return {graph.vref(g): val for g, val in dep.items()}


@dataclass(frozen=True)
class ReachResult:
    """In- or Out-set of an anchor edge with a witnessing tree.

    ``tree`` maps every member other than the anchor's endpoints to the edge
    towards its parent; the anchor itself joins the two roots.
    """

    members: frozenset[VertexRef]
    tree: dict[VertexRef, Edge] = field(hash=False)
    anchor: Edge
    direction: str

    @property
    def tree_edges(self) -> set[Edge]:
        return set(self.tree.values()) | {self.anchor}

    def __len__(self) -> int:
        return len(self.members)


def _anchor_refs(graph: TemporalGraph, e: Edge) -> tuple[VertexRef, VertexRef]:
    u, v = graph.endpoints(e)
    return graph.vref(u), graph.vref(v)


def out_set(graph: TemporalGraph, e: Edge) -> ReachResult:
    require_injective(graph)
    check_edges(graph, [e])
    roots = _anchor_refs(graph, e)
    arr = earliest_arrivals(graph, roots, graph.label(e))
    tree = {v: p for v, (_, p) in arr.items() if p is not None}
    return ReachResult(frozenset(arr), tree, e, "out")


def in_set(graph: TemporalGraph, e: Edge) -> ReachResult:
    require_injective(graph)
    check_edges(graph, [e])
    roots = _anchor_refs(graph, e)
    dep = latest_departures(graph, roots, graph.label(e))
    tree = {v: c for v, (_, c) in dep.items() if c is not None}
    return ReachResult(frozenset(dep), tree, e, "in")


def connector_set(graph: TemporalGraph, e: Edge) -> set[Edge]:
    """In-tree plus out-tree of ``e``: joins every In(e) vertex to every Out(e) vertex."""
    return in_set(graph, e).tree_edges | out_set(graph, e).tree_edges


# --- bitset sweeps ----------------------------------------------------------

def _or_group(bits: list[int], group: list[Step]) -> None:
    if len(group) == 1:
        _, u, v, _ = group[0]
        m = bits[u] | bits[v]
        bits[u] = bits[v] = m
        return
    parent: dict[int, int] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, u, v, _ in group:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    acc: dict[int, int] = {}
    for x in list(parent):
        r = find(x)
        acc[r] = acc.get(r, 0) | bits[x]
    for x in parent:
        bits[x] = acc[find(x)]


def reach_bits(vertex_count: int, stream: list[Step], sources: list[int]) -> list[int]:
    """``bits[v]`` has bit ``k`` set iff ``sources[k]`` reaches ``v``."""
    bits = [0] * vertex_count
    for k, s in enumerate(sources):
        bits[s] |= 1 << k
    for _, group in _groups(stream):
        _or_group(bits, group)
    return bits


def all_out_sets(graph: TemporalGraph) -> dict[Edge, int]:
    """Out(e) as a bitset over global vertex ids, for every edge at once."""
    require_injective(graph)
    bits = [1 << v for v in range(graph.vertex_count)]
    out = {}
    for _, u, v, e in reversed(edge_stream(graph)):
        m = bits[u] | bits[v]
        bits[u] = bits[v] = m
        out[e] = m
    return out


def all_in_sets(graph: TemporalGraph) -> dict[Edge, int]:
    require_injective(graph)
    bits = [1 << v for v in range(graph.vertex_count)]
    res = {}
    for _, u, v, e in edge_stream(graph):
        m = bits[u] | bits[v]
        bits[u] = bits[v] = m
        res[e] = m
    return res


def bits_to_refs(graph: TemporalGraph, bits: int) -> frozenset[VertexRef]:
    out = []
    g = 0
    while bits:
        if bits & 1:
            out.append(graph.vref(g))
        bits >>= 1
        g += 1
    return frozenset(out)


# --- verification -----------------------------------------------------------

@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    witness: Optional[tuple[VertexRef, VertexRef]]
    pairs_checked: int

    def __bool__(self) -> bool:
        return self.ok


def _edges_of(S) -> list[Edge]:
    return sorted(S.edges if isinstance(S, Spanner) else S)


def verify_bispanner(graph: TemporalBiClique, S) -> VerificationReport:
    """Every a in A must reach every b in B inside ``S``.

    Repeated labels are allowed and follow non-strict semantics.
    """
    edges = _edges_of(S)
    check_edges(graph, edges)
    n_a, n_b = graph.n_a, graph.n_b
    bits = reach_bits(graph.vertex_count, edge_stream(graph, edges), list(range(n_a)))
    full = (1 << n_a) - 1
    witness = None
    best_a = None
    for j in range(n_b):
        missing = full & ~bits[n_a + j]
        if missing:
            a = (missing & -missing).bit_length() - 1
            if best_a is None or a < best_a:
                best_a, witness = a, (VertexRef("A", a), VertexRef("B", j))
    return VerificationReport(witness is None, witness, n_a * n_b)


def verify_spanner(graph: TemporalGraph, S) -> VerificationReport:
    """Every vertex must reach every other vertex inside ``S``."""
    edges = _edges_of(S)
    check_edges(graph, edges)
    nv = graph.vertex_count
    bits = reach_bits(nv, edge_stream(graph, edges), list(range(nv)))
    full = (1 << nv) - 1
    witness = None
    best_s = None
    for t in range(nv):
        missing = full & ~bits[t]
        if missing:
            s = (missing & -missing).bit_length() - 1
            if best_s is None or s < best_s:
                best_s, witness = s, (graph.vref(s), graph.vref(t))
    return VerificationReport(witness is None, witness, nv * (nv - 1))


__all__ = [
    "ReachResult",
    "VerificationReport",
    "ForeignEdgeError",
    "earliest_arrivals",
    "latest_departures",
    "in_set",
    "out_set",
    "connector_set",
    "all_in_sets",
    "all_out_sets",
    "bits_to_refs",
    "edge_stream",
    "reach_bits",
    "verify_bispanner",
    "verify_spanner",
]

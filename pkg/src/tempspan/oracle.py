"""Exhaustive ground truth for small instances."""

from __future__ import annotations

from typing import Callable

from .core import Edge, Spanner, TemporalBiClique, TemporalClique, TemporalGraph, VertexRef
from .reach import edge_stream, reach_bits

MAX_SIDE = 12
MAX_EDGES = 20
MAX_EDGES_BNB = 30


class GuardExceededError(ValueError):
    """The instance is too large for exhaustive search."""


def reach_bruteforce(graph: TemporalGraph, source: VertexRef, t_start: int) -> set[VertexRef]:
    """Vertices reachable from ``source`` by label-nondecreasing walks starting at or after ``t_start``.

    Depth-first search over ``(vertex, time)`` states; independent of the sweeps.
    """
    if isinstance(graph, TemporalBiClique):
        if max(graph.n_a, graph.n_b) > MAX_SIDE:
            raise GuardExceededError("reach_bruteforce is limited to 12 vertices per side")
    elif graph.n > MAX_SIDE:
        raise GuardExceededError("reach_bruteforce is limited to 12 vertices")
    adj: dict[int, list[tuple[int, int]]] = {}
    for lab, u, v, _ in edge_stream(graph):
        adj.setdefault(u, []).append((v, lab))
        adj.setdefault(v, []).append((u, lab))
    start = graph.vid(source)
    seen = {(start, t_start)}
    stack = [(start, t_start)]
    reached = {start}
    while stack:
        x, t = stack.pop()
        for y, lab in adj.get(x, ()):
            if lab >= t and (y, lab) not in seen:
                seen.add((y, lab))
                reached.add(y)
                stack.append((y, lab))
    return {graph.vref(g) for g in reached}


def _min_cover_search(edges: list[Edge], graph: TemporalGraph, sources: list[int],
                      ok: Callable[[list[int]], bool]) -> list[Edge]:
    """Lexicographically smallest minimum-size edge subset satisfying ``ok``.

    Iterative deepening on the subset size; within a size, include-first DFS
    over edges in sorted order, pruned by monotonicity (if chosen + undecided
    fails, every completion fails).
    """
    m = len(edges)
    nv = graph.vertex_count
    streams = {}

    def feasible(subset: tuple[int, ...]) -> bool:
        if subset not in streams:
            bits = reach_bits(nv, edge_stream(graph, [edges[i] for i in subset]), sources)
            streams[subset] = ok(bits)
        return streams[subset]

    if not feasible(tuple(range(m))):
        raise ValueError("the full edge set does not satisfy the requirement")
    if feasible(()):
        return []
    for k in range(1, m + 1):
        found = None

        def dfs(pos: int, chosen: list[int]) -> bool:
            nonlocal found
            if len(chosen) == k:
                if feasible(tuple(chosen)):
                    found = list(chosen)
                    return True
                return False
            if len(chosen) + (m - pos) < k:
                return False
            if not feasible(tuple(chosen) + tuple(range(pos, m))):
                return False
            chosen.append(pos)
            if dfs(pos + 1, chosen):
                return True
            chosen.pop()
            return dfs(pos + 1, chosen)

        if dfs(0, []):
            return [edges[i] for i in found]
    raise AssertionError("unreachable")


def min_bispanner_bruteforce(graph: TemporalBiClique, branch_and_bound: bool = False) -> tuple[Spanner, int]:
    limit = MAX_EDGES_BNB if branch_and_bound else MAX_EDGES
    if graph.edge_count > limit:
        raise GuardExceededError(f"min_bispanner_bruteforce is limited to {limit} edges")
    n_a, n_b = graph.n_a, graph.n_b
    full = (1 << n_a) - 1

    def ok(bits):
        return all(bits[n_a + j] == full for j in range(n_b))

    best = _min_cover_search(graph.edges(), graph, list(range(n_a)), ok)
    return Spanner(frozenset(best), "bi_spanner", "bruteforce"), len(best)


def min_spanner_bruteforce(graph: TemporalClique, branch_and_bound: bool = False) -> tuple[Spanner, int]:
    limit = MAX_EDGES_BNB if branch_and_bound else MAX_EDGES
    if graph.edge_count > limit:
        raise GuardExceededError(f"min_spanner_bruteforce is limited to {limit} edges")
    n = graph.n
    full = (1 << n) - 1

    def ok(bits):
        return all(b == full for b in bits)

    best = _min_cover_search(graph.edges(), graph, list(range(n)), ok)
    return Spanner(frozenset(best), "spanner", "bruteforce"), len(best)

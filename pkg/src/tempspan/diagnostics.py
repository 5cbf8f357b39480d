"""Structural measurements: pivot-sets, steep edges, label spread, reverted sets."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
import numpy as np

from .algorithms import _as_fraction, pivot_sizes, reverted_candidates, reverted_sizes
from .core import Edge, TemporalBiClique, VertexRef, require_injective
from .reach import all_in_sets, all_out_sets


@dataclass(frozen=True)
class EdgeProfile:
    """Per-edge values with the usual summaries."""

    values: dict[Edge, int]

    @property
    def max(self) -> int:
        return max(self.values.values())

    @property
    def min(self) -> int:
        return min(self.values.values())

    @property
    def argmax(self) -> Edge:
        return min(self.values, key=lambda e: (-self.values[e], e))

    @property
    def argmin(self) -> Edge:
        return min(self.values, key=lambda e: (self.values[e], e))

    @property
    def histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.values.values()).items()))

    def __getitem__(self, e: Edge) -> int:
        return self.values[e]


def pivot_profile(graph: TemporalBiClique) -> EdgeProfile:
    """``|In(e) & Out(e)|`` for every edge."""
    return EdgeProfile(pivot_sizes(graph))


def steep_edges(graph: TemporalBiClique, c) -> list[Edge]:
    """Edges whose ranks at the two endpoints differ by at least ``c * n``."""
    require_injective(graph)
    if graph.n_a != graph.n_b:
        raise ValueError("steep edges are defined for equal side sizes")
    c = _as_fraction(c)
    diff = np.abs(graph.rank_at_a - graph.rank_at_b)
    thresh = math.ceil(c * graph.n_a)  # integer ranks: diff >= c*n iff diff >= ceil(c*n)
    return [(int(i), int(j)) for i, j in zip(*np.nonzero(diff >= thresh))]


def label_spread(graph: TemporalBiClique, v: VertexRef, i: int, j: int, dual: bool = False) -> int:
    """Number of neighbours ``v'`` of ``v`` with ``i <= rank of {v, v'} at v' <= j``.

    With ``dual=True`` the rank is taken at ``v`` instead.
    """
    require_injective(graph)
    deg = graph.n_b if v.side == "A" else graph.n_a
    if not 1 <= i <= j <= deg:
        raise ValueError(f"bad rank range [{i}, {j}]")
    graph.vid(v)
    if v.side == "A":
        ranks = (graph.rank_at_a if dual else graph.rank_at_b)[v.index, :]
    else:
        ranks = (graph.rank_at_b if dual else graph.rank_at_a)[:, v.index]
    return int(np.count_nonzero((ranks >= i) & (ranks <= j)))


def reverted_profile(graph: TemporalBiClique, all_edges: bool = False) -> EdgeProfile:
    """``|M(e)|`` over the extremal-rank candidates (or every edge)."""
    cands = graph.edges() if all_edges else reverted_candidates(graph)
    return EdgeProfile(reverted_sizes(graph, cands))


def activity_positions(graph: TemporalBiClique, b: int) -> dict[VertexRef, list[int]]:
    """Order A by label at ``b_j``; for every vertex, the 1-based positions i
    at which it lies in the pivot-set of ``{a_(i), b_j}``.
    """
    ins, outs = all_in_sets(graph), all_out_sets(graph)
    order = np.argsort(graph.labels[:, b], kind="stable")
    hits: dict[VertexRef, list[int]] = {graph.vref(g): [] for g in range(graph.vertex_count)}
    for pos, a in enumerate(order, start=1):
        bits = ins[(int(a), b)] & outs[(int(a), b)]
        g = 0
        while bits:
            if bits & 1:
                hits[graph.vref(g)].append(pos)
            bits >>= 1
            g += 1
    return hits


__all__ = ["EdgeProfile", "activity_positions", "label_spread", "pivot_profile",
           "reverted_profile", "steep_edges"]

"""Bi-spanner constructions and the clique pipeline.

Every public algorithm verifies its own output unless ``verify=False`` and
raises :class:`VerificationError` if that check ever fails.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .core import (
    Edge,
    Spanner,
    TemporalBiClique,
    TemporalClique,
    extremal_arrays,
    induced_subinstance,
    is_extremally_matched,
    make_injective,
    matching_edges,
    require_injective,
)
from .generators import product
from .oracle import min_bispanner_bruteforce
from .reach import all_in_sets, all_out_sets, bits_to_refs, connector_set, in_set, out_set, verify_bispanner, verify_spanner
from .reduce import dismount_exhaustive, lift_spanner
from .transform import bispanner_to_clique_spanner, clique_to_biclique

log = logging.getLogger(__name__)

FALLBACKS = ("nlogn", "reverted_best", "fail")


class NotExtremallyMatchedError(ValueError):
    pass


class NoPivotEdgeError(RuntimeError):
    """No c-pivot-edge in a sub-instance while the fallback is ``fail``."""

    def __init__(self, instance: TemporalBiClique, c: Fraction):
        super().__init__(f"no {c}-pivot-edge in {instance!r}")
        self.instance = instance
        self.c = c


class VerificationError(RuntimeError):
    """An algorithm produced an edge set that fails verification (a bug)."""


def _as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(str(c))


@dataclass(frozen=True)
class PivotConfig:
    c: Fraction = Fraction(1, 4)
    fallback: str = "nlogn"

    def __post_init__(self):
        c = _as_fraction(self.c)
        if not 0 < c <= 1:
            raise ValueError("pivot threshold c must lie in (0, 1]")
        if self.fallback not in FALLBACKS:
            raise ValueError(f"fallback must be one of {FALLBACKS}")
        object.__setattr__(self, "c", c)


@dataclass
class AlgoReport:
    spanner: Spanner
    recursion_depth: int = 0
    fallback_invocations: int = 0
    bound_claimed: Optional[int] = None
    verified: bool = False
    extra: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.spanner.edges)

    @property
    def method(self) -> str:
        return self.spanner.method

    def to_dict(self) -> dict:
        d = {
            "method": self.method,
            "size": self.size,
            "recursion_depth": self.recursion_depth,
            "fallback_invocations": self.fallback_invocations,
            "bound_claimed": self.bound_claimed,
            "verified": self.verified,
        }
        d.update(self.extra)
        return d


def _finish(graph: TemporalBiClique, edges, method: str, verify: bool, **kw) -> AlgoReport:
    sp = Spanner(frozenset(edges), "bi_spanner", method)
    rep = AlgoReport(sp, **kw)
    if verify:
        check = verify_bispanner(graph, sp)
        if not check.ok:
            raise VerificationError(f"{method} output misses pair {check.witness}")
        rep.verified = True
    if rep.bound_claimed is not None and rep.size > rep.bound_claimed:
        raise VerificationError(f"{method} output has {rep.size} edges, above its bound {rep.bound_claimed}")
    return rep


def ceil_log2(n: int) -> int:
    return (n - 1).bit_length()


def nlogn_bound(n: int) -> int:
    return 2 * n * ceil_log2(n) + 2 * n


# --- O(n log n) divide and conquer ----------------------------------------

def _nlogn(graph: TemporalBiClique, depth: int) -> tuple[set[Edge], int]:
    if graph.n_a == 1:
        return set(graph.edges()), depth
    half = graph.n_a // 2
    result: set[Edge] = set()
    deepest = depth
    for part in (range(half), range(half, graph.n_a)):
        sub, smap = induced_subinstance(graph, part, range(graph.n_b))
        reduced, trace = dismount_exhaustive(sub)
        inner, d = _nlogn(reduced, depth + 1)
        deepest = max(deepest, d)
        result |= smap.lift_edges(lift_spanner(trace, inner).edges)
    return result, deepest


def bispanner_nlogn(graph: TemporalBiClique, verify: bool = True) -> AlgoReport:
    """Halve A, dismount both halves against all of B, recurse."""
    require_injective(graph)
    edges, depth = _nlogn(graph, 0)
    bound = nlogn_bound(graph.n_a) if graph.n_a == graph.n_b else None
    return _finish(graph, edges, "nlogn", verify, recursion_depth=depth, bound_claimed=bound)


# --- pivot edges ------------------------------------------------------------

def pivot_sizes(graph: TemporalBiClique) -> dict[Edge, int]:
    ins = all_in_sets(graph)
    outs = all_out_sets(graph)
    return {e: (ins[e] & outs[e]).bit_count() for e in graph.edges()}


def _best_pivot(graph: TemporalBiClique) -> tuple[Edge, int, int]:
    ins = all_in_sets(graph)
    outs = all_out_sets(graph)
    best_e, best_bits, best_k = None, 0, -1
    for e in graph.edges():  # lexicographic; first maximum wins
        bits = ins[e] & outs[e]
        k = bits.bit_count()
        if k > best_k:
            best_e, best_bits, best_k = e, bits, k
    return best_e, best_bits, best_k


def find_pivot_edge(graph: TemporalBiClique, config: PivotConfig = PivotConfig(), require_matched: bool = True):
    """Edge with the largest pivot-set if it reaches ``2 c n``, else ``None``.

    Returns ``(edge, pivot_set)``.
    """
    require_injective(graph)
    if require_matched and not is_extremally_matched(graph):
        raise NotExtremallyMatchedError(f"{graph!r} is not extremally matched")
    n = max(graph.n_a, graph.n_b)
    e, bits, k = _best_pivot(graph)
    if k >= 2 * config.c * n:
        return e, bits_to_refs(graph, bits)
    return None


def bispanner_pivot(graph: TemporalBiClique, config: PivotConfig = PivotConfig(), verify: bool = True) -> AlgoReport:
    """Divide and conquer around c-pivot-edges.

    Each extremally matched instance joins In(e) to Out(e) with the connector
    set of its best pivot edge and recurses on ``(A - In(e)) + B`` and
    ``A + (B - Out(e))``. Instances with at most two vertices per side are
    solved exactly.
    """
    require_injective(graph)
    c = config.c
    stats = {"fallbacks": 0, "depth": 0}

    def solve(D: TemporalBiClique, depth: int) -> set[Edge]:
        reduced, trace = dismount_exhaustive(D)
        inner = solve_matched(reduced, depth)
        return set(lift_spanner(trace, inner).edges)

    def solve_matched(D: TemporalBiClique, depth: int) -> set[Edge]:
        stats["depth"] = max(stats["depth"], depth)
        n = D.n_a
        if n <= 2:
            return set(min_bispanner_bruteforce(D)[0].edges)
        e, _, k = _best_pivot(D)
        if k < 2 * c * n:
            stats["fallbacks"] += 1
            if config.fallback == "fail":
                raise NoPivotEdgeError(D, c)
            log.debug("no %s-pivot-edge at depth %d (n=%d), falling back to %s", c, depth, n, config.fallback)
            if config.fallback == "nlogn":
                return _nlogn(D, depth)[0]
            return set(_reverted_best(D)[0])
        ins = in_set(D, e)
        outs = out_set(D, e)
        edges = ins.tree_edges | outs.tree_edges
        rest_a = [i for i in range(D.n_a) if ("A", i) not in ins.members]
        rest_b = [j for j in range(D.n_b) if ("B", j) not in outs.members]
        if rest_a:
            sub, smap = induced_subinstance(D, rest_a, range(D.n_b))
            edges |= smap.lift_edges(solve(sub, depth + 1))
        if rest_b:
            sub, smap = induced_subinstance(D, range(D.n_a), rest_b)
            edges |= smap.lift_edges(solve(sub, depth + 1))
        return edges

    edges = solve(graph, 0)
    bound = None
    if stats["fallbacks"] == 0:
        bound = int(4 * (graph.n_a + graph.n_b) / c)
    return _finish(graph, edges, "pivot", verify, recursion_depth=stats["depth"],
                   fallback_invocations=stats["fallbacks"], bound_claimed=bound,
                   extra={"c": str(c)})


# --- reverted edges ---------------------------------------------------------

def _require_matched(graph: TemporalBiClique) -> None:
    require_injective(graph)
    if not is_extremally_matched(graph):
        raise NotExtremallyMatchedError(f"{graph!r} is not extremally matched")


def _not_reverted_mask(graph: TemporalBiClique, e: Edge, ea: np.ndarray, lb: np.ndarray) -> np.ndarray:
    """``mask[a', b']`` is true iff ``{a', b'}`` is not e-reverted."""
    a, b = e
    col_b = graph.labels[:, b]  # lambda(x, b)
    row_a = graph.labels[a, :]  # lambda(a, y)
    via_b = col_b[:, None] <= col_b[lb][None, :]  # a' <=_b late(b')
    via_a = row_a[ea][:, None] <= row_a[None, :]  # early(a') <=_a b'
    return ~(via_b | via_a)


def reverted_set(graph: TemporalBiClique, e: Edge) -> set[Edge]:
    """Pairs ``{a', b'}`` that are NOT e-reverted."""
    _require_matched(graph)
    ea, _, _, lb = extremal_arrays(graph)
    ii, jj = np.nonzero(_not_reverted_mask(graph, e, ea, lb))
    return {(int(i), int(j)) for i, j in zip(ii, jj)}


def reverted_sizes(graph: TemporalBiClique, edges) -> dict[Edge, int]:
    _require_matched(graph)
    ea, _, _, lb = extremal_arrays(graph)
    return {e: int(np.count_nonzero(_not_reverted_mask(graph, e, ea, lb))) for e in edges}


def reverted_candidates(graph: TemporalBiClique) -> list[Edge]:
    """Edges that are earliest or latest at one of their endpoints."""
    early, late = matching_edges(graph)
    return sorted(early | late)


def _reverted_edges(graph: TemporalBiClique, e: Edge) -> set[Edge]:
    a, b = e
    edges = {(a, j) for j in range(graph.n_b)} | {(i, b) for i in range(graph.n_a)}
    early, late = matching_edges(graph)
    return edges | early | late | reverted_set(graph, e)


def bispanner_reverted(graph: TemporalBiClique, e: Edge, verify: bool = True) -> AlgoReport:
    """Star of ``e``'s endpoints plus both extremal matchings plus M(e)."""
    _require_matched(graph)
    edges = _reverted_edges(graph, e)
    n = graph.n_a
    m = len(reverted_set(graph, e))
    return _finish(graph, edges, "reverted", verify, bound_claimed=max(1, 4 * n - 4 + m),
                   extra={"anchor_a": e[0], "anchor_b": e[1], "not_reverted": m})


def _reverted_best(graph: TemporalBiClique, all_edges: bool = False) -> tuple[set[Edge], Edge, int]:
    cands = graph.edges() if all_edges else reverted_candidates(graph)
    sizes = reverted_sizes(graph, cands)
    e = min(cands, key=lambda x: (sizes[x], x))
    return _reverted_edges(graph, e), e, sizes[e]


def bispanner_reverted_best(graph: TemporalBiClique, all_edges: bool = False, verify: bool = True) -> AlgoReport:
    """:func:`bispanner_reverted` on the anchor minimising M(e)."""
    _require_matched(graph)
    edges, e, m = _reverted_best(graph, all_edges)
    n = graph.n_a
    return _finish(graph, edges, "reverted_best", verify, bound_claimed=max(1, 4 * n - 4 + m),
                   extra={"anchor_a": e[0], "anchor_b": e[1], "not_reverted": m})


def bispanner_reverted_reduced(graph: TemporalBiClique, verify: bool = True) -> AlgoReport:
    """Dismount to an extremally matched core, then :func:`bispanner_reverted_best`."""
    require_injective(graph)
    reduced, trace = dismount_exhaustive(graph)
    inner, e, m = _reverted_best(reduced)
    edges = lift_spanner(trace, inner).edges
    n = reduced.n_a
    bound = max(1, 4 * n - 4 + m) + 2 * len(trace.steps)
    a, b = trace.remap.lift_edge(e)
    return _finish(graph, edges, "reverted_best", verify, bound_claimed=bound,
                   extra={"anchor_a": a, "anchor_b": b, "not_reverted": m, "dismounted": len(trace.steps)})


# --- product graphs ---------------------------------------------------------

def product_bispanner(G: TemporalBiClique, H: TemporalBiClique, S_G, S_H,
                      strict: bool = True, verify: bool = True) -> AlgoReport:
    """Compose bi-spanners of G and H into one of their product graph.

    Every G-edge is lifted once per inner A-vertex towards the inner
    representative ``b*``; every H-edge is lifted once per outer B-vertex
    from the bag holding that vertex's latest G-spanner edge.
    """
    sg = sorted(S_G.edges if isinstance(S_G, Spanner) else S_G)
    sh = sorted(S_H.edges if isinstance(S_H, Spanner) else S_H)
    if strict:
        for name, host, S in (("S_G", G, sg), ("S_H", H, sh)):
            rep = verify_bispanner(host, S)
            if not rep.ok:
                raise ValueError(f"{name} is not a bi-spanner: {rep.witness} unreachable")
    P, bags = product(G, H)
    late_bag = {}
    for a, b in sg:
        if b not in late_bag or G.labels[a, b] > G.labels[late_bag[b], b]:
            late_bag[b] = a
    a_star, b_star = min(sh, key=lambda e: (int(H.labels[e]), e))
    edges = set()
    for a_g, b_g in sg:
        for a_h in range(H.n_a):
            edges.add((bags.a_index(a_g, a_h), bags.b_index(b_g, b_star)))
    for a_h, b_h in sh:
        for b_g in range(G.n_b):
            edges.add((bags.a_index(late_bag[b_g], a_h), bags.b_index(b_g, b_h)))
    bound = len(sg) * H.n_a + len(sh) * G.n_b
    return _finish(P, edges, "product", verify, bound_claimed=bound)


# --- portfolio and clique pipeline -----------------------------------------

def bispanner_portfolio(graph: TemporalBiClique, config: PivotConfig = PivotConfig(), verify: bool = True) -> AlgoReport:
    """Smallest verified result among reverted, pivot and nlogn; ties go to the earlier one."""
    require_injective(graph)
    runs = [
        bispanner_reverted_reduced(graph, verify=verify),
        bispanner_pivot(graph, PivotConfig(config.c, "nlogn"), verify=verify),
        bispanner_nlogn(graph, verify=verify),
    ]
    best = min(runs, key=lambda r: r.size)
    extra = {f"size_{r.method}": r.size for r in runs}
    extra["winner"] = best.method
    return AlgoReport(best.spanner, best.recursion_depth, best.fallback_invocations, best.bound_claimed,
                      best.verified, extra=extra)


def clique_spanner(clique: TemporalClique,
                   algo: Callable[[TemporalBiClique], AlgoReport] = bispanner_portfolio,
                   verify: bool = True) -> AlgoReport:
    """Spanner of a temporal clique via its duplicated bi-clique.

    Verification runs against the clique's original, possibly repeated,
    labels.
    """
    if clique.n == 0:
        raise ValueError("empty clique")
    inj = make_injective(clique)
    D, meta = clique_to_biclique(inj)
    # the image carries every clique label twice, as (u, v') and (v, u')
    bi = algo(make_injective(D))
    S = bispanner_to_clique_spanner(meta, bi.spanner)
    rep = AlgoReport(S, bi.recursion_depth, bi.fallback_invocations, bi.size, False,
                     extra={"bispanner_size": bi.size})
    if verify:
        check = verify_spanner(clique, S)
        if not check.ok:
            raise VerificationError(f"clique spanner misses pair {check.witness}")
        rep.verified = True
    return rep


ALGORITHMS = ("nlogn", "pivot", "reverted", "portfolio", "bruteforce")


def compute_bispanner(graph: TemporalBiClique, algo: str = "portfolio",
                      config: PivotConfig = PivotConfig(), verify: bool = True) -> AlgoReport:
    """Run ``algo`` on any bi-clique, repeated labels included.

    Repeated labels are broken by :func:`make_injective`. That relabeling
    refines the label order, so a bi-spanner of the relabeled instance is one
    of the original too; verification runs on the original labels.
    """
    inj = graph if graph.injective else make_injective(graph)
    if algo == "nlogn":
        rep = bispanner_nlogn(inj, verify=False)
    elif algo == "pivot":
        rep = bispanner_pivot(inj, config, verify=False)
    elif algo == "reverted":
        rep = bispanner_reverted_reduced(inj, verify=False)
    elif algo == "portfolio":
        rep = bispanner_portfolio(inj, config, verify=False)
    elif algo == "bruteforce":
        S, _ = min_bispanner_bruteforce(graph)
        rep = AlgoReport(S)
    else:
        raise ValueError(f"unknown algorithm {algo!r}; expected one of {ALGORITHMS}")
    if verify:
        check = verify_bispanner(graph, rep.spanner)
        if not check.ok:
            raise VerificationError(f"{rep.method} output misses pair {check.witness}")
    rep.verified = verify
    return rep


__all__ = [
    "ALGORITHMS",
    "AlgoReport",
    "NoPivotEdgeError",
    "NotExtremallyMatchedError",
    "PivotConfig",
    "VerificationError",
    "bispanner_nlogn",
    "bispanner_pivot",
    "bispanner_portfolio",
    "bispanner_reverted",
    "bispanner_reverted_best",
    "bispanner_reverted_reduced",
    "clique_spanner",
    "compute_bispanner",
    "connector_set",
    "find_pivot_edge",
    "nlogn_bound",
    "pivot_sizes",
    "product_bispanner",
    "reverted_candidates",
    "reverted_set",
    "reverted_sizes",
]

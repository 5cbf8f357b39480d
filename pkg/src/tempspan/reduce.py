"""Dismounting: delegate a vertex's obligations to a twin and drop it."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .core import (
    A,
    B,
    Edge,
    Spanner,
    SubMap,
    TemporalBiClique,
    VertexRef,
    require_injective,
)
from .reach import verify_bispanner


@dataclass(frozen=True)
class DismountStep:
    """``removed`` delegates to ``via``; both edges join the spanner.

    Indices are those of the instance the trace started from.
    """

    removed: VertexRef
    via: VertexRef
    included_edges: tuple[Edge, Edge]


@dataclass
class ReductionTrace:
    steps: list[DismountStep] = field(default_factory=list)
    final_instance: Optional[TemporalBiClique] = None
    remap: Optional[SubMap] = None

    @property
    def included_edges(self) -> set[Edge]:
        return {e for s in self.steps for e in s.included_edges}


def _find_in_matrix(lab: np.ndarray) -> Optional[tuple[str, int, int]]:
    """First dismountable vertex of a label matrix as ``(side, vertex, delegate)``.

    A-vertices are scanned before B-vertices, each in ascending order, and the
    smallest delegate wins.
    """
    n_a, n_b = lab.shape
    ea, _, _, lb = _extremal_arrays_from(lab)
    if n_a > 1:
        # a is dismountable via a' iff lab[a, ea[a']] <= lab[a', ea[a']]
        own = lab[np.arange(n_a), ea]
        cand = lab[:, ea] <= own[None, :]
        np.fill_diagonal(cand, False)
        hits = cand.any(axis=1)
        if hits.any():
            a = int(np.argmax(hits))
            return "A", a, int(np.argmax(cand[a]))
    if n_b > 1:
        # b is dismountable via b' iff lab[lb[b'], b'] <= lab[lb[b'], b]
        own = lab[lb, np.arange(n_b)]
        cand = lab[lb, :].T >= own[None, :]
        np.fill_diagonal(cand, False)
        hits = cand.any(axis=1)
        if hits.any():
            b = int(np.argmax(hits))
            return "B", b, int(np.argmax(cand[b]))
    return None


def _extremal_arrays_from(lab: np.ndarray):
    return lab.argmin(axis=1), lab.argmin(axis=0), lab.argmax(axis=1), lab.argmax(axis=0)


def _step_for(lab: np.ndarray, side: str, v: int, d: int) -> tuple[Edge, Edge]:
    if side == "A":
        b = int(lab[d].argmin())
        return (v, b), (d, b)
    a = int(lab[:, d].argmax())
    return (a, d), (a, v)


def find_dismountable(graph: TemporalBiClique) -> Optional[DismountStep]:
    require_injective(graph)
    hit = _find_in_matrix(graph.labels)
    if hit is None:
        return None
    side, v, d = hit
    ref = A if side == "A" else B
    return DismountStep(ref(v), ref(d), _step_for(graph.labels, side, v, d))


def dismount_exhaustive(graph: TemporalBiClique) -> tuple[TemporalBiClique, ReductionTrace]:
    """Remove dismountable vertices until the instance is extremally matched."""
    require_injective(graph)
    act_a = list(range(graph.n_a))
    act_b = list(range(graph.n_b))
    lab = graph.labels
    steps = []
    while True:
        hit = _find_in_matrix(lab)
        if hit is None:
            break
        side, v, d = hit
        (x1, y1), (x2, y2) = _step_for(lab, side, v, d)
        edges = ((act_a[x1], act_b[y1]), (act_a[x2], act_b[y2]))
        if side == "A":
            steps.append(DismountStep(A(act_a[v]), A(act_a[d]), edges))
            del act_a[v]
            lab = np.delete(lab, v, axis=0)
        else:
            steps.append(DismountStep(B(act_b[v]), B(act_b[d]), edges))
            del act_b[v]
            lab = np.delete(lab, v, axis=1)
    final = TemporalBiClique(lab)
    return final, ReductionTrace(steps, final, SubMap(tuple(act_a), tuple(act_b)))


def lift_spanner(trace: ReductionTrace, sub, strict: bool = False) -> Spanner:
    """Map a bi-spanner of ``trace.final_instance`` back to the original instance."""
    edges = sub.edges if isinstance(sub, Spanner) else frozenset(sub)
    if strict:
        rep = verify_bispanner(trace.final_instance, edges)
        if not rep.ok:
            raise ValueError(f"sub-spanner is not a bi-spanner of the reduced instance: {rep.witness}")
    lifted = trace.remap.lift_edges(edges) | trace.included_edges
    method = sub.method if isinstance(sub, Spanner) else ""
    return Spanner(frozenset(lifted), "bi_spanner", method)

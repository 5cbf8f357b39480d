"""Translations between cliques and bi-cliques, and of spanners across them."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Edge, ForeignEdgeError, Spanner, TemporalBiClique, TemporalClique, require_injective


@dataclass(frozen=True)
class CliqueImage:
    """Bookkeeping for :func:`clique_to_biclique`: b_j is the copy of v_j."""

    n: int
    mu: int


@dataclass(frozen=True)
class BicliqueImage:
    """Bookkeeping for :func:`biclique_to_clique`: A -> 0..n-1, B -> n..2n-1."""

    n: int
    mu: int

    def cross_edges(self, edges) -> set[Edge]:
        n = self.n
        return {(i, j - n) for i, j in edges if i < n <= j}


def clique_to_biclique(clique: TemporalClique) -> tuple[TemporalBiClique, CliqueImage]:
    """Duplicate every vertex; the copy edge ``{v, v'}`` gets a label later than all others."""
    require_injective(clique)
    n = clique.n
    lab = np.array(clique.labels)
    mu = int(lab.max()) + 1 if n > 1 else 1
    np.fill_diagonal(lab, mu)
    return TemporalBiClique(lab), CliqueImage(n, mu)


def bispanner_to_clique_spanner(meta: CliqueImage, S_D) -> Spanner:
    edges = S_D.edges if isinstance(S_D, Spanner) else S_D
    out = set()
    for u, v in edges:
        if not (0 <= u < meta.n and 0 <= v < meta.n):
            raise ForeignEdgeError(f"edge {(u, v)} is not an edge of the {meta.n}x{meta.n} image")
        if u != v:
            out.add((min(u, v), max(u, v)))
    method = S_D.method if isinstance(S_D, Spanner) else ""
    return Spanner(frozenset(out), "spanner", method)


def biclique_to_clique(biclique: TemporalBiClique) -> tuple[TemporalClique, BicliqueImage]:
    """Clique on ``A + B``: B-internal edges at 0, cross edges shifted by one, A-internal at ``mu``.

    The internal labels repeat, so the image is not injective.
    """
    if biclique.n_a != biclique.n_b:
        raise ValueError("biclique_to_clique needs equal side sizes")
    n = biclique.n_a
    mu = int(biclique.labels.max()) + 2
    mat = np.zeros((2 * n, 2 * n), dtype=np.int64)
    mat[:n, :n] = mu
    mat[:n, n:] = biclique.labels + 1
    mat[n:, :n] = (biclique.labels + 1).T
    return TemporalClique(mat), BicliqueImage(n, mu)


def clique_spanner_to_bispanner(meta: BicliqueImage, S) -> Spanner:
    """Keep only the cross edges of a spanner of the image."""
    edges = S.edges if isinstance(S, Spanner) else S
    return Spanner(frozenset(meta.cross_edges(edges)), "bi_spanner", getattr(S, "method", ""))

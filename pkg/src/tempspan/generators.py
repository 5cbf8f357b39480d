"""Instance families: shifted matching graphs, product graphs, random instances.

Random instances draw from numpy's PCG64 bit generator
(``numpy.random.default_rng(seed)``); the labels are a uniform permutation
of ``1..|E|`` assigned to the edges in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Edge, TemporalBiClique, TemporalClique, _INT64_MAX, _rank_compress


def ringshift(n: int) -> TemporalBiClique:
    """Shifted matching graph: label of ``{a_i, b_j}`` is ``(j - i) mod n``."""
    if n < 1:
        raise ValueError("ringshift needs n >= 1")
    i = np.arange(n)
    return TemporalBiClique((i[None, :] - i[:, None]) % n)


@dataclass(frozen=True)
class BagMap:
    """Projection of a product graph onto its outer graph."""

    n_a_inner: int
    n_b_inner: int

    def a(self, i: int) -> tuple[int, int]:
        return divmod(i, self.n_a_inner)

    def b(self, j: int) -> tuple[int, int]:
        return divmod(j, self.n_b_inner)

    def a_index(self, outer: int, inner: int) -> int:
        return outer * self.n_a_inner + inner

    def b_index(self, outer: int, inner: int) -> int:
        return outer * self.n_b_inner + inner

    def edge(self, e: Edge) -> Edge:
        return (e[0] // self.n_a_inner, e[1] // self.n_b_inner)


def product(G: TemporalBiClique, H: TemporalBiClique) -> tuple[TemporalBiClique, BagMap]:
    """Product graph with lexicographically embedded label pairs.

    Vertex ``(x, y)`` with outer index ``x`` and inner index ``y`` gets index
    ``x * |inner side| + y``.
    """
    lg, lh = G.labels, H.labels
    base = int(lh.max()) + 1
    if int(lg.max()) > (_INT64_MAX - base) // base:
        lh = _rank_compress(lh)
        lg = _rank_compress(lg)
        base = int(lh.max()) + 1
    big = lg[:, None, :, None] * base + lh[None, :, None, :]
    n_a = G.n_a * H.n_a
    n_b = G.n_b * H.n_b
    return TemporalBiClique(big.reshape(n_a, n_b)), BagMap(H.n_a, H.n_b)


def smsmbg(m: int, k: int) -> tuple[TemporalBiClique, BagMap]:
    """Product of the shifted matching graphs on ``m`` (outer) and ``k`` (inner) vertices."""
    if m < 1 or k < 1:
        raise ValueError("smsmbg needs m, k >= 1")
    return product(ringshift(m), ringshift(k))


def random_biclique(n_a: int, n_b: int, seed: int) -> TemporalBiClique:
    if n_a < 1 or n_b < 1:
        raise ValueError("sizes must be positive")
    rng = np.random.default_rng(seed)
    labels = rng.permutation(n_a * n_b) + 1
    return TemporalBiClique(labels.reshape(n_a, n_b))


def random_clique(n: int, seed: int) -> TemporalClique:
    if n < 1:
        raise ValueError("size must be positive")
    rng = np.random.default_rng(seed)
    m = n * (n - 1) // 2
    mat = np.zeros((n, n), dtype=np.int64)
    mat[np.triu_indices(n, 1)] = rng.permutation(m) + 1
    return TemporalClique(mat)


def random_matched_biclique(n: int, seed: int) -> TemporalBiClique:
    """Random extremally matched ``n x n`` instance.

    Two disjoint random perfect matchings take the ``n`` smallest and the
    ``n`` largest labels; the other edges get a random permutation of the
    labels in between.
    """
    if n < 1:
        raise ValueError("size must be positive")
    rng = np.random.default_rng(seed)
    rows = np.arange(n)
    early = rng.permutation(n)
    late = rng.permutation(n)
    while n > 1 and np.any(early == late):
        late = rng.permutation(n)
    lab = (rng.permutation(n * n) + n + 1).reshape(n, n)
    lab[rows, early] = rng.permutation(n) + 1
    if n > 1:
        lab[rows, late] = rng.permutation(n) + n * n + n + 1
    return TemporalBiClique(lab)

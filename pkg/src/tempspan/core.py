"""Data model for complete temporal graphs.

Bi-cliques store an ``(n_a, n_b)`` label matrix, cliques a symmetric
``(n, n)`` matrix whose diagonal is ignored. Vertices are dense 0-based
indices. Edges are plain tuples: ``(i, j)`` means ``{a_i, b_j}`` in a
bi-clique and ``{v_i, v_j}`` with ``i < j`` in a clique.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Union

import numpy as np

Edge = tuple[int, int]

_INT64_MAX = np.iinfo(np.int64).max


class NonInjectiveError(ValueError):
    """Raised when an operation needs pairwise distinct labels."""


class ForeignEdgeError(ValueError):
    """Raised when an edge does not belong to the host graph."""


class VertexRef(NamedTuple):
    side: str | None  # "A", "B", or None for clique vertices
    index: int

    def __repr__(self) -> str:
        if self.side is None:
            return f"v{self.index}"
        return f"{self.side.lower()}{self.index}"


def A(i: int) -> VertexRef:
    return VertexRef("A", i)


def B(j: int) -> VertexRef:
    return VertexRef("B", j)


def V(i: int) -> VertexRef:
    return VertexRef(None, i)


def _as_label_matrix(labels) -> np.ndarray:
    raw = np.asarray(labels)
    if raw.size and raw.dtype.kind not in "iub":
        if raw.dtype.kind != "f" or not np.all(np.mod(raw, 1) == 0):
            raise ValueError("labels must be non-negative integers")
    arr = np.array(raw, dtype=np.int64, copy=True)
    if arr.ndim != 2:
        raise ValueError("label matrix must be two-dimensional")
    if arr.size and arr.min() < 0:
        raise ValueError("labels must be non-negative integers")
    arr.setflags(write=False)
    return arr


class TemporalBiClique:
    """Complete bipartite temporal graph ``(A, B, labels)``."""

    kind = "biclique"

    def __init__(self, labels):
        arr = _as_label_matrix(labels)
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("both sides of a bi-clique must be non-empty")
        self.labels = arr

    @property
    def n_a(self) -> int:
        return self.labels.shape[0]

    @property
    def n_b(self) -> int:
        return self.labels.shape[1]

    @property
    def vertex_count(self) -> int:
        return self.n_a + self.n_b

    @property
    def edge_count(self) -> int:
        return self.n_a * self.n_b

    @cached_property
    def injective(self) -> bool:
        return np.unique(self.labels).size == self.labels.size

    def label(self, e: Edge) -> int:
        return int(self.labels[e[0], e[1]])

    def edges(self) -> list[Edge]:
        return [(i, j) for i in range(self.n_a) for j in range(self.n_b)]

    def has_edge(self, e: Edge) -> bool:
        return 0 <= e[0] < self.n_a and 0 <= e[1] < self.n_b

    # global vertex ids: A-vertex i -> i, B-vertex j -> n_a + j
    def vid(self, v: VertexRef) -> int:
        if v.side == "A" and 0 <= v.index < self.n_a:
            return v.index
        if v.side == "B" and 0 <= v.index < self.n_b:
            return self.n_a + v.index
        raise ValueError(f"{v!r} is not a vertex of this bi-clique")

    def vref(self, gid: int) -> VertexRef:
        return A(gid) if gid < self.n_a else B(gid - self.n_a)

    def endpoints(self, e: Edge) -> tuple[int, int]:
        return e[0], self.n_a + e[1]

    def edge_between(self, u: VertexRef, v: VertexRef) -> Edge:
        if u.side == "B":
            u, v = v, u
        if u.side != "A" or v.side != "B":
            raise ForeignEdgeError(f"no edge between {u!r} and {v!r}")
        return (u.index, v.index)

    @cached_property
    def rank_at_a(self) -> np.ndarray:
        """``rank_at_a[i, j]``: 1-based rank of edge ``(i, j)`` among a_i's edges."""
        return np.argsort(np.argsort(self.labels, axis=1, kind="stable"), axis=1) + 1

    @cached_property
    def rank_at_b(self) -> np.ndarray:
        return np.argsort(np.argsort(self.labels, axis=0, kind="stable"), axis=0) + 1

    def swapped(self) -> TemporalBiClique:
        """The same graph with the roles of A and B exchanged."""
        return TemporalBiClique(self.labels.T)

    def __eq__(self, other) -> bool:
        return isinstance(other, TemporalBiClique) and np.array_equal(self.labels, other.labels)

    def __hash__(self):
        return hash((self.labels.shape, self.labels.tobytes()))

    def __repr__(self) -> str:
        return f"TemporalBiClique({self.n_a}x{self.n_b})"


class TemporalClique:
    """Complete temporal graph ``(V, labels)``; only the upper triangle matters."""

    kind = "clique"

    def __init__(self, labels):
        arr = np.array(labels, dtype=np.int64, copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("clique labels must be a square matrix")
        n = arr.shape[0]
        iu = np.triu_indices(n, 1)
        if iu[0].size and arr[iu].min() < 0:
            raise ValueError("labels must be non-negative integers")
        sym = np.zeros_like(arr)
        sym[iu] = arr[iu]
        sym = sym + sym.T
        sym.setflags(write=False)
        self.labels = sym

    @classmethod
    def from_edge_labels(cls, n: int, labels: dict[Edge, int]) -> TemporalClique:
        mat = np.zeros((n, n), dtype=np.int64)
        for (i, j), lab in labels.items():
            i, j = min(i, j), max(i, j)
            mat[i, j] = lab
        return cls(mat)

    @property
    def n(self) -> int:
        return self.labels.shape[0]

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        return self.n * (self.n - 1) // 2

    @cached_property
    def injective(self) -> bool:
        vals = self.labels[np.triu_indices(self.n, 1)]
        return np.unique(vals).size == vals.size

    def label(self, e: Edge) -> int:
        return int(self.labels[e[0], e[1]])

    def edges(self) -> list[Edge]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)]

    def has_edge(self, e: Edge) -> bool:
        return 0 <= e[0] < e[1] < self.n

    def vid(self, v: VertexRef) -> int:
        if v.side is None and 0 <= v.index < self.n:
            return v.index
        raise ValueError(f"{v!r} is not a vertex of this clique")

    def vref(self, gid: int) -> VertexRef:
        return V(gid)

    def endpoints(self, e: Edge) -> tuple[int, int]:
        return e[0], e[1]

    def edge_between(self, u: VertexRef, v: VertexRef) -> Edge:
        if u.side is not None or v.side is not None or u.index == v.index:
            raise ForeignEdgeError(f"no edge between {u!r} and {v!r}")
        return (min(u.index, v.index), max(u.index, v.index))

    def __eq__(self, other) -> bool:
        return isinstance(other, TemporalClique) and np.array_equal(self.labels, other.labels)

    def __hash__(self):
        return hash((self.labels.shape, self.labels.tobytes()))

    def __repr__(self) -> str:
        return f"TemporalClique({self.n})"


TemporalGraph = Union[TemporalBiClique, TemporalClique]


@dataclass(frozen=True)
class Spanner:
    """Edge subset claimed to preserve (bi-)reachability."""

    edges: frozenset[Edge]
    kind: str = "bi_spanner"  # or "spanner"
    method: str = ""

    def __post_init__(self):
        if self.kind not in ("spanner", "bi_spanner"):
            raise ValueError(f"unknown spanner kind {self.kind!r}")
        object.__setattr__(self, "edges", frozenset((int(i), int(j)) for i, j in self.edges))

    def __len__(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def require_injective(graph: TemporalGraph) -> None:
    if not graph.injective:
        raise NonInjectiveError(f"{graph!r} has repeated labels; apply make_injective first")


def _rows_distinct(mat: np.ndarray) -> bool:
    srt = np.sort(mat, axis=1)
    return not np.any(srt[:, 1:] == srt[:, :-1])


def locally_injective(graph: TemporalGraph) -> bool:
    """No two edges at the same vertex share a label."""
    lab = graph.labels
    if isinstance(graph, TemporalBiClique):
        return _rows_distinct(lab) and _rows_distinct(lab.T)
    n = graph.n
    if n < 3:
        return True
    off = lab[~np.eye(n, dtype=bool)].reshape(n, n - 1)
    return _rows_distinct(off)


def require_locally_injective(graph: TemporalGraph) -> None:
    if not locally_injective(graph):
        raise NonInjectiveError(f"{graph!r} has two equally labelled edges at one vertex")


def check_edges(graph: TemporalGraph, edges: Iterable[Edge]) -> None:
    for e in edges:
        if not graph.has_edge(e):
            raise ForeignEdgeError(f"edge {e} is not an edge of {graph!r}")


# --- injective relabeling -------------------------------------------------

def _rank_compress(values: np.ndarray) -> np.ndarray:
    _, inv = np.unique(values, return_inverse=True)
    return inv.reshape(values.shape).astype(np.int64)


def _injective_values(values: np.ndarray) -> np.ndarray:
    """lambda'(e) = lambda(e) * (|E| + 1) + f(e) for values in tie-break order."""
    m = values.size
    if m and int(values.max()) > (_INT64_MAX - m) // (m + 1):
        values = _rank_compress(values)
    f = np.arange(1, m + 1, dtype=np.int64)
    return values * (m + 1) + f


def make_injective(graph: TemporalGraph) -> TemporalGraph:
    """Order-preserving injective relabeling.

    Edges are numbered 1..|E| in lexicographic (row, column) order, which is
    the tie-break. Labels too large for the product are first compressed to
    their ranks; only the order matters.
    """
    if isinstance(graph, TemporalBiClique):
        flat = graph.labels.reshape(-1)  # row-major == lexicographic (i, j)
        return TemporalBiClique(_injective_values(flat).reshape(graph.labels.shape))
    n = graph.n
    iu = np.triu_indices(n, 1)  # row-major upper triangle == sorted (i, j), i < j
    mat = np.zeros((n, n), dtype=np.int64)
    mat[iu] = _injective_values(graph.labels[iu])
    return TemporalClique(mat)


# --- extremal neighbours --------------------------------------------------

@dataclass(frozen=True)
class ExtremalMatching:
    """Earliest/latest neighbour of every vertex as global vertex ids."""

    early_ids: tuple[int, ...]
    late_ids: tuple[int, ...]
    early_is_perfect: bool
    late_is_perfect: bool
    refs: tuple[VertexRef, ...]

    @property
    def extremally_matched(self) -> bool:
        return self.early_is_perfect and self.late_is_perfect

    @property
    def early(self) -> dict[VertexRef, VertexRef]:
        return {self.refs[v]: self.refs[u] for v, u in enumerate(self.early_ids)}

    @property
    def late(self) -> dict[VertexRef, VertexRef]:
        return {self.refs[v]: self.refs[u] for v, u in enumerate(self.late_ids)}


def _is_perfect(partner: np.ndarray) -> bool:
    return bool(np.all(partner[partner] == np.arange(partner.size)))


def extremal_arrays(graph: TemporalBiClique) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """``(early_a, early_b, late_a, late_b)`` as side-local indices."""
    lab = graph.labels
    return lab.argmin(axis=1), lab.argmin(axis=0), lab.argmax(axis=1), lab.argmax(axis=0)


def extremal_matching(graph: TemporalGraph) -> ExtremalMatching:
    """Earliest and latest neighbour of every vertex.

    Only needs distinct labels around each vertex, so R_n qualifies.
    """
    require_locally_injective(graph)
    refs = tuple(graph.vref(g) for g in range(graph.vertex_count))
    if isinstance(graph, TemporalBiClique):
        ea, eb, la, lb = extremal_arrays(graph)
        na = graph.n_a
        early = np.concatenate([ea + na, eb])
        late = np.concatenate([la + na, lb])
    else:
        lab = graph.labels.astype(float)
        if graph.n < 2:
            raise ValueError("a clique needs at least two vertices to have neighbours")
        np.fill_diagonal(lab, np.inf)
        early = lab.argmin(axis=1)
        np.fill_diagonal(lab, -np.inf)
        late = lab.argmax(axis=1)
    return ExtremalMatching(
        early_ids=tuple(int(x) for x in early),
        late_ids=tuple(int(x) for x in late),
        early_is_perfect=_is_perfect(early),
        late_is_perfect=_is_perfect(late),
        refs=refs,
    )


def is_extremally_matched(graph: TemporalBiClique) -> bool:
    if graph.n_a != graph.n_b:
        return False
    ea, eb, la, lb = extremal_arrays(graph)
    return bool(np.all(eb[ea] == np.arange(graph.n_a)) and np.all(lb[la] == np.arange(graph.n_a)))


def matching_edges(graph: TemporalBiClique) -> tuple[set[Edge], set[Edge]]:
    """Edge sets of all earliest and all latest edges (both sides)."""
    ea, eb, la, lb = extremal_arrays(graph)
    early = {(i, int(ea[i])) for i in range(graph.n_a)} | {(int(eb[j]), j) for j in range(graph.n_b)}
    late = {(i, int(la[i])) for i in range(graph.n_a)} | {(int(lb[j]), j) for j in range(graph.n_b)}
    return early, late


def edge_index(graph: TemporalGraph, v: VertexRef, e: Edge) -> int:
    """1-based rank of ``e`` among the edges at ``v``, ascending by label."""
    require_locally_injective(graph)
    if not graph.has_edge(e):
        raise ForeignEdgeError(f"edge {e} is not an edge of {graph!r}")
    gid = graph.vid(v)
    if gid not in graph.endpoints(e):
        raise ValueError(f"edge {e} is not incident to {v!r}")
    if isinstance(graph, TemporalBiClique):
        return int(graph.rank_at_a[e] if v.side == "A" else graph.rank_at_b[e])
    row = np.delete(graph.labels[gid], gid)
    return int(np.count_nonzero(row < graph.label(e))) + 1


# --- induced sub-instances ------------------------------------------------

@dataclass(frozen=True)
class SubMap:
    """Index correspondence between a sub-instance and its parent."""

    a_idx: tuple[int, ...]
    b_idx: tuple[int, ...]

    def lift_edge(self, e: Edge) -> Edge:
        return (self.a_idx[e[0]], self.b_idx[e[1]])

    def lift_edges(self, edges: Iterable[Edge]) -> set[Edge]:
        a, b = self.a_idx, self.b_idx
        return {(a[i], b[j]) for i, j in edges}

    def restrict_edge(self, e: Edge) -> Edge:
        return (self.a_idx.index(e[0]), self.b_idx.index(e[1]))

    def compose(self, inner: SubMap) -> SubMap:
        """Map of ``inner`` (a sub-instance of self's sub-instance) to self's parent."""
        return SubMap(tuple(self.a_idx[i] for i in inner.a_idx), tuple(self.b_idx[j] for j in inner.b_idx))

    @classmethod
    def identity(cls, n_a: int, n_b: int) -> SubMap:
        return cls(tuple(range(n_a)), tuple(range(n_b)))


def induced_subinstance(graph: TemporalBiClique, keep_a: Iterable[int], keep_b: Iterable[int]) -> tuple[TemporalBiClique, SubMap]:
    ka = sorted(set(int(i) for i in keep_a))
    kb = sorted(set(int(j) for j in keep_b))
    if not ka or not kb:
        raise ValueError("induced sub-instance needs a non-empty vertex set on both sides")
    if ka[0] < 0 or ka[-1] >= graph.n_a or kb[0] < 0 or kb[-1] >= graph.n_b:
        raise ValueError("kept vertex out of range")
    sub = TemporalBiClique(graph.labels[np.ix_(ka, kb)])
    return sub, SubMap(tuple(ka), tuple(kb))

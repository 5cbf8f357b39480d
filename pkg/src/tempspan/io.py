"""Reading and writing ``.tg`` graph files and ``.sp`` spanner files.

.tg::

    tg 1
    biclique <nA> <nB>        (or: clique <n>)
    <i> <j> <label>           one line per edge, sorted by (i, j)

.sp::

    sp 1 <bi|full> <count>
    <i> <j>                   one line per edge, sorted
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .core import Spanner, TemporalBiClique, TemporalClique, TemporalGraph


class FormatError(ValueError):
    pass


def format_graph(graph: TemporalGraph) -> str:
    lines = ["tg 1"]
    if isinstance(graph, TemporalBiClique):
        lines.append(f"biclique {graph.n_a} {graph.n_b}")
    else:
        lines.append(f"clique {graph.n}")
    lab = graph.labels
    lines.extend(f"{i} {j} {int(lab[i, j])}" for i, j in graph.edges())
    return "\n".join(lines) + "\n"


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise FormatError(f"line {lineno}: expected {count} fields, got {len(parts)}")
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"line {lineno}: non-integer field") from None
    if any(v < 0 for v in vals):
        raise FormatError(f"line {lineno}: negative value")
    return vals


def parse_graph(text: str) -> TemporalGraph:
    lines = text.splitlines()
    if len(lines) < 2 or lines[0].strip() != "tg 1":
        raise FormatError("missing 'tg 1' header")
    head = lines[1].split()
    body = [ln for ln in lines[2:] if ln.strip()]
    if head[:1] == ["biclique"] and len(head) == 3:
        n_a, n_b = _ints(" ".join(head[1:]), 2, 2)
        if n_a < 1 or n_b < 1:
            raise FormatError("bi-clique sides must be non-empty")
        expected = [(i, j) for i in range(n_a) for j in range(n_b)]
        mat = np.zeros((n_a, n_b), dtype=np.int64)
    elif head[:1] == ["clique"] and len(head) == 2:
        (n,) = _ints(head[1], 2, 1)
        expected = [(i, j) for i in range(n) for j in range(i + 1, n)]
        mat = np.zeros((n, n), dtype=np.int64)
    else:
        raise FormatError(f"bad graph header {lines[1]!r}")
    if len(body) != len(expected):
        raise FormatError(f"expected {len(expected)} edge lines, found {len(body)}")
    for lineno, (line, want) in enumerate(zip(body, expected), start=3):
        i, j, lab = _ints(line, lineno, 3)
        if (i, j) != want:
            raise FormatError(f"line {lineno}: expected edge {want}, found {(i, j)}")
        mat[i, j] = lab
    if head[0] == "biclique":
        return TemporalBiClique(mat)
    return TemporalClique(mat)


def format_spanner(S: Spanner) -> str:
    kind = "bi" if S.kind == "bi_spanner" else "full"
    edges = S.sorted_edges()
    lines = [f"sp 1 {kind} {len(edges)}"] + [f"{i} {j}" for i, j in edges]
    return "\n".join(lines) + "\n"


def parse_spanner(text: str) -> Spanner:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty spanner file")
    head = lines[0].split()
    if len(head) != 4 or head[:2] != ["sp", "1"] or head[2] not in ("bi", "full"):
        raise FormatError(f"bad spanner header {lines[0]!r}")
    (count,) = _ints(head[3], 1, 1)
    if len(lines) - 1 != count:
        raise FormatError(f"header announces {count} edges, found {len(lines) - 1}")
    edges = [tuple(_ints(ln, k, 2)) for k, ln in enumerate(lines[1:], start=2)]
    if len(set(edges)) != len(edges):
        raise FormatError("duplicate edge in spanner file")
    return Spanner(frozenset(edges), "bi_spanner" if head[2] == "bi" else "spanner")


def read_graph(path) -> TemporalGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(graph: TemporalGraph, path) -> None:
    Path(path).write_text(format_graph(graph), encoding="utf-8", newline="\n")


def read_spanner(path) -> Spanner:
    return parse_spanner(Path(path).read_text(encoding="utf-8"))


def write_spanner(S: Spanner, path) -> None:
    Path(path).write_text(format_spanner(S), encoding="utf-8", newline="\n")

import numpy as np
import pytest

from tempspan.core import TemporalBiClique
from tempspan.core import is_extremally_matched
from tempspan.generators import (
    BagMap,
    product,
    random_biclique,
    random_clique,
    random_matched_biclique,
    ringshift,
    smsmbg,
)
from tempspan.io import format_graph
from tempspan.reach import earliest_arrivals, edge_stream


def test_ringshift_rows_and_columns():
    g = ringshift(4)
    row = g.labels[1]
    assert np.argsort(row).tolist() == [1, 2, 3, 0]
    col = g.labels[:, 0]
    assert np.argsort(col).tolist() == [0, 3, 2, 1]


def test_ringshift_one():
    assert ringshift(1).labels.tolist() == [[0]]


def test_ringshift_not_injective():
    assert not ringshift(3).injective
    assert sorted(ringshift(3).labels.ravel().tolist()) == [0, 0, 0, 1, 1, 1, 2, 2, 2]


def test_smsmbg_label_example():
    P, bags = smsmbg(2, 2)
    a = bags.a_index(0, 1)
    b = bags.b_index(1, 0)
    assert P.label((a, b)) == 3


@pytest.mark.parametrize("m,k", [(1, 1), (2, 3), (4, 4)])
def test_product_sizes(m, k):
    P, _ = smsmbg(m, k)
    assert P.n_a == P.n_b == m * k


def test_smsmbg_single_edge():
    P, _ = smsmbg(1, 1)
    assert P.edge_count == 1


def test_product_preserves_order():
    G, H = random_biclique(3, 2, 0), random_biclique(2, 3, 1)
    P, bags = product(G, H)
    for e in P.edges():
        for f in P.edges():
            ge, gf = bags.edge(e), bags.edge(f)
            if G.label(ge) < G.label(gf):
                assert P.label(e) < P.label(f)


@pytest.mark.parametrize("seed", range(5))
def test_contraction_of_paths(seed):
    G, H = random_biclique(3, 3, seed), random_biclique(2, 2, seed + 10)
    P, bags = product(G, H)
    rng = np.random.default_rng(seed)
    src = P.vref(int(rng.integers(P.n_a)))
    arr = earliest_arrivals(P, [src], 0)
    for v, (_, parent) in arr.items():
        path = []
        while parent is not None:
            path.append(parent)
            u = [x for x in P.endpoints(parent) if x != P.vid(v)][0]
            v = P.vref(u)
            parent = arr[v][1]
        path.reverse()
        projected = [G.label(bags.edge(e)) for e in path]
        assert projected == sorted(projected)


def test_random_biclique_permutation():
    g = random_biclique(8, 8, seed=7)
    assert sorted(g.labels.ravel().tolist()) == list(range(1, 65))
    assert format_graph(g) == format_graph(random_biclique(8, 8, seed=7))
    assert g != random_biclique(8, 8, seed=8)


def test_random_clique_permutation():
    c = random_clique(6, seed=2)
    assert sorted(c.label(e) for e in c.edges()) == list(range(1, 16))


def test_bagmap_roundtrip():
    bags = BagMap(3, 2)
    assert bags.a(bags.a_index(2, 1)) == (2, 1)
    assert bags.b(bags.b_index(4, 1)) == (4, 1)


def test_product_handles_huge_labels():
    G = random_biclique(2, 2, 0)
    H = TemporalBiClique([[2**40, 1], [2, 2**40 + 1]])
    P, _ = product(TemporalBiClique(G.labels * 2**30), H)
    assert P.injective
    assert len(edge_stream(P)) == 16


@pytest.mark.parametrize("n", [1, 2, 3, 10])
def test_random_matched_biclique(n):
    g = random_matched_biclique(n, seed=n)
    assert g.injective and is_extremally_matched(g)
    assert g == random_matched_biclique(n, seed=n)

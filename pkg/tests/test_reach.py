import pytest

from tempspan.core import A, B, V, NonInjectiveError, TemporalBiClique, TemporalClique, make_injective
from tempspan.generators import random_biclique, ringshift
from tempspan.oracle import reach_bruteforce
from tempspan.reach import (
    all_in_sets,
    all_out_sets,
    bits_to_refs,
    connector_set,
    earliest_arrivals,
    in_set,
    latest_departures,
    out_set,
    verify_bispanner,
    verify_spanner,
)


def test_earliest_arrivals_small(two_by_two):
    arr = earliest_arrivals(two_by_two, [A(0)], 1)
    labels = {v: t for v, (t, _) in arr.items()}
    assert labels == {A(0): 1, B(0): 1, B(1): 2, A(1): 3}
    assert arr[A(0)][1] is None
    assert arr[A(1)][1] == (1, 0)


def test_earliest_arrivals_all_sources():
    g = random_biclique(3, 3, seed=0)
    refs = [g.vref(x) for x in range(g.vertex_count)]
    arr = earliest_arrivals(g, refs, 0)
    assert all(t == 0 and p is None for t, p in arr.values())


def test_earliest_arrivals_ringshift_ties():
    arr = earliest_arrivals(ringshift(4), [A(0), B(1)], 1)
    assert set(arr) == {A(0), A(2), A(3), B(1), B(2), B(3)}


def test_latest_departures_small(two_by_two):
    dep = latest_departures(two_by_two, [B(1)], 4)
    labels = {v: t for v, (t, _) in dep.items()}
    assert labels == {B(1): 4, A(0): 2, A(1): 4, B(0): 3}


def test_latest_departures_all_sinks():
    g = random_biclique(3, 2, seed=1)
    refs = [g.vref(x) for x in range(g.vertex_count)]
    assert set(latest_departures(g, refs, 10**6)) == set(refs)


def test_latest_departures_ringshift_ties():
    dep = latest_departures(ringshift(4), [A(0), B(1)], 1)
    assert set(dep) == {A(0), A(1), B(0), B(1)}


def test_out_in_ringshift():
    g = make_injective(ringshift(4))
    out, inn = out_set(g, (0, 1)), in_set(g, (0, 1))
    assert out.members == {B(1), B(2), B(3), A(2), A(3), A(0)}
    assert inn.members == {A(0), A(1), B(0), B(1)}
    assert len(connector_set(g, (0, 1))) == 7


def test_out_of_latest_edge():
    g = random_biclique(4, 4, seed=5)
    last = max(g.edges(), key=g.label)
    r = out_set(g, last)
    assert r.members == {A(last[0]), B(last[1])}
    assert r.tree_edges == {last}


def test_in_of_earliest_edge():
    g = random_biclique(4, 4, seed=5)
    first = min(g.edges(), key=g.label)
    assert in_set(g, first).members == {A(first[0]), B(first[1])}


def test_connector_single_edge():
    g = TemporalBiClique([[3]])
    assert connector_set(g, (0, 0)) == {(0, 0)}


def test_out_requires_injective():
    with pytest.raises(NonInjectiveError):
        out_set(ringshift(3), (0, 0))


@pytest.mark.parametrize("seed", range(5))
def test_sets_match_bruteforce(seed):
    g = random_biclique(5, 5, seed=seed)
    for e in g.edges():
        a, b = A(e[0]), B(e[1])
        t = g.label(e)
        expected_out = reach_bruteforce(g, a, t) | reach_bruteforce(g, b, t)
        assert out_set(g, e).members == expected_out
        rev = TemporalBiClique(g.labels.max() - g.labels)  # reversing time turns In into Out
        expected_in = reach_bruteforce(rev, a, rev.label(e)) | reach_bruteforce(rev, b, rev.label(e))
        assert in_set(g, e).members == expected_in


@pytest.mark.parametrize("seed", range(3))
def test_tree_sizes_and_witnesses(seed):
    g = random_biclique(6, 5, seed=seed)
    for e in g.edges():
        for r in (out_set(g, e), in_set(g, e)):
            assert len(r.tree_edges) == len(r.members) - 1
            for v, edge in r.tree.items():
                assert g.vid(v) in g.endpoints(edge)


def test_bitsets_agree_with_sweeps():
    g = random_biclique(5, 6, seed=9)
    outs, ins = all_out_sets(g), all_in_sets(g)
    for e in g.edges():
        assert bits_to_refs(g, outs[e]) == out_set(g, e).members
        assert bits_to_refs(g, ins[e]) == in_set(g, e).members


@pytest.mark.parametrize("seed", range(3))
def test_connector_joins_in_to_out(seed):
    g = random_biclique(6, 6, seed=seed)
    for e in g.edges()[::5]:
        F = connector_set(g, e)
        ins, outs = in_set(g, e).members, out_set(g, e).members
        assert len(F) == len(ins) + len(outs) - 3
        for u in ins:
            reached = earliest_arrivals(g, [u], 0, edges=F)
            assert outs <= set(reached)


def test_verify_full_edge_set():
    g = ringshift(2)
    rep = verify_bispanner(g, g.edges())
    assert rep.ok and rep.witness is None and rep.pairs_checked == 4


def test_verify_witness_ringshift2():
    rep = verify_bispanner(ringshift(2), [(0, 0), (0, 1), (1, 1)])
    assert not rep.ok
    assert rep.witness == (A(1), B(0))


def test_verify_spanner_k3(k3):
    assert verify_spanner(k3, k3.edges()).ok
    rep = verify_spanner(k3, [(0, 1), (1, 2)])
    assert not rep.ok and rep.witness == (V(2), V(0))


def test_verify_spanner_single_vertex():
    rep = verify_spanner(TemporalClique([[0]]), [])
    assert rep.ok and rep.pairs_checked == 0


def test_verify_rejects_foreign_edges():
    with pytest.raises(ValueError):
        verify_bispanner(ringshift(2), [(0, 2)])

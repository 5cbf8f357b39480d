import numpy as np
import pytest

from tempspan.core import A, TemporalBiClique, is_extremally_matched, make_injective
from tempspan.generators import random_biclique, ringshift
from tempspan.oracle import min_bispanner_bruteforce
from tempspan.reach import verify_bispanner
from tempspan.reduce import dismount_exhaustive, find_dismountable, lift_spanner


def test_find_dismountable_small(two_by_two):
    step = find_dismountable(two_by_two)
    assert step.removed == A(0) and step.via == A(1)
    assert set(step.included_edges) == {(0, 0), (1, 0)}


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_ringshift_has_no_dismountable_vertex(n):
    g = make_injective(ringshift(n))
    assert find_dismountable(g) is None
    reduced, trace = dismount_exhaustive(g)
    assert reduced == g and trace.steps == []


def test_unequal_sides_always_dismountable():
    assert find_dismountable(TemporalBiClique([[1, 2]])) is not None


def test_exhaustive_small(two_by_two):
    reduced, trace = dismount_exhaustive(two_by_two)
    assert (reduced.n_a, reduced.n_b) == (1, 1)
    assert len(trace.steps) == 2
    assert sum(len(s.included_edges) for s in trace.steps) == 4
    lifted = lift_spanner(trace, reduced.edges())
    assert len(lifted) == 3
    assert verify_bispanner(two_by_two, lifted).ok


@pytest.mark.parametrize("k", [1, 2, 5, 9])
def test_one_by_k(k):
    g = TemporalBiClique(np.arange(k)[None, :] + 1)
    reduced, trace = dismount_exhaustive(g)
    assert (reduced.n_a, reduced.n_b) == (1, 1)
    assert len(trace.steps) == k - 1


def test_lift_empty_trace_is_identity():
    g = make_injective(ringshift(3))
    reduced, trace = dismount_exhaustive(g)
    S = {(0, 0), (1, 2)}
    assert lift_spanner(trace, S).edges == S


def test_lift_strict_rejects_non_spanner(two_by_two):
    reduced, trace = dismount_exhaustive(two_by_two)
    with pytest.raises(ValueError):
        lift_spanner(trace, set(), strict=True)


def test_step_invariants_and_replay():
    g = random_biclique(7, 5, seed=4)
    reduced, trace = dismount_exhaustive(g)
    assert is_extremally_matched(reduced)
    alive_a, alive_b = set(range(g.n_a)), set(range(g.n_b))
    for s in trace.steps:
        e1, e2 = s.included_edges
        if s.removed.side == "A":
            alive_a.discard(s.removed.index)
            assert g.label(e1) <= g.label(e2)
            assert e1[1] == e2[1] and {e1[0], e2[0]} == {s.removed.index, s.via.index}
        else:
            alive_b.discard(s.removed.index)
            assert g.label(e1) <= g.label(e2)
            assert e1[0] == e2[0] and {e1[1], e2[1]} == {s.removed.index, s.via.index}
    assert trace.remap.a_idx == tuple(sorted(alive_a))
    assert trace.remap.b_idx == tuple(sorted(alive_b))
    assert np.array_equal(reduced.labels, g.labels[np.ix_(sorted(alive_a), sorted(alive_b))])


def test_six_by_four_oracle_lift():
    g = random_biclique(6, 4, seed=0)
    reduced, trace = dismount_exhaustive(g)
    assert reduced.n_a == reduced.n_b <= 4
    S, _ = min_bispanner_bruteforce(reduced)
    lifted = lift_spanner(trace, S, strict=True)
    assert verify_bispanner(g, lifted).ok
    assert len(lifted) <= len(S) + 2 * len(trace.steps)


@pytest.mark.parametrize("seed", range(20))
def test_fixed_point_iff_matched(seed):
    n = 2 + seed % 7
    g = random_biclique(n, n, seed=seed)
    assert (find_dismountable(g) is None) == is_extremally_matched(g)

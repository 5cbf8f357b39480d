from fractions import Fraction
from math import comb

import pytest

from tempspan.core import A, B, TemporalBiClique, make_injective
from tempspan.diagnostics import (
    EdgeProfile,
    activity_positions,
    label_spread,
    pivot_profile,
    reverted_profile,
    steep_edges,
)
from tempspan.generators import random_biclique, random_matched_biclique, ringshift, smsmbg
from tempspan.oracle import reach_bruteforce
from tempspan.reach import in_set, out_set


def R(n):
    return make_injective(ringshift(n))


def test_edge_profile_summaries():
    p = EdgeProfile({(0, 0): 3, (0, 1): 5, (1, 0): 5, (1, 1): 1})
    assert (p.max, p.min, p.argmax, p.argmin) == (5, 1, (0, 1), (1, 1))
    assert p.histogram == {1: 1, 3: 1, 5: 2}


@pytest.mark.parametrize("n", [3, 4, 8])
def test_pivot_profile_ringshift(n):
    assert set(pivot_profile(R(n)).values.values()) == {2}


def test_pivot_profile_smsmbg():
    assert pivot_profile(make_injective(smsmbg(4, 4)[0])).max <= 8


def test_pivot_profile_single_edge():
    assert pivot_profile(TemporalBiClique([[1]])).values == {(0, 0): 2}


@pytest.mark.parametrize("seed", range(3))
def test_profiles_match_bruteforce(seed):
    g = random_biclique(4, 4, seed)
    prof = pivot_profile(g)
    rev = TemporalBiClique(g.labels.max() - g.labels)
    for e in g.edges():
        ends = (A(e[0]), B(e[1]))
        outs = set().union(*(reach_bruteforce(g, v, g.label(e)) for v in ends))
        ins = set().union(*(reach_bruteforce(rev, v, rev.label(e)) for v in ends))
        assert prof[e] == len(ins & outs)


@pytest.mark.parametrize("c", [Fraction(1, 8), Fraction(1, 2), Fraction(1)])
def test_no_steep_edges_in_ringshift(c):
    assert steep_edges(R(6), c) == []


def test_forced_steep_edge():
    g = TemporalBiClique([[7, 8, 9], [1, 2, 3], [4, 5, 6]])
    assert (0, 0) in steep_edges(g, Fraction(2, 3))


def test_steep_edges_need_square():
    with pytest.raises(ValueError):
        steep_edges(TemporalBiClique([[1, 2]]), Fraction(1, 2))


@pytest.mark.parametrize("seed", range(10))
def test_steep_edges_are_pivots(seed):
    g = random_matched_biclique(16, seed)
    prof = pivot_profile(g)
    found = 0
    for c in (Fraction(1, 8), Fraction(1, 4), Fraction(1, 2)):
        for e in steep_edges(g, c):
            found += 1
            assert prof[e] >= 2 * c * 16
    assert found > 0


def test_steep_without_matching_can_miss_pivot():
    # the pivot guarantee leans on In/Out symmetry, which needs an extremal matching
    g = random_biclique(16, 16, seed=7)
    c = Fraction(1, 4)
    prof = pivot_profile(g)
    assert any(prof[e] < 2 * c * 16 for e in steep_edges(g, c))


def test_label_spread_full_range():
    g = random_biclique(5, 5, seed=0)
    assert label_spread(g, A(2), 1, 5) == 5
    assert label_spread(g, B(4), 1, 5, dual=True) == 5


@pytest.mark.parametrize("t", range(5))
def test_label_spread_ringshift(t):
    assert label_spread(R(5), A(0), t + 1, t + 1) == 1


def test_label_spread_bad_range():
    with pytest.raises(ValueError):
        label_spread(R(3), A(0), 2, 1)


@pytest.mark.parametrize("n", [3, 5, 8])
def test_reverted_profile_ringshift(n):
    raw = ringshift(n)
    prof = reverted_profile(R(n))
    assert prof.min == 0
    for e, v in prof.values.items():
        if raw.label(e) in (0, n - 1):
            assert v == 0


@pytest.mark.parametrize("m,k", [(4, 4), (6, 3)])
def test_reverted_profile_smsmbg(m, k):
    P = make_injective(smsmbg(m, k)[0])
    assert reverted_profile(P, all_edges=True).min >= (m - 1) * comb(k, 2)


def test_reverted_profile_dominates_product():
    g = R(7)
    prof = reverted_profile(g, all_edges=True)
    for e, v in prof.values.items():
        ins, outs = in_set(g, e).members, out_set(g, e).members
        missing_a = sum(1 for i in range(g.n_a) if A(i) not in ins)
        missing_b = sum(1 for j in range(g.n_b) if B(j) not in outs)
        assert v >= missing_a * missing_b


def test_activity_positions_contiguous():
    g = random_biclique(8, 8, seed=4)
    for b in range(8):
        for v, pos in activity_positions(g, b).items():
            if pos:
                assert pos == list(range(pos[0], pos[-1] + 1))

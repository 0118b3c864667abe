import math
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from extremal_betti.graph import count_triangles, girth, new_graph
from extremal_betti.invariants import (
    EdgeAbsent, NotDisjoint, PairClass, a_invariant, b_invariant, classify_pair,
    compute_invariants, conditions, f_invariant, has_g1, pair_counts, r_invariant,
    s_invariant, type2_identity_sum,
)

from conftest import graph

C3 = graph(5, (1, 2), (1, 3), (2, 3))
C4 = graph(5, (1, 2), (2, 3), (3, 4), (1, 4))
TWO_EDGES = graph(5, (1, 2), (3, 4))
K12 = graph(5, (1, 2), (1, 3))
# triangle 123 with whisker 34, plus t = 5 joined to 1, 2, 4
F2 = graph(5, (1, 2), (1, 3), (2, 3), (3, 4), (1, 5), (2, 5), (4, 5))


@pytest.mark.parametrize("pair, expected", [
    (((1, 2), (5, 6)), PairClass.DISCONNECTED),
    (((1, 2), (4, 5)), PairClass.TYPE1),
    (((2, 3), (4, 5)), PairClass.TYPE2),
])
def test_classify_worked(worked_graph, pair, expected):
    assert classify_pair(worked_graph, *pair) is expected
    assert classify_pair(worked_graph, *reversed(pair)) is expected


def test_classify_four_cycle():
    assert classify_pair(C4, (1, 2), (3, 4)) is PairClass.FOUR_CYCLE_BOUND


def test_classify_errors():
    with pytest.raises(NotDisjoint):
        classify_pair(C3, (1, 2), (2, 3))
    with pytest.raises(EdgeAbsent):
        classify_pair(C3, (1, 2), (4, 5))


def test_worked_bundle(worked_graph):
    inv = compute_invariants(worked_graph)
    assert (inv.p0, inv.p1, inv.p2) == (8, 5, 1)
    assert inv.bG == 22 and inv.c3 == 2 and inv.girth == 3
    assert inv.g1 and not inv.g3


def test_worked_f_by_hand(worked_graph):
    # the lone type-2 pair (23, 45) has rim {2, 3, 5}; no t in {1, 6, 7, 8} sees all three
    assert f_invariant(worked_graph) == 0


def test_pair_counts_small():
    assert pair_counts(graph(5, (1, 2))) == (0, 0, 0)
    matching = graph(8, (1, 2), (3, 4), (5, 6), (7, 8))
    assert pair_counts(matching) == (math.comb(4, 2), 0, 0)


def test_a_invariant():
    assert a_invariant(K12) == 1
    assert a_invariant(C4) == 4
    assert a_invariant(new_graph(5)) == 0


def test_b_invariant():
    assert b_invariant(C3) == 0
    assert b_invariant(TWO_EDGES) == 4


def test_s_invariant():
    assert s_invariant(TWO_EDGES, 5) == 1
    assert s_invariant(C3, 5) == 0
    assert s_invariant(new_graph(5), 5) == 0
    # the other reading would count the two vertices outside the triangle
    assert s_invariant(C3, 5, count_uncovered=True) == 1


def test_f_invariant():
    assert f_invariant(F2) == 1
    # two type-2 pairs of F2 lead to the same vertex set
    assert f_invariant(F2, dedupe=False) == 2
    assert f_invariant(C4) == 0


def test_r_invariant():
    assert r_invariant(C3) == 0
    assert r_invariant(TWO_EDGES) == 4


def test_conditions():
    g1, g2, *_ = conditions(C3)
    assert (g1, g2) == (False, True)
    g1, g2, *_ = conditions(graph(5, (1, 2)))
    assert (g1, g2) == (False, True)
    inv = compute_invariants(C4)
    assert (inv.p0, inv.p1, inv.p2, inv.c4, inv.g1) == (0, 0, 0, 1, False)


def test_bundle_json_friendly(worked_graph):
    d = compute_invariants(graph(5, (1, 2), (2, 3))).as_dict()
    assert d["girth"] is None
    assert isinstance(d["rG"], int)


# -- properties ---------------------------------------------------------------

graphs = st.integers(5, 7).flatmap(
    lambda n: st.sets(st.sampled_from(list(combinations(range(1, n + 1), 2))), min_size=1).map(
        lambda es: new_graph(n, es)))


@settings(max_examples=200, deadline=None)
@given(graphs)
def test_g1_iff_nonfour_cycle_pairs_iff_b_positive(g):
    p0, p1, p2 = pair_counts(g)
    assert has_g1(g) == (p0 + p1 + p2 > 0) == (b_invariant(g) > 0)


@settings(max_examples=150, deadline=None)
@given(graphs, st.randoms(use_true_random=False))
def test_invariants_are_label_free(g, rnd):
    perm = list(g.universe)
    rnd.shuffle(perm)
    h = g.relabel(dict(zip(g.universe, perm)))
    assert compute_invariants(h) == compute_invariants(g)


@settings(max_examples=150, deadline=None)
@given(graphs)
def test_type2_identity_under_g3(g):
    inv = compute_invariants(g)
    if inv.g1 and inv.g3 and inv.c3:
        assert (g.n - 4) * inv.p2 - inv.fG == type2_identity_sum(g)


@settings(max_examples=150, deadline=None)
@given(graphs)
def test_triangle_free_graphs_have_no_type2_pairs(g):
    if girth(g) > 3:
        assert pair_counts(g)[2] == 0
        assert f_invariant(g) == 0
    assert (count_triangles(g) > 0) == (girth(g) == 3)


@settings(max_examples=100, deadline=None)
@given(graphs)
def test_r_has_small_denominator(g):
    r = r_invariant(g)
    assert isinstance(r, Fraction) and 6 % r.denominator == 0 and r >= 0

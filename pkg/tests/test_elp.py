import pytest

from tightcuts.corpus import gen_h_n, gen_named
from tightcuts.elp import (all_two_separation_cuts, barrier_cuts, elp_set,
                           enumerate_nontrivial_barriers, is_barrier, is_barrier_cut,
                           lift_from_contraction, two_separation_cuts, two_separations)
from tightcuts.errors import (BadCertificate, EmptySet, GraphMismatch, GraphTooLarge,
                              NotTight, TrivialCut)
from tightcuts.graphcore import build_graph, contract, make_cut


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


# -- barriers --------------------------------------------------------------


def test_is_barrier_on_c6():
    g = cycle(6)
    assert is_barrier(g, {0, 2})        # distance-2 pair
    assert is_barrier(g, {0, 2, 4})     # alternating triple
    assert is_barrier(g, {0})           # every singleton
    assert not is_barrier(g, {0, 3})    # antipodal pair leaves two even paths
    assert not is_barrier(g, {0, 1})
    with pytest.raises(EmptySet):
        is_barrier(g, set())


def test_enumerate_nontrivial_barriers_c6():
    g = cycle(6)
    barriers = enumerate_nontrivial_barriers(g)
    assert len(barriers) == 8
    sets = {b.vertices for b in barriers}
    assert frozenset({0, 2, 4}) in sets and frozenset({1, 3, 5}) in sets
    assert all(frozenset({i, (i + 2) % 6}) in sets for i in range(6))
    maximal = [b for b in barriers if b.maximal]
    assert {b.vertices for b in maximal} == {frozenset({0, 2, 4}), frozenset({1, 3, 5})}


def test_bicritical_graphs_have_no_nontrivial_barriers():
    assert enumerate_nontrivial_barriers(gen_named("k4")) == []
    assert enumerate_nontrivial_barriers(gen_named("petersen")) == []


def test_barrier_enumeration_cap():
    with pytest.raises(GraphTooLarge):
        enumerate_nontrivial_barriers(cycle(22))


def test_barrier_odd_components_witness():
    g = cycle(6)
    b = next(x for x in enumerate_nontrivial_barriers(g)
             if x.vertices == frozenset({0, 2}))
    assert sorted(map(sorted, b.odd_components)) == [[1], [3, 4, 5]]


# -- barrier cuts ----------------------------------------------------------


def test_barrier_cuts_c6():
    g = cycle(6)
    cuts = [e for e in barrier_cuts(g) if not e.cut.is_trivial]
    assert {e.cut.shore_pair for e in cuts} == {
        make_cut(g, {i, i + 1, i + 2}).shore_pair for i in range(3)}
    for e in cuts:
        assert e.kind == "barrier-cut"
        assert e.certificate.component in e.cut.shore_pair


def test_is_barrier_cut_c6():
    g = cycle(6)
    found = is_barrier_cut(g, {3, 4, 5})
    # either side of the cut may be the certified odd component
    assert found is not None and is_barrier(g, found.vertices)
    assert {frozenset({3, 4, 5}), frozenset({0, 1, 2})} & set(found.odd_components)
    assert is_barrier_cut(g, {0, 2, 4}) is None  # disconnected side


def test_is_barrier_cut_trivial_side():
    got = is_barrier_cut(gen_named("k4"), {0, 1, 2})
    assert got is not None and got.vertices == frozenset({3})


# -- 2-separations ---------------------------------------------------------


def test_two_separations_c6():
    seps = two_separations(cycle(6))
    assert {s.pair for s in seps} == {frozenset({0, 3}), frozenset({1, 4}),
                                      frozenset({2, 5})}
    for s in seps:
        assert sorted(len(c) for c in s.components) == [2, 2]


def test_two_separations_absent():
    assert two_separations(gen_named("k4")) == []
    assert two_separations(gen_named("petersen")) == []


def test_two_separations_h1():
    g = gen_h_n(1)
    seps = two_separations(g)
    assert len(seps) == 1
    assert {g.labels[v] for v in seps[0].pair} == {"v1", "u3"}


def test_two_separation_cuts_of_one_separation():
    g = cycle(6)
    sep = next(s for s in two_separations(g) if s.pair == frozenset({0, 3}))
    cuts = two_separation_cuts(g, sep)
    assert len(cuts) == 2
    assert {c.cut.shore_pair for c in cuts} == {
        make_cut(g, {0, 1, 2}).shore_pair, make_cut(g, {1, 2, 3}).shore_pair}
    for c in cuts:
        assert c.kind == "two-separation-cut"
        assert c.certificate.attach_vertex in sep.pair


def test_all_two_separation_cuts_dedupes():
    cuts = all_two_separation_cuts(cycle(6))
    assert len(cuts) == 3  # each tight cut arises from two separations


# -- ELP sets --------------------------------------------------------------


def test_elp_set_c6():
    g = cycle(6)
    cut = make_cut(g, {0, 1, 2})
    members = elp_set(g, cut)
    assert len(members) == 1
    assert members[0].cut.shore_pair == cut.shore_pair
    assert members[0].kind == "barrier-cut"


def test_elp_set_h2_v_side():
    g = gen_h_n(2)
    shore = {v for v in g.vertices if g.labels[v].startswith("v")}
    members = elp_set(g, make_cut(g, shore))
    got = {frozenset(g.labels[v] for v in m.cut.small_shore) for m in members}
    assert got == {frozenset({"u1", "u2", "u3"}), frozenset({"v3", "v4", "v5"})}


def test_elp_set_validation():
    g = cycle(6)
    with pytest.raises(TrivialCut):
        elp_set(g, make_cut(g, {0}))
    with pytest.raises(NotTight) as err:
        elp_set(g, make_cut(g, {0, 2, 4}))
    assert err.value.witness.is_perfect
    other = cycle(6)
    assert other == g
    with pytest.raises(GraphMismatch):
        elp_set(g, make_cut(cycle(8), {0, 1, 2}))


# -- lifting certificates from a shore contraction -------------------------


def test_lift_two_separation():
    g = cycle(12)
    far = frozenset(range(5, 12))
    h = contract(g, far, new_id=99)
    # {1, 4} separates the contraction into {2,3} and {0, 99}: both even
    lifted = lift_from_contraction(g, h, 99, 5, {1, 4})
    assert lifted == frozenset({1, 4})
    # a separation pair involving the contracted vertex swaps in u2
    lifted = lift_from_contraction(g, h, 99, 5, {2, 99})
    assert lifted == frozenset({2, 5})


def test_lift_barrier():
    g = cycle(8)
    h = contract(g, frozenset({3, 4, 5, 6, 7}), new_id=50)
    # {1, 50} is a barrier of the contraction (odd components {0} and {2})
    lifted = lift_from_contraction(g, h, 50, 3, {1, 50})
    assert lifted == frozenset({1, 3})


def test_lift_rejects_junk():
    g = cycle(12)
    h = contract(g, frozenset(range(5, 12)), new_id=99)
    with pytest.raises(BadCertificate):
        lift_from_contraction(g, h, 99, 5, {1, 2})   # neither kind in h
    with pytest.raises(BadCertificate):
        lift_from_contraction(g, h, 99, 5, {1, 77})  # not inside h
    with pytest.raises(BadCertificate):
        lift_from_contraction(g, h, 99, 8, {2, 99})  # lands on a non-separation


# -- structural property of barriers ---------------------------------------


def test_barriers_are_independent_with_no_even_components(corpus6):
    for g in corpus6:
        for b in enumerate_nontrivial_barriers(g):
            for u in b.vertices:
                assert b.vertices.isdisjoint(g.adjacency[u])
            assert all(len(c) % 2 == 1 for c in b.odd_components)

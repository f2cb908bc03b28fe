import json

import pytest

from tightcuts.corpus import gen_h_n, gen_named
from tightcuts.decomp import (brick_number, decompose, find_nontrivial_tight_cut,
                              is_brace, is_brick)
from tightcuts.errors import NotMatchingCovered
from tightcuts.graphcore import build_graph


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


# -- bricks and braces -----------------------------------------------------


def test_named_bricks_and_braces():
    assert is_brick(gen_named("k4")) and not is_brace(gen_named("k4"))
    assert is_brick(gen_named("petersen"))
    assert is_brace(gen_named("k33")) and not is_brick(gen_named("k33"))
    assert is_brace(gen_named("c4"))
    assert not is_brick(cycle(6)) and not is_brace(cycle(6))  # has tight cuts


def test_brick_and_brace_reject_uncovered_graphs():
    p4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(NotMatchingCovered):
        is_brick(p4)


# -- cut finding -----------------------------------------------------------


def test_no_cut_in_a_brick_or_brace():
    for name in ("k4", "k33", "petersen"):
        assert find_nontrivial_tight_cut(gen_named(name)) is None
        assert find_nontrivial_tight_cut(gen_named(name), "elp-first") is None


def test_found_cut_is_one_of_the_three():
    g = cycle(6)
    expected = {frozenset({0, 1, 2}), frozenset({0, 1, 5}), frozenset({0, 4, 5})}
    for strategy in ("exhaustive", "elp-first"):
        for seed in range(5):
            cut = find_nontrivial_tight_cut(g, strategy, seed)
            assert cut.small_shore in expected


def test_seed_determinism():
    g = gen_h_n(2)
    a = decompose(g, "exhaustive", seed=7)
    b = decompose(g, "exhaustive", seed=7)
    assert json.dumps(a.to_json_obj()) == json.dumps(b.to_json_obj())


def test_unknown_strategy():
    with pytest.raises(ValueError):
        find_nontrivial_tight_cut(cycle(6), "greedy")


# -- full decompositions ---------------------------------------------------


@pytest.mark.parametrize("name,bricks,leaves", [
    ("k4", 1, 1), ("petersen", 1, 1), ("k33", 0, 1), ("c6", 0, 2),
])
def test_named_decompositions(name, bricks, leaves):
    tree = decompose(gen_named(name))
    assert brick_number(tree) == bricks
    assert len(list(tree.leaves())) == leaves


def test_single_leaf_kinds():
    assert next(decompose(gen_named("k4")).leaves()).leaf_kind == "brick"
    assert next(decompose(gen_named("k33")).leaves()).leaf_kind == "brace"


def test_c6_splits_into_two_braces():
    tree = decompose(gen_named("c6"))
    kinds = [leaf.leaf_kind for leaf in tree.leaves()]
    assert kinds == ["brace", "brace"]
    # each side is a contracted quadrilateral with one doubled edge
    for leaf in tree.leaves():
        assert leaf.graph.n == 4 and leaf.graph.m == 4


@pytest.mark.parametrize("n,bricks", [(1, 2), (2, 4), (3, 6)])
def test_block_chain_brick_numbers(n, bricks):
    g = gen_h_n(n)
    assert brick_number(decompose(g)) == bricks
    assert brick_number(decompose(g, "elp-first")) == bricks


def test_h1_leaves_are_k4_with_a_tripled_edge():
    tree = decompose(gen_h_n(1))
    for leaf in tree.leaves():
        assert leaf.leaf_kind == "brick"
        assert leaf.graph.n == 4
        assert leaf.graph.m == 8  # six K4 edges with one tripled


def test_brick_number_is_strategy_and_seed_invariant_on_small_corpus(corpus6):
    for g in corpus6:
        baseline = brick_number(decompose(g))
        for strategy in ("exhaustive", "elp-first"):
            for seed in (1, 17):
                assert brick_number(decompose(g, strategy, seed)) == baseline


def test_tree_json_shape():
    obj = decompose(gen_named("c6")).to_json_obj()
    assert set(obj) == {"vertices", "edge_count", "cut_shore", "children"}
    assert len(obj["children"]) == 2
    assert obj["vertices"] == [f"v{i}" for i in range(1, 7)]
    for child in obj["children"]:
        assert child["leaf"] == "brace"
    assert json.loads(json.dumps(obj)) == obj


def test_decompose_rejects_uncovered_graphs():
    with pytest.raises(NotMatchingCovered):
        decompose(build_graph(4, [(0, 1), (1, 2), (2, 3)]))

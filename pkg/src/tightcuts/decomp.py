"""Tight cut decomposition into bricks and braces, and the brick number.

Splitting on any non-trivial tight cut and recursing on both contractions
terminates in leaves with no non-trivial tight cut; the count of non-bipartite
leaves is independent of every choice made on the way down, which is exactly
what the seeded strategies let tests exercise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .elp import all_two_separation_cuts, barrier_cuts
from .graphcore import Cut, MultiGraph, contract, is_bipartite, make_cut
from .matching import _require_matching_covered, enumerate_tight_cuts, is_tight, odd_shores


@dataclass(frozen=True)
class DecompositionTree:
    graph: MultiGraph
    cut: Optional[Cut]  # None at leaves
    children: tuple  # () or (shore-side tree, far-side tree)
    leaf_kind: Optional[str]  # "brick" | "brace" | None for internal nodes

    def leaves(self):
        if not self.children:
            yield self
        else:
            for child in self.children:
                yield from child.leaves()

    def to_json_obj(self) -> dict:
        node = {
            "vertices": sorted(self.graph.display(v) for v in self.graph.vertices),
            "edge_count": self.graph.m,
        }
        if self.cut is None:
            node["leaf"] = self.leaf_kind
        else:
            node["cut_shore"] = sorted(self.graph.display(v) for v in self.cut.shore)
            node["children"] = [c.to_json_obj() for c in self.children]
        return node


def find_nontrivial_tight_cut(g: MultiGraph, strategy: str = "exhaustive",
                              seed: int = 0) -> Optional[Cut]:
    """A seed-chosen non-trivial tight cut, or None for bricks and braces.

    exhaustive walks all odd shores in seed-shuffled order and returns the
    first tight one; elp-first draws from the barrier-cuts and 2-separation
    cuts, which are always tight and always include one when any non-trivial
    tight cut exists.
    """
    _require_matching_covered(g)
    rng = random.Random(seed)
    if strategy == "exhaustive":
        shores = list(odd_shores(g, nontrivial_only=True))
        rng.shuffle(shores)
        # membership in the precomputed tight set equals testing shores in order
        tight = {c.shore_pair for c in enumerate_tight_cuts(g, nontrivial_only=True)}
        for shore in shores:
            if frozenset((shore, g.vertices - shore)) in tight:
                return make_cut(g, shore)
        return None
    if strategy == "elp-first":
        candidates = [e.cut for e in barrier_cuts(g) if not e.cut.is_trivial]
        candidates += [e.cut for e in all_two_separation_cuts(g) if not e.cut.is_trivial]
        seen = set()
        unique = []
        for c in candidates:
            if c.shore_pair not in seen:
                seen.add(c.shore_pair)
                unique.append(c)
        rng.shuffle(unique)
        for c in unique:
            assert is_tight(g, c.shore).tight, "ELP-cuts must be tight"
            return c
        return None
    raise ValueError(f"unknown strategy {strategy!r}")


def decompose(g: MultiGraph, strategy: str = "exhaustive", seed: int = 0) -> DecompositionTree:
    """Recursively split on non-trivial tight cuts down to bricks and braces."""
    _require_matching_covered(g)
    cut = find_nontrivial_tight_cut(g, strategy, seed)
    if cut is None:
        kind = "brace" if is_bipartite(g) else "brick"
        return DecompositionTree(g, None, (), kind)
    shore_side = contract(g, cut.complement)
    far_side = contract(g, cut.shore)
    left = decompose(shore_side, strategy, (seed * 1000003 + 1) & 0x7FFFFFFF)
    right = decompose(far_side, strategy, (seed * 1000003 + 2) & 0x7FFFFFFF)
    return DecompositionTree(g, cut, (left, right), None)


def brick_number(tree: DecompositionTree) -> int:
    return sum(1 for leaf in tree.leaves() if leaf.leaf_kind == "brick")


def is_brick(g: MultiGraph) -> bool:
    """Matching covered, no non-trivial tight cut, not bipartite."""
    _require_matching_covered(g)
    return not enumerate_tight_cuts(g, nontrivial_only=True) and not is_bipartite(g)


def is_brace(g: MultiGraph) -> bool:
    """Matching covered, no non-trivial tight cut, bipartite."""
    _require_matching_covered(g)
    return not enumerate_tight_cuts(g, nontrivial_only=True) and is_bipartite(g)
